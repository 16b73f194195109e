import math

import pytest
from hypothesis import given, strategies as st

from achlioptas import density, ode
from achlioptas.components import new_forest
from achlioptas.process import AchlioptasProcess, ProcessConfig
from achlioptas.strategies import MINP1


@pytest.fixture(scope="module")
def sol():
    return ode.solve(1e-4, 1.0)


def test_delta_of():
    assert density.delta_of(1, 1) == pytest.approx(2 * (4 * math.e) ** -2, rel=1e-14)
    assert density.delta_of(1, 1) == pytest.approx(0.016917, abs=1e-6)
    vals = [density.delta_of(e, 0.9455) for e in (0.1, 0.5, 1)]
    assert vals == sorted(vals)
    assert 0 < density.delta_of(0.1, 0.9455) < 1e-5


def test_log10_delta():
    assert density.log10_delta_of(0.5, 0.9) == pytest.approx(math.log10(density.delta_of(0.5, 0.9)))
    assert math.isfinite(density.log10_delta_of(1e-6, 0.9455))


@pytest.mark.parametrize("eps, t", [(0, 0.5), (-1, 0.5), (1, 0), (1, 1.2)])
def test_delta_of_rejects(eps, t):
    with pytest.raises(ValueError):
        density.delta_of(eps, t)


def test_incapacity_examples():
    assert density.incapacity_check(0.0, 1.0, 0.01)
    assert not density.incapacity_check(0.0548, 0.9455, 1e-4)
    assert density.incapacity_check(0.0548, 0.9455, 0.01)
    with pytest.raises(ValueError):
        density.incapacity_check(1.2, 0.5, 0.1)


unit = st.floats(0, 1)


@given(unit, st.floats(1e-3, 1), st.floats(1e-6, 5), st.floats(0, 5), unit, st.floats(0, 1))
def test_incapacity_monotone(i, t, eps, d_eps, d_i, d_t):
    if density.incapacity_check(i, t, eps):
        assert density.incapacity_check(i, t, eps + d_eps)
        assert density.incapacity_check(i * d_i, t, eps)
        assert density.incapacity_check(i, max(t * d_t, 1e-9), eps)


def tree_forest():
    f = new_forest(30)
    for u, v in [(0, 1), (1, 2), (2, 3), (5, 6), (7, 8), (8, 9)]:
        f.add_edge(u, v)
    return f


def test_audit_trees_clean():
    f = tree_forest()
    assert density.component_density_audit(f, f.component_edge_counts(), 0.01, 0.5) == []


def test_audit_dense_component():
    f = new_forest(200)
    for v in range(9):
        f.add_edge(v, v + 1)
    f.add_edge(0, 5)
    f.add_edge(2, 7)
    f.add_edge(3, 9)
    counts = f.component_edge_counts()
    root = f.find(0)
    assert counts[root] == 12
    out = density.component_density_audit(f, counts, 0.1, 0.1)
    assert out == [density.Violation(root, 10, 12)]
    # delta * n = 10 does not exceed the size, so the component is not "small"
    assert density.component_density_audit(f, counts, 0.1, 0.05) == []


def test_audit_rejects_unknown_component():
    f = tree_forest()
    counts = f.component_edge_counts()
    counts[1] = 3  # vertex 1 is not a root
    with pytest.raises(ValueError):
        density.component_density_audit(f, counts, 0.5, 0.1)
    with pytest.raises(ValueError):
        density.component_density_audit(f, {999: 1}, 0.5, 0.1)


def test_audit_minp1_run():
    proc = AchlioptasProcess(ProcessConfig(10**5, seed=3), MINP1)
    proc.advance_to(0.9)
    rep = density.audit_process(proc, 0.5)
    assert rep.violations == []
    assert rep.t == pytest.approx(0.9)
    assert rep.inequality_holds == (rep.inequality_lhs >= rep.t)


def test_audit_implies_inequality_when_no_giant():
    eps = 0.5
    proc = AchlioptasProcess(ProcessConfig(20000, seed=7), MINP1)
    checked = 0
    for t in (0.1, 0.2, 0.3, 0.4, 0.5, 0.6):
        proc.advance_to(t)
        rep = density.audit_process(proc, eps)
        if rep.max_fraction < rep.delta and not rep.violations:
            checked += 1
            assert density.incapacity_check(rep.i_t, rep.t_effective, eps)
    assert checked > 0


def test_critical_time(sol):
    assert density.critical_time(sol, 1e-6) <= 0.9455 + 1e-3
    assert density.critical_time(sol, 10) is None
    c = [density.critical_time(sol, e) for e in (1e-6, 1e-3, 1e-1)]
    c = [math.inf if x is None else x for x in c]
    assert c == sorted(c)


def test_report_json_round_trip(sol):
    reps = [density.density_report(e, 0.9455, sol.eval(0.9455), critical_time=density.critical_time(sol, e))
            for e in (1e-4, 0.5)]
    proc = AchlioptasProcess(ProcessConfig(2000, seed=1), MINP1)
    proc.advance_to(0.5)
    reps.append(density.audit_process(proc, 0.5))
    text = density.reports_to_json(reps)
    back = density.reports_from_json(text)
    assert back == reps
    for r in back:
        # tiny epsilon underflows the float; the log stays exact
        assert r.delta > 0 or r.log10_delta < -300
        assert r.inequality_holds == (r.inequality_lhs >= r.t)


def test_audit_underflowed_delta():
    f = tree_forest()
    assert density.delta_of(1e-3, 0.9) == 0.0
    assert density.component_density_audit(f, f.component_edge_counts(), 1e-3, 0.0) == []
    with pytest.raises(ValueError):
        density.component_density_audit(f, f.component_edge_counts(), 0.5, -0.1)
