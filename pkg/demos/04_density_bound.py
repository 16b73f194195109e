"""
Why the giant must appear by 0.9455n
====================================

Without a giant, edges fit on non-isolated vertices: (1+eps)(1-i(t)) >= t.
The ODE keeps i(t) too high for this past t ~ 0.945.
"""
from achlioptas import AchlioptasProcess, MINP1, ProcessConfig, solve
from achlioptas.density import audit_process, critical_time, delta_of, incapacity_check

sol = solve()
for eps in (1e-1, 1e-3, 1e-4, 1e-6):
    print(f"eps={eps:g}: delta={delta_of(eps, 0.9455):.3g}  critical time={critical_time(sol, eps)}")

print("inequality at t=0.9455, i=0.0548, eps=1e-4:", incapacity_check(0.0548, 0.9455, 1e-4))

# audit a simulated run: small components never get dense
proc = AchlioptasProcess(ProcessConfig(100_000, seed=3), MINP1)
for t in (0.5, 0.7, 0.9):
    proc.advance_to(t)
    rep = audit_process(proc, 0.5)
    print(f"t={t}: violations={len(rep.violations)}  lhs={rep.inequality_lhs:.3f}  "
          f"t_eff={rep.t_effective:.3f}  largest={rep.max_fraction:.3f}")
