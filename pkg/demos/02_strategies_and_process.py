"""
Playing the two-choice game
===========================

Each round offers two random edges; a strategy keeps one based on the four
endpoint component sizes. We compare when a 1% component appears.
"""
from achlioptas import ProcessConfig, emergence_time, parse_strategy, run

n = 100_000
for spec in ["first-edge", "bohman-frieze", "minp1", "bounded:K=2;w=1,2,3"]:
    traj = run(ProcessConfig(n, t_max=1.0, seed=1), parse_strategy(spec))
    t_em = emergence_time(traj, 0.01)
    t, iso, mx, red, steps = traj.final
    print(f"{spec:22s} emergence {t_em:.3f}  at t=1: isolated {iso:.4f}  largest {mx:.3f}  redundant {red}")

# minp1 keeps the isolated fraction as low as possible
traj = run(ProcessConfig(n, t_max=0.9455, seed=1), parse_strategy("minp1"))
print("minp1 isolated fraction at t=0.9455:", traj.final[1])

# trajectories are plain CSV
print(traj.to_csv().splitlines()[:3])
