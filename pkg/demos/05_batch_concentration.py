"""
Many runs against the ODE
=========================

Averaging seeded trials shows the isolated fraction hugging the ODE solution.
"""
from achlioptas import MINP1, ProcessConfig, emergence_summary, run_batch

batch = run_batch(ProcessConfig(50_000, t_max=1.0, marks=(0.9455,)), MINP1, trials=8, base_seed=1)
print("max |mean - ODE| over the grid:", round(batch.max_deviation, 5))
k = batch.at(0.9455)
print(f"t={batch.t[k]}: mean isolated {batch.mean_isolated[k]:.5f} +/- {batch.sd_isolated[k]:.5f}, "
      f"ODE {batch.ode_i[k]:.5f}")
print(emergence_summary(batch, 0.01))
print(batch.to_csv().splitlines()[0])
