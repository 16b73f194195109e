"""Simulation and numerics for two-choice (Achlioptas) random graph processes."""
from .components import ComponentForest, EdgeOutcome, new_forest
from .density import (DensityReport, audit_process, component_density_audit, critical_time,
                      delta_of, incapacity_check)
from .experiments import BatchResult, emergence_summary, run_batch
from .ode import OdeSolution, drift, drift_from_cases, solve
from .process import (AchlioptasProcess, PairSampler, ProcessConfig, SamplingMode, Trajectory,
                      emergence_time, run, sample_round, step)
from .strategies import (BOHMAN_FRIEZE, FIRST_EDGE, MINP1, BoundedSizeStrategy, Choice,
                         RoundSizes, parse_strategy)

__version__ = "0.1.0"
