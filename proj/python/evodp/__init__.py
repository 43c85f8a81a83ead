"""Optimal dynamic mutation-rate schedules and runtime lower bounds for
(1+lambda) evolutionary algorithms.

The heavy lifting lives in the compiled extension; this package re-exports
its public surface.
"""

from ._core import (
    ControlPolicy,
    DpTables,
    FitnessDistribution,
    GridSpec,
    HeatmapCell,
    McConfig,
    ProblemModel,
    RandomStream,
    RateGrid,
    RegretPoint,
    RunTrace,
    TraceRecord,
    TransitionDistribution,
    build_grid,
    estimate_transitions,
    flip_k_bits,
    gain_pmf,
    heatmap,
    lower_bound,
    offspring_fitness_pmf,
    onemax_eval,
    read_tables_csv,
    read_trace_csv,
    regret_trace,
    ruggedness_eval,
    run_ea,
    sample_flip_count,
    shift_binomial_pmf,
    solve_exact,
    solve_mc,
    transition_exact,
    write_optimal_csv,
    write_tables_csv,
    write_trace_csv,
)

__version__ = "0.1.0"

__all__ = [
    "ControlPolicy",
    "DpTables",
    "FitnessDistribution",
    "GridSpec",
    "HeatmapCell",
    "McConfig",
    "ProblemModel",
    "RandomStream",
    "RateGrid",
    "RegretPoint",
    "RunTrace",
    "TraceRecord",
    "TransitionDistribution",
    "build_grid",
    "estimate_transitions",
    "flip_k_bits",
    "gain_pmf",
    "heatmap",
    "lower_bound",
    "offspring_fitness_pmf",
    "onemax_eval",
    "read_tables_csv",
    "read_trace_csv",
    "regret_trace",
    "ruggedness_eval",
    "run_ea",
    "sample_flip_count",
    "shift_binomial_pmf",
    "solve_exact",
    "solve_mc",
    "transition_exact",
    "write_optimal_csv",
    "write_tables_csv",
    "write_trace_csv",
]
