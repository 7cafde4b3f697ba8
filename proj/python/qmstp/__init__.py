"""Bounds, heuristics and an exact oracle for the quadratic minimum spanning tree problem."""

from ._qmstp import (
    BoundResult,
    ConnectivityError,
    EnumerationReport,
    HeuristicResult,
    Instance,
    InvalidArgument,
    LinearProgram,
    LpSolution,
    ParseError,
    QmstpError,
    TracePoint,
    benchmark_csv,
    bound,
    bound_methods,
    exact,
    generate,
    parse_instance,
    parse_lp,
    quadratic_cost,
    read_instance,
    relaxation_model,
    tabu_search,
    upper_bound,
    verify,
)

__all__ = [name for name in dir() if not name.startswith("_")]
