"""Coordination games on graphs: equilibria, solvers, dynamics and inefficiency."""

from ._core import (
    BudgetExceeded,
    CoordGameError,
    DEFAULT_BUDGET,
    InfeasibleProfile,
    Instance,
    InvalidArgument,
    ParseError,
    StructuralError,
    audit_key_lemma,
    builtin_names,
    classify,
    inefficiency,
    is_k_equilibrium,
    load,
    parse,
    payoffs,
    run_dynamics,
    serialize,
    social_welfare,
    solve,
    stability_level,
    transition_value,
    verify_color_forest,
)

__all__ = [
    "BudgetExceeded",
    "CoordGameError",
    "DEFAULT_BUDGET",
    "InfeasibleProfile",
    "Instance",
    "InvalidArgument",
    "ParseError",
    "StructuralError",
    "audit_key_lemma",
    "builtin_names",
    "classify",
    "inefficiency",
    "is_k_equilibrium",
    "load",
    "parse",
    "payoffs",
    "run_dynamics",
    "serialize",
    "social_welfare",
    "solve",
    "stability_level",
    "transition_value",
    "verify_color_forest",
]
