"""Camassa-Holm solver and long-time asymptotics."""

from ._chasym import (
    DomainError,
    NumericalError,
    airy_ai,
    classify,
    decay_power,
    delta1_transition,
    eval_region2,
    eval_region3,
    eval_soliton,
    modified_wavenumber,
    phase_delta0,
    rate_of_convergence,
    simulate,
    solve_pii,
    u_initial,
)

__all__ = [
    "DomainError",
    "NumericalError",
    "airy_ai",
    "classify",
    "decay_power",
    "delta1_transition",
    "eval_region2",
    "eval_region3",
    "eval_soliton",
    "modified_wavenumber",
    "phase_delta0",
    "rate_of_convergence",
    "simulate",
    "solve_pii",
    "u_initial",
]
