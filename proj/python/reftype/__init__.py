"""Python front end for the reftype C++ core.

Rational results come back as ``fractions.Fraction`` and Dynkin labels as
tuples of ints, so tables can be compared exactly.
"""

from ._core import (
    ReftypeError,
    coeffs,
    dcoeffs,
    gamma_x,
    hasse_dot,
    kblock,
    pq,
    reduction_factor,
    run_cli,
    subsystems,
    tensor_coeff,
    verify,
    weight_system,
    weyl_dim,
)

__all__ = [
    "ReftypeError",
    "coeffs",
    "dcoeffs",
    "gamma_x",
    "hasse_dot",
    "kblock",
    "pq",
    "reduction_factor",
    "run_cli",
    "subsystems",
    "tensor_coeff",
    "verify",
    "weight_system",
    "weyl_dim",
]
