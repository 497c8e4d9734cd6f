"""Quantum harmonic analysis on the Bergman space of the unit disk."""

from ._core import *  # noqa: F401,F403
from ._core import (
    DiskQuadrature,
    GroupElement,
    GroupQuadrature,
    RunConfig,
    conv_symbol_op,
    convergence_experiment,
    i_functional,
    kernel_vector,
    lift_tau,
    op_norm,
    pi_matrix,
    run_suite,
    s_br,
    s_g,
    schur_pairing,
    toeplitz_matrix,
)

__all__ = [
    "DiskQuadrature",
    "GroupElement",
    "GroupQuadrature",
    "RunConfig",
    "conv_symbol_op",
    "convergence_experiment",
    "i_functional",
    "kernel_vector",
    "lift_tau",
    "op_norm",
    "pi_matrix",
    "run_suite",
    "s_br",
    "s_g",
    "schur_pairing",
    "toeplitz_matrix",
]
