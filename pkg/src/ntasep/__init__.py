"""Exact steady states of the multispecies TASEP on a ring.

Three independent routes are provided: counting multiline states through
combinatorial R, a corner-transfer-matrix trace over q = 0 oscillators, and
the null space of the Markov generator.
"""
from .combi_r import r_apply, r_element, ybe_check
from .markov import H_apply, kernel_steady, tau_i
from .mpf import build_X, build_Xhat, hat_check, mpf_steady, prob_trace
from .multiline import MultilineState, SteadyVector, T_k, conjecture_check, fm_steady, pi
from .quantum_r import rmatrix_element, rmatrix_full
from .words import Config, Word, enumerate_B, enumerate_sector, phi, phi_inv

__all__ = [
    "Config", "H_apply", "MultilineState", "SteadyVector", "T_k", "Word",
    "build_X", "build_Xhat", "conjecture_check", "enumerate_B", "enumerate_sector",
    "fm_steady", "hat_check", "kernel_steady", "mpf_steady", "phi", "phi_inv", "pi",
    "prob_trace", "r_apply", "r_element", "rmatrix_element", "rmatrix_full",
    "tau_i", "ybe_check",
]
__version__ = "0.1.0"
