"""Boson-fermion computations for Schubert calculus on permutations of Z.

Permutations of Z with finite support span a fermionic Fock space.  Weak
ribbons and k-strong ribbons give it a Heisenberg action, and from that
action Stanley symmetric functions, Edelman-Greene coefficients and
back-stable Schubert polynomials are all computed exactly.
"""

from .backstable import BSym, backstable, schubert_poly, stanley_p, stanley_trunc
from .fock import FockVector, YoungVector, alpha_minus, alpha_plus, eg_coeffs, stanley_op_apply, vac
from .permcore import Permutation, format_perm, parse_perm, product_word, simple
from .poly import MPoly, SymP

__version__ = "0.1.0"

__all__ = [
    "BSym",
    "FockVector",
    "MPoly",
    "Permutation",
    "SymP",
    "YoungVector",
    "alpha_minus",
    "alpha_plus",
    "backstable",
    "eg_coeffs",
    "format_perm",
    "parse_perm",
    "product_word",
    "schubert_poly",
    "simple",
    "stanley_op_apply",
    "stanley_p",
    "stanley_trunc",
    "vac",
]
