"""Exact-arithmetic engine for diagonal crossed coproducts, the Drinfel'd
codouble, (alpha, beta)-Yetter-Drinfeld modules and the crossed Turaev
algebra CT(H) of a finite-dimensional Hopf algebra."""

from __future__ import annotations

from .coproduct import Coalgebra, diagonal_crossed_coproduct, drinfeld_codouble, h_alpha_beta, verify_coalgebra_axioms
from .field import QQ, FieldError, GF
from .groups import (
    GroupOracle,
    builtin_group,
    enumerate_automorphisms,
    automorphism_pairs,
    group_algebra,
    sweedler_fixture,
)
from .hopf import FiniteDimHopfAlgebra, GPair, close_pairs, g_unit, verify_hopf_axioms
from .report import CheckResult, Report
from .tensor import ExactArray, einsum
from .turaev import TuraevFamily, verify_correspondence_shadow, verify_turaev_axioms
from .yd import (
    YDModule,
    braiding,
    canonical_yd,
    conjugate_yd,
    left_dual,
    right_dual,
    tensor_yd,
    verify_braiding,
    verify_hexagons,
    verify_rigidity,
    verify_yd,
)

__version__ = "0.1.0"

__all__ = [
    "Coalgebra", "diagonal_crossed_coproduct", "drinfeld_codouble", "h_alpha_beta", "verify_coalgebra_axioms",
    "QQ", "GF", "FieldError",
    "GroupOracle", "builtin_group", "enumerate_automorphisms", "automorphism_pairs", "group_algebra", "sweedler_fixture",
    "FiniteDimHopfAlgebra", "GPair", "close_pairs", "g_unit", "verify_hopf_axioms",
    "CheckResult", "Report", "ExactArray", "einsum",
    "TuraevFamily", "verify_correspondence_shadow", "verify_turaev_axioms",
    "YDModule", "braiding", "canonical_yd", "conjugate_yd", "left_dual", "right_dual", "tensor_yd",
    "verify_braiding", "verify_hexagons", "verify_rigidity", "verify_yd",
]
