"""Small-perturbation Seiberg-Witten invariants of knot-surgered elliptic surfaces E(1)_K."""
from .classify import Outcome, Verdict, classify, classify_delta, dolgachev_series
from .knots import BraidWord, KnotInput, SeifertMatrix, match_torus, torus_alexander
from .laurent import LaurentPoly, normalize_alexander
from .swseries import SWSeries, fs_series, sw_small_perturbation, wall_crossing_check

__all__ = [
    "BraidWord",
    "KnotInput",
    "LaurentPoly",
    "Outcome",
    "SWSeries",
    "SeifertMatrix",
    "Verdict",
    "classify",
    "classify_delta",
    "dolgachev_series",
    "fs_series",
    "match_torus",
    "normalize_alexander",
    "sw_small_perturbation",
    "torus_alexander",
    "wall_crossing_check",
]
__version__ = "0.1.0"
