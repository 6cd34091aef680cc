"""Growth invariants of graded quiver algebras and ranks of Serre twists."""

from ._kernels import BACKEND
from .automaton import build_ufnarovski, count_normal_words
from .catalog import builtin_presentation
from .growth import classify_growth, growth_entropy, hilbert_series
from .model import GradedPresentation, MonomialPresentation, Quiver
from .parser import load_presentation, parse_presentation, serialize
from .serre import rank_sequence, serre_entropy_report

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "GradedPresentation", "MonomialPresentation", "Quiver",
    "build_ufnarovski", "builtin_presentation", "classify_growth",
    "count_normal_words", "growth_entropy", "hilbert_series",
    "load_presentation", "parse_presentation", "rank_sequence",
    "serialize", "serre_entropy_report",
]
