"""Exact lattice-point counting for marked order polytopes."""

from .errors import MarkedOrdError
from .marked import (
    Marking,
    cell_of,
    count_chain_polytope_points,
    count_extensions,
    count_extensions_bruteforce,
    count_strict_extensions,
    dimension,
    reciprocity_count,
    symbolic_polynomial,
    validate,
)
from .polynomial import LinForm, MultiPoly, interpolate_univariate, rising_binomial
from .poset import IdealChain, Poset, build_poset, enumerate_ideal_chains, quotient

__version__ = "0.1.0"

__all__ = [
    "IdealChain",
    "LinForm",
    "MarkedOrdError",
    "Marking",
    "MultiPoly",
    "Poset",
    "build_poset",
    "cell_of",
    "count_chain_polytope_points",
    "count_extensions",
    "count_extensions_bruteforce",
    "count_strict_extensions",
    "dimension",
    "enumerate_ideal_chains",
    "interpolate_univariate",
    "quotient",
    "reciprocity_count",
    "rising_binomial",
    "symbolic_polynomial",
    "validate",
]
