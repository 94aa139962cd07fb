"""Sigma^1 and Sigma^2 membership for wreath products.

The rule engine (:mod:`wreathsigma.engine`) decides membership with a
citation trace; the laboratory (:mod:`wreathsigma.lab`) corroborates it by
brute force on concrete groups.
"""

from .character import Character, Ray, make_character
from .engine import Status, Verdict, sample_sphere, sigma1, sigma2
from .groups import (
    INF,
    AnnotatedAtom,
    CyclicFinite,
    DirectProduct,
    Free,
    FreeAbelian,
    GraphWreath,
    GSetSpec,
    OrbitRecord,
    PairOrbitRecord,
    StabilizerData,
    Wreath,
    free_rank,
    lattice_gset,
    regular_gset,
    validate_finiteness,
)
from .omega import omega1, prop1_hypothesis, reidemeister_conclusions

__version__ = "0.1.0"

__all__ = [
    "INF",
    "AnnotatedAtom",
    "Character",
    "CyclicFinite",
    "DirectProduct",
    "Free",
    "FreeAbelian",
    "GraphWreath",
    "GSetSpec",
    "OrbitRecord",
    "PairOrbitRecord",
    "Ray",
    "StabilizerData",
    "Status",
    "Verdict",
    "Wreath",
    "free_rank",
    "lattice_gset",
    "make_character",
    "omega1",
    "prop1_hypothesis",
    "regular_gset",
    "reidemeister_conclusions",
    "sample_sphere",
    "sigma1",
    "sigma2",
    "validate_finiteness",
]
