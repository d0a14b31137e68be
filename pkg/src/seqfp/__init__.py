"""Benford/Taylor fingerprints of integer sequences and tree-ensemble classifiers."""
from ._backend import BACKEND
from .fingerprint import FEATURE_NAMES, benford_reference, digit_distribution, feature_vector
from .oeis import LABELS, LabelSet, OeisEntry, Sequence

__all__ = [
    "BACKEND",
    "FEATURE_NAMES",
    "LABELS",
    "LabelSet",
    "OeisEntry",
    "Sequence",
    "benford_reference",
    "digit_distribution",
    "feature_vector",
]

__version__ = "0.1.0"
