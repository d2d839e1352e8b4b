"""Exact Weyl-group combinatorics, linear ideals of the Cartan symmetric
algebra, the FCR classification of their prime factors, and dual-pair
decompositions."""
from __future__ import annotations

from ._kernels import BACKEND
from .exactlin import AffineSubspace
from .fcr import FcrVerdict, annihilator_contains, fcr_decide, lambda_set
from .ideals import LinearIdeal, dot_act, integral_root_data, is_strongly_dominant
from .rootsys import RootSystem, build
from .weyl import WeylElement, enumerate_group, inversion_set, length

__version__ = "0.1.0"

__all__ = [
    "AffineSubspace",
    "BACKEND",
    "FcrVerdict",
    "LinearIdeal",
    "RootSystem",
    "WeylElement",
    "annihilator_contains",
    "build",
    "dot_act",
    "enumerate_group",
    "fcr_decide",
    "integral_root_data",
    "inversion_set",
    "is_strongly_dominant",
    "lambda_set",
    "length",
]
