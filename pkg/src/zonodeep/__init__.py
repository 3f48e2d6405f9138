"""Exact coefficient-of-asymmetry computations for lattice zonotopes and parallelepipeds, with lonely runner tools."""

from fractions import Fraction

from .errors import (
    BudgetExceeded,
    DomainError,
    InstanceTooLarge,
    NoInteriorPoint,
    NotInterior,
    NotOnBoundary,
    RankDeficient,
    SingularMatrix,
    ZonodeepError,
)

__version__ = "0.1.0"
