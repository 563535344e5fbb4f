"""Exact arithmetic in the group algebra F D_2p, char F = p odd."""
from .algebra import AlgebraContext, AlgebraElement, QuotientElement
from .errors import BoundExceeded, ConfigError, ContextError, DomainError, NotAUnit
from .fields import FieldElement, FieldParams, find_irreducible
from .kernels import BACKEND

__version__ = "0.1.0"

__all__ = [
    "AlgebraContext",
    "AlgebraElement",
    "QuotientElement",
    "FieldElement",
    "FieldParams",
    "find_irreducible",
    "BoundExceeded",
    "ConfigError",
    "ContextError",
    "DomainError",
    "NotAUnit",
    "BACKEND",
]
