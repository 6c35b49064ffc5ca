"""Exact computations with representations of the generalized Kronecker quiver."""

from .exactlin import Field
from .quiver_rep import DimVector, KroneckerModule, Morphism

__all__ = ["Field", "DimVector", "KroneckerModule", "Morphism"]
__version__ = "0.1.0"
