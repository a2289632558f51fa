"""Exact cohomology jump loci, Cohen-Macaulay certificates and propagation
checks for toric complexes, hyperplane arrangements and finitely presented
groups."""
from .linalg import GF, QQ, ZZ, CoefficientField
from .simplicial import Graph, SimplicialComplex

__version__ = "0.1.0"

__all__ = ["CoefficientField", "GF", "QQ", "ZZ", "Graph", "SimplicialComplex", "__version__"]
