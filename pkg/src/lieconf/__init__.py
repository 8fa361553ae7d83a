"""Exact-arithmetic Lie theory: root systems, representations, embedding data,
conformal-level criteria, and q-series identity verification."""

from .liealg import AlgebraType, LieError, SimpleAlgebra, build_algebra

__all__ = ["AlgebraType", "LieError", "SimpleAlgebra", "build_algebra"]
__version__ = "0.1.0"
