"""Invariants of Teichmueller curves uniformized by triangle groups.

Exact-arithmetic cyclic-cover families, hypergeometric local data, Lyapunov
spectra, billiard tables and their unfoldings, and Schwarz-Christoffel
verification of the explicit boundary polygons.
"""

from . import (  # noqa: F401
    arith,
    billiards,
    cyclic_cover,
    errors,
    hypergeom,
    lyapunov,
    schwarz_christoffel,
    triangle_family,
)

__version__ = "0.1.0"
