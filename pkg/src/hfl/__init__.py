"""Exact construction and verification of function-field lattices.

Builds the lattice of principal-divisor valuation vectors of a Hermitian
curve over GF(q^2), and the analogous sublattices of A_{n-1} cut out by
subsets of finite Abelian groups, then verifies their structure (quotient
group, determinant, minimal vectors, automorphisms) by exact integer
computation.  No floating point is used anywhere in the library.
"""

__version__ = "0.1.0"

from .gf import Field, field_make
from .curve import Curve, Slope, Vertical, curve_make
from .lattice import Lattice, QuotientStructure, census_pm1
from .abelian import AbelianGroup
from .hermlat import HermitianLattice, build, decompose_line, kissing_families

__all__ = [
    "Field",
    "field_make",
    "Curve",
    "Slope",
    "Vertical",
    "curve_make",
    "Lattice",
    "QuotientStructure",
    "census_pm1",
    "AbelianGroup",
    "HermitianLattice",
    "build",
    "decompose_line",
    "kissing_families",
    "__version__",
]
