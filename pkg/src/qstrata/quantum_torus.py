"""Uniparameter quantum tori: center lattice, center rank, degree formula.

The center is a Laurent polynomial ring on monomials indexed by the
integer kernel lattice of the skew matrix; since the deformation
parameter is not a root of unity, a monomial is central exactly when its
exponent vector is killed by the matrix over Z.  Every prime of height h
has all three degrees equal to (center rank) - h.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exact_linalg import Matrix, integer_kernel_basis
from .quantum_affine import InvalidHeightError


@dataclass(frozen=True)
class TorusSpec:
    n: int
    skew: Matrix
    q_label: str = ""

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be positive")
        if (self.skew.nrows, self.skew.ncols) != (self.n, self.n):
            raise ValueError("skew matrix shape does not match n")
        if not self.skew.is_integer():
            raise ValueError("skew matrix must be integral")
        if not self.skew.is_skew_symmetric():
            raise ValueError("matrix is not additively skew-symmetric")


@dataclass(frozen=True)
class CenterDescription:
    lattice_basis: tuple  # integer vectors spanning the full kernel lattice
    rank: int


def center_description(spec: TorusSpec) -> CenterDescription:
    basis = tuple(integer_kernel_basis(spec.skew))
    return CenterDescription(lattice_basis=basis, rank=len(basis))


def degree_of_prime(spec: TorusSpec, height_p: int) -> int:
    """Common value of the three degrees for any prime of the given height."""
    r = center_description(spec).rank
    if not 0 <= height_p <= r:
        raise InvalidHeightError(f"height {height_p} outside [0, {r}]")
    return r - height_p


def spec_from_dict(doc) -> TorusSpec:
    """Build a spec from the JSON document form {"n": N, "skew": [[...]]}."""
    from .quantum_affine import spec_from_dict as affine_from_dict
    a = affine_from_dict(doc)
    return TorusSpec(n=a.n, skew=a.skew, q_label=a.q_label)
