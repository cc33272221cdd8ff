"""Uniparameter quantum affine spaces: strata, heights, degree triples.

A space on N generators is specified by an N x N additively skew-symmetric
integer matrix; the deformation parameter plays no computational role and
is carried only as an optional label.  Torus-invariant prime ideals are in
bijection with subsets ("diagrams") of {1..N}; the dimension of the
stratum over a diagram is the rational kernel dimension of the
skew-adjacency submatrix on its complement, and all three degrees of a
prime in that stratum coincide with quantities derived from it.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from .exact_linalg import Matrix, kernel_dim_q

EXHAUSTIVE_PAIR_LIMIT_N = 12
SAMPLED_PAIRS = 20000


class InvalidHeightError(ValueError):
    pass


@dataclass(frozen=True)
class AffineSpaceSpec:
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

    def all_diagrams(self):
        for r in range(self.n + 1):
            for members in itertools.combinations(range(1, self.n + 1), r):
                yield frozenset(members)


@dataclass(frozen=True)
class StratumReport:
    diagram: frozenset
    stratum_dim: int
    height: int
    locdeg: int
    primdeg: int
    ratdeg: int


@dataclass(frozen=True)
class InequalityReport:
    pairs_checked: int
    exhaustive: bool
    seed: int | None
    violations: tuple = ()

    @property
    def ok(self):
        return not self.violations


def _check_diagram(n, d):
    d = frozenset(d)
    if not all(isinstance(i, int) and 1 <= i <= n for i in d):
        raise ValueError(f"diagram members must lie in 1..{n}")
    return d


def skew_adjacency(spec: AffineSpaceSpec, d) -> Matrix:
    """Submatrix of the skew matrix on the sorted complement of d."""
    d = _check_diagram(spec.n, d)
    comp = [i - 1 for i in range(1, spec.n + 1) if i not in d]
    return spec.skew.submatrix(comp, comp)


def stratum_dim(spec: AffineSpaceSpec, d) -> int:
    return kernel_dim_q(skew_adjacency(spec, d))


def hprime_height(d) -> int:
    return len(d)


def primdeg_in_stratum(spec: AffineSpaceSpec, d, height_p: int) -> int:
    """Primitivity degree of a prime of the given height in the stratum of d.

    Valid heights run from |d| (the invariant prime itself) up to
    |d| + stratum_dim (the stratum-maximal, i.e. primitive, primes).
    """
    d = _check_diagram(spec.n, d)
    dim = stratum_dim(spec, d)
    if not len(d) <= height_p <= len(d) + dim:
        raise InvalidHeightError(
            f"height {height_p} outside [{len(d)}, {len(d) + dim}]")
    return dim + len(d) - height_p


def stratum_report(spec: AffineSpaceSpec, d) -> StratumReport:
    d = _check_diagram(spec.n, d)
    dim = stratum_dim(spec, d)
    return StratumReport(diagram=d, stratum_dim=dim, height=len(d),
                         locdeg=dim, primdeg=dim, ratdeg=dim)


def _nested_pairs_exhaustive(n):
    # each index independently: outside both, in the larger only, or in both
    for assignment in itertools.product(range(3), repeat=n):
        small = frozenset(i + 1 for i, a in enumerate(assignment) if a == 2)
        large = frozenset(i + 1 for i, a in enumerate(assignment) if a >= 1)
        yield small, large


def verify_strata_inequality(spec: AffineSpaceSpec,
                             seed: int = 0) -> InequalityReport:
    """Check dim(D) + |D| <= dim(D') + |D'| over nested diagram pairs.

    Exhaustive (3^N pairs) for N <= 12; uniformly sampled with the given
    seed beyond that.  Any violation indicates a bug, not a counterexample.
    """
    n = spec.n
    dims = {}

    def dim_of(d):
        if d not in dims:
            dims[d] = stratum_dim(spec, d)
        return dims[d]

    exhaustive = n <= EXHAUSTIVE_PAIR_LIMIT_N
    if exhaustive:
        pairs = _nested_pairs_exhaustive(n)
        used_seed = None
    else:
        rng = random.Random(seed)
        used_seed = seed

        def sampled():
            for _ in range(SAMPLED_PAIRS):
                small, large = set(), set()
                for i in range(1, n + 1):
                    a = rng.randrange(3)
                    if a == 2:
                        small.add(i)
                    if a >= 1:
                        large.add(i)
                yield frozenset(small), frozenset(large)
        pairs = sampled()

    violations = []
    checked = 0
    for small, large in pairs:
        checked += 1
        if dim_of(small) + len(small) > dim_of(large) + len(large):
            violations.append((tuple(sorted(small)), tuple(sorted(large))))
    return InequalityReport(pairs_checked=checked, exhaustive=exhaustive,
                            seed=used_seed,
                            violations=tuple(sorted(violations)))


def spec_from_dict(doc) -> AffineSpaceSpec:
    """Build a spec from the JSON document form {"n": N, "skew": [[...]]}."""
    try:
        n = doc["n"]
        skew_rows = doc["skew"]
    except (TypeError, KeyError) as exc:
        raise ValueError("document must contain 'n' and 'skew'") from exc
    if not isinstance(n, int):
        raise ValueError("'n' must be an integer")
    if (not isinstance(skew_rows, list)
            or any(not isinstance(r, list) for r in skew_rows)
            or any(not isinstance(x, int) for r in skew_rows for x in r)):
        raise ValueError("'skew' must be a list of integer rows")
    return AffineSpaceSpec(n=n, skew=Matrix.from_rows(skew_rows, ncols=n),
                           q_label=str(doc.get("q", "")))
