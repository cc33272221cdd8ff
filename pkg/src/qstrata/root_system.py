"""Root-system data for the finite simple types A-G, in exact arithmetic.

Roots live in the simple-root basis with integer coordinates.  The fixed
conventions (documented once here, used everywhere):

* Cartan matrix entries a[i][j] = 2(alpha_i, alpha_j)/(alpha_i, alpha_i),
  so that s_i(alpha_j) = alpha_j - a[i][j] alpha_i.
* Short roots are normalized to squared length 2; the Gram matrix is
  gram[i][j] = d_i * a[i][j] with d_i = (alpha_i, alpha_i)/2.
* Indices are 1-based in the public API (matching standard Bourbaki
  numbering of simple roots).
"""

from __future__ import annotations

from dataclasses import dataclass

from .exact_linalg import Matrix

_RANK_CONSTRAINTS = {
    "A": lambda n: n >= 1,
    "B": lambda n: n >= 2,
    "C": lambda n: n >= 2,
    "D": lambda n: n >= 3,
    "E": lambda n: n in (6, 7, 8),
    "F": lambda n: n == 4,
    "G": lambda n: n == 2,
}

_POSITIVE_ROOT_COUNTS = {
    "A": lambda n: n * (n + 1) // 2,
    "B": lambda n: n * n,
    "C": lambda n: n * n,
    "D": lambda n: n * (n - 1),
    "E": lambda n: {6: 36, 7: 63, 8: 120}[n],
    "F": lambda n: 24,
    "G": lambda n: 6,
}


class InvalidRankError(ValueError):
    pass


@dataclass(frozen=True)
class CartanType:
    family: str
    rank: int

    def __post_init__(self):
        check = _RANK_CONSTRAINTS.get(self.family)
        if check is None:
            raise InvalidRankError(f"unknown family {self.family!r}")
        if not check(self.rank):
            raise InvalidRankError(
                f"rank {self.rank} invalid for family {self.family}")

    def __str__(self):
        return f"{self.family}{self.rank}"


@dataclass(frozen=True)
class RootSystem:
    cartan_type: CartanType
    cartan_matrix: tuple  # n x n int rows, convention above
    gram: Matrix
    positive_roots: tuple  # integer coordinate tuples, simple-root basis

    @property
    def rank(self):
        return self.cartan_type.rank


def _simply_laced_from_edges(n, edges):
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i, j in edges:
        a[i - 1][j - 1] = a[j - 1][i - 1] = -1
    return a, [1] * n


def _cartan_and_symmetrizer(t: CartanType):
    """Cartan matrix rows and symmetrizer d (d_i = half squared length)."""
    n = t.rank
    f = t.family
    chain = [(i, i + 1) for i in range(1, n)]
    if f == "A":
        return _simply_laced_from_edges(n, chain)
    if f == "D":
        return _simply_laced_from_edges(
            n, [(i, i + 1) for i in range(1, n - 1)] + [(n - 2, n)])
    if f == "E":
        # Bourbaki numbering: chain 1-3-4-5-...-n, node 2 attached to 4.
        edges = [(1, 3), (3, 4), (2, 4)] + [(i, i + 1) for i in range(4, n)]
        return _simply_laced_from_edges(n, edges)
    if f == "B":
        # alpha_1..alpha_{n-1} long, alpha_n short
        a, d = _simply_laced_from_edges(n, chain)
        a[n - 1][n - 2] = -2
        d = [2] * (n - 1) + [1]
        return a, d
    if f == "C":
        # alpha_1..alpha_{n-1} short, alpha_n long
        a, d = _simply_laced_from_edges(n, chain)
        a[n - 2][n - 1] = -2
        d = [1] * (n - 1) + [2]
        return a, d
    if f == "F":
        # alpha_1, alpha_2 long; alpha_3, alpha_4 short
        a, d = _simply_laced_from_edges(n, chain)
        a[2][1] = -2
        d = [2, 2, 1, 1]
        return a, d
    if f == "G":
        # alpha_1 short, alpha_2 long
        return [[2, -3], [-1, 2]], [1, 3]
    raise InvalidRankError(f"unknown family {f!r}")


def _reflect_coords(cartan, i0, coords):
    # s_i(v) = v - (sum_j v_j a[i][j]) alpha_i, all integer arithmetic
    c = sum(vj * aij for vj, aij in zip(coords, cartan[i0]))
    return tuple(v - c if j == i0 else v for j, v in enumerate(coords))


def build_root_system(t: CartanType) -> RootSystem:
    """Construct the root system: Cartan matrix, Gram matrix, positive roots.

    Positive roots are found by closing the simple roots under simple
    reflections and discarding negatives; the resulting count is checked
    against the classical formula for the type.
    """
    cartan, d = _cartan_and_symmetrizer(t)
    n = t.rank
    for i in range(n):
        for j in range(n):
            if d[i] * cartan[i][j] != d[j] * cartan[j][i]:
                raise AssertionError("symmetrizer mismatch")
    gram = Matrix.from_rows(
        [[d[i] * cartan[i][j] for j in range(n)] for i in range(n)])

    simples = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    positive = set(simples)
    frontier = list(simples)
    while frontier:
        v = frontier.pop()
        for i in range(n):
            w = _reflect_coords(cartan, i, v)
            if all(x >= 0 for x in w) and w not in positive:
                positive.add(w)
                frontier.append(w)
    expected = _POSITIVE_ROOT_COUNTS[t.family](n)
    if len(positive) != expected:
        raise AssertionError(
            f"positive root closure gave {len(positive)}, expected {expected}")

    cartan_rows = tuple(tuple(row) for row in cartan)
    return RootSystem(t, cartan_rows, gram, tuple(sorted(positive)))


def inner(rs: RootSystem, v, w):
    """Exact inner product (v, w) of coordinate vectors.

    An int for integral inputs, a Fraction otherwise; exact either way.
    """
    if len(v) != rs.rank or len(w) != rs.rank:
        raise ValueError("dimension mismatch")
    gw = rs.gram.mul_vec(w)
    return sum(a * b for a, b in zip(v, gw))


def simple_reflection(rs: RootSystem, i: int, v):
    """Apply s_i (1-based index) to a coordinate vector."""
    if not 1 <= i <= rs.rank:
        raise IndexError(f"reflection index {i} out of range")
    if len(v) != rs.rank:
        raise ValueError("dimension mismatch")
    return _reflect_coords(rs.cartan_matrix, i - 1, tuple(v))


def is_positive_root_vector(v):
    return all(x >= 0 for x in v) and any(x > 0 for x in v)
