"""Weyl group elements, Bruhat order, and subexpression machinery.

Elements are canonically represented by their integer matrix acting on the
span of the simple roots (columns = images of the simple roots), so
equality and hashing are cheap regardless of which word produced them.
Words are tuples of 1-based simple-reflection indices; subexpression
diagrams are frozensets of 1-based positions within a fixed ambient word.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

from .exact_linalg import Matrix
from .root_system import RootSystem


class NotReducedError(ValueError):
    pass


class NotInIntervalError(ValueError):
    """Raised when the greedy scan shows u is not below the ambient word."""


@dataclass(frozen=True)
class WeylElement:
    matrix: Matrix
    length: int

    def __lt__(self, other):
        # deterministic total order for sorted output, unrelated to Bruhat
        return (self.length, self.matrix.rows) < (other.length,
                                                  other.matrix.rows)


@functools.cache
def reflection_matrix(rs: RootSystem, i: int) -> Matrix:
    """Matrix of s_i (1-based) on the simple-root basis; column j is
    the coordinate vector of s_i(alpha_j)."""
    n = rs.rank
    if not 1 <= i <= n:
        raise IndexError(f"reflection index {i} out of range")
    a = rs.cartan_matrix
    cols = []
    for j in range(n):
        col = [1 if k == j else 0 for k in range(n)]
        col[i - 1] -= a[i - 1][j]
        cols.append(col)
    return Matrix.from_rows([[cols[j][k] for j in range(n)]
                             for k in range(n)])


@functools.cache
def _element_from_matrix(rs: RootSystem, matrix: Matrix) -> WeylElement:
    ln = sum(1 for beta in rs.positive_roots
             if all(x <= 0 for x in matrix.mul_vec(beta)))
    return WeylElement(matrix, ln)


def identity_element(rs: RootSystem) -> WeylElement:
    return _element_from_matrix(rs, Matrix.identity(rs.rank))


def from_word(rs: RootSystem, word) -> WeylElement:
    """Product s_{i_1} ... s_{i_k} of simple reflections."""
    m = Matrix.identity(rs.rank)
    for i in word:
        m = m.matmul(reflection_matrix(rs, i))
    return _element_from_matrix(rs, m)


def length(e: WeylElement) -> int:
    return e.length


def mul_left(rs: RootSystem, i: int, e: WeylElement) -> WeylElement:
    return _element_from_matrix(rs, reflection_matrix(rs, i).matmul(e.matrix))


def mul_right(rs: RootSystem, e: WeylElement, i: int) -> WeylElement:
    return _element_from_matrix(rs, e.matrix.matmul(reflection_matrix(rs, i)))


def is_reduced(rs: RootSystem, word) -> bool:
    return from_word(rs, word).length == len(word)


@functools.cache
def bruhat_leq(rs: RootSystem, u: WeylElement, v: WeylElement) -> bool:
    """Bruhat order, by the standard length-descent recursion."""
    if v.length == 0:
        return u.length == 0
    if u.length > v.length:
        return False
    s = next(i for i in range(1, rs.rank + 1)
             if mul_left(rs, i, v).length < v.length)
    sv = mul_left(rs, s, v)
    su = mul_left(rs, s, u)
    if su.length < u.length:
        return bruhat_leq(rs, su, sv)
    return bruhat_leq(rs, u, sv)


def bruhat_interval(rs: RootSystem, word) -> frozenset:
    """All elements below from_word(word): the set of subword products.

    The ambient word must be reduced; by the subword property the result
    is exactly the lower Bruhat interval of its element.
    """
    return _bruhat_interval_guarded(rs, tuple(word), limit=None)


def _bruhat_interval_guarded(rs, word, limit):
    if not is_reduced(rs, word):
        raise NotReducedError(f"ambient word {list(word)} is not reduced")
    current = {identity_element(rs)}
    for i in word:
        current |= {mul_right(rs, e, i) for e in current}
        if limit is not None and len(current) > limit:
            raise ValueError(
                f"Bruhat interval exceeds the {limit}-element guard")
    return frozenset(current)


def subexpression_element(rs: RootSystem, word, positions) -> WeylElement:
    """w^Delta: keep letters at the given 1-based positions, skip the rest."""
    word = tuple(word)
    bad = [k for k in positions if not 1 <= k <= len(word)]
    if bad:
        raise IndexError(f"positions {bad} out of range")
    keep = set(positions)
    return from_word(rs, [c for k, c in enumerate(word, start=1) if k in keep])


def positive_subexpression(rs: RootSystem, word, u: WeylElement) -> frozenset:
    """Rightmost-greedy diagram realizing u inside the ambient word.

    Scan positions right to left keeping a running v (initially u); retain
    position k exactly when right-multiplying by its letter shortens v.
    Ends at the identity iff u lies below the ambient word; the retained
    subword is then a reduced word for u.
    """
    word = tuple(word)
    v = u
    kept = []
    for k in range(len(word), 0, -1):
        vs = mul_right(rs, v, word[k - 1])
        if vs.length < v.length:
            kept.append(k)
            v = vs
    if v.length != 0:
        raise NotInIntervalError("element is not below the ambient word")
    return frozenset(kept)


def element_word(rs: RootSystem, word, diagram) -> tuple:
    """The subword retained by a diagram, as a word."""
    keep = set(diagram)
    return tuple(c for k, c in enumerate(tuple(word), start=1) if k in keep)
