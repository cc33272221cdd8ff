"""Quantum Schubert cells attached to a Weyl group element.

Given a reduced word for w, the roots beta_k are the successive images of
the word's letters under the growing prefix product; pairwise inner
products of the beta's fill a skew matrix that plays the same role the
skew matrix plays for a quantum affine space.  Torus-invariant primes are
indexed by the Bruhat interval below w; each element u is realized by its
rightmost-greedy subexpression diagram.  Stratum dimensions admit two
independent computations (a submatrix kernel and an operator kernel on
the root space), which the verifiers cross-check, along with the
nested-diagram inequality and the order compatibility of the indexing.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import weyl
from .exact_linalg import Matrix, kernel_dim_q
from .root_system import (CartanType, RootSystem, build_root_system, inner,
                          is_positive_root_vector)
from .weyl import NotReducedError, WeylElement

INTERVAL_GUARD = 10**6


class BijectionViolationError(RuntimeError):
    """The greedy diagram realization failed a validation it must satisfy."""


@dataclass(frozen=True)
class SchubertSpec:
    cartan_type: CartanType
    word: tuple

    def __post_init__(self):
        object.__setattr__(self, "word", tuple(self.word))


@dataclass(frozen=True)
class SchubertData:
    spec: SchubertSpec
    root_system: RootSystem
    betas: tuple  # coordinate vectors, one per letter of the word
    skew_matrix: Matrix
    w: WeylElement

    @property
    def n_generators(self):
        return len(self.betas)


@dataclass(frozen=True)
class CauchonEntry:
    element: WeylElement
    word: tuple  # reduced word for the element (the retained subword)
    diagram: frozenset
    stratum_dim: int
    height: int
    locdeg: int
    primdeg: int
    ratdeg: int


@dataclass(frozen=True)
class VerificationReport:
    name: str
    checked: int
    violations: tuple = ()
    notes: tuple = ()

    @property
    def ok(self):
        return not self.violations


def build_schubert(spec: SchubertSpec, *,
                   interval_guard=INTERVAL_GUARD) -> SchubertData:
    """Compute the roots and skew matrix for a reduced word.

    Rejects non-reduced words rather than reducing them: the matrix depends
    on the chosen word, so silent rewriting would change outputs.
    """
    rs = build_root_system(spec.cartan_type)
    word = spec.word
    if not weyl.is_reduced(rs, word):
        raise NotReducedError(f"word {list(word)} is not reduced")

    betas = []
    prefix = Matrix.identity(rs.rank)
    for i in word:
        alpha = tuple(1 if j == i - 1 else 0 for j in range(rs.rank))
        betas.append(prefix.mul_vec(alpha))
        prefix = prefix.matmul(weyl.reflection_matrix(rs, i))
    if any(not is_positive_root_vector(b) for b in betas):
        raise AssertionError("a computed root is not positive")
    if len(set(betas)) != len(betas):
        raise AssertionError("computed roots are not pairwise distinct")

    n = len(word)
    rows = [[inner(rs, betas[s], betas[t]) if s < t
             else (-inner(rs, betas[t], betas[s]) if s > t else 0)
             for t in range(n)] for s in range(n)]
    return SchubertData(spec=spec, root_system=rs, betas=tuple(betas),
                        skew_matrix=Matrix.from_rows(rows, ncols=n),
                        w=weyl.from_word(rs, word))


def stratum_dim_matrix(data: SchubertData, diagram) -> int:
    """Kernel dimension of the skew submatrix on the diagram's complement."""
    n = data.n_generators
    comp = [k - 1 for k in range(1, n + 1) if k not in diagram]
    return kernel_dim_q(data.skew_matrix.submatrix(comp, comp))


def stratum_dim_operator(data: SchubertData, diagram) -> int:
    """Kernel dimension of w^Delta + w acting on the root space."""
    rs = data.root_system
    u = weyl.subexpression_element(rs, data.spec.word, diagram)
    return kernel_dim_q(u.matrix.add(data.w.matrix))


def cauchon_entries(data: SchubertData, *,
                    interval_guard=INTERVAL_GUARD) -> list:
    """One entry per element of the Bruhat interval below w.

    Each element is realized by its rightmost-greedy diagram; the
    realization is validated in place (round trip, reducedness,
    distinctness, count) and any failure raises, since it would mean the
    diagram indexing itself is broken.
    """
    rs = data.root_system
    word = data.spec.word
    interval = weyl._bruhat_interval_guarded(rs, word, limit=interval_guard)

    entries = []
    seen_diagrams = set()
    for u in sorted(interval):
        diagram = weyl.positive_subexpression(rs, word, u)
        subword = weyl.element_word(rs, word, diagram)
        if weyl.subexpression_element(rs, word, diagram) != u:
            raise BijectionViolationError("diagram does not reproduce u")
        if not weyl.is_reduced(rs, subword):
            raise BijectionViolationError("retained subword is not reduced")
        if diagram in seen_diagrams:
            raise BijectionViolationError("duplicate diagram")
        seen_diagrams.add(diagram)
        dim = stratum_dim_matrix(data, diagram)
        entries.append(CauchonEntry(
            element=u, word=subword, diagram=diagram, stratum_dim=dim,
            height=len(diagram), locdeg=dim, primdeg=dim, ratdeg=dim))
    if len(entries) != len(interval):
        raise BijectionViolationError("entry count differs from interval")
    return entries


def verify_bcl_agreement(data: SchubertData,
                         entries=None) -> VerificationReport:
    """Cross-check the submatrix and operator stratum-dimension formulas."""
    if entries is None:
        entries = cauchon_entries(data)
    violations = []
    for e in entries:
        op = stratum_dim_operator(data, e.diagram)
        if op != e.stratum_dim:
            violations.append((e.word, e.stratum_dim, op))
    return VerificationReport(name="bcl_agreement", checked=len(entries),
                              violations=tuple(violations))


def verify_crucial_inequality(data: SchubertData,
                              entries=None) -> VerificationReport:
    """dim(u) + |D_u| <= dim(v) + |D_v| over Bruhat-comparable pairs."""
    if entries is None:
        entries = cauchon_entries(data)
    rs = data.root_system
    violations = []
    checked = 0
    for a in entries:
        for b in entries:
            if not weyl.bruhat_leq(rs, a.element, b.element):
                continue
            checked += 1
            if a.stratum_dim + a.height > b.stratum_dim + b.height:
                violations.append((a.word, b.word))
    return VerificationReport(name="crucial_inequality", checked=checked,
                              violations=tuple(violations))


def verify_poset_monotone(data: SchubertData,
                          entries=None) -> VerificationReport:
    """Nested diagrams must be Bruhat-comparable; the converse can fail.

    Comparable-but-not-nested pairs are reported as notes, not violations:
    they illustrate that the inverse of the diagram indexing is not
    order-preserving in general.
    """
    if entries is None:
        entries = cauchon_entries(data)
    rs = data.root_system
    violations = []
    notes = []
    checked = 0
    for a in entries:
        for b in entries:
            checked += 1
            nested = a.diagram <= b.diagram
            leq = weyl.bruhat_leq(rs, a.element, b.element)
            if nested and not leq:
                violations.append((a.word, b.word))
            elif leq and not nested:
                notes.append((a.word, b.word))
    return VerificationReport(name="poset_monotone", checked=checked,
                              violations=tuple(violations),
                              notes=tuple(notes))


def degree_table(data: SchubertData, entries=None) -> list:
    """Per-entry rows of the degree report, as plain dicts."""
    if entries is None:
        entries = cauchon_entries(data)
    return [
        {
            "word": list(e.word),
            "diagram": sorted(e.diagram),
            "stratum_dim": e.stratum_dim,
            "height": e.height,
            "locdeg": e.locdeg,
            "primdeg": e.primdeg,
            "ratdeg": e.ratdeg,
        }
        for e in entries
    ]


def primdeg_at_height(entry: CauchonEntry, height_p: int) -> int:
    """Degree of a (not necessarily invariant) prime of given height in
    the entry's stratum."""
    lo, hi = entry.height, entry.height + entry.stratum_dim
    if not lo <= height_p <= hi:
        raise ValueError(f"height {height_p} outside [{lo}, {hi}]")
    return entry.stratum_dim + entry.height - height_p


def spec_from_dict(doc) -> SchubertSpec:
    """Build a spec from the JSON form {"type": "A", "rank": 2, "word": [...]}."""
    try:
        family = doc["type"]
        rank = doc["rank"]
        word = doc["word"]
    except (TypeError, KeyError) as exc:
        raise ValueError("document must contain 'type', 'rank', 'word'") from exc
    if not isinstance(family, str) or not isinstance(rank, int):
        raise ValueError("'type' must be a string and 'rank' an integer")
    if (not isinstance(word, list)
            or any(not isinstance(i, int) for i in word)):
        raise ValueError("'word' must be a list of integers")
    if any(not 1 <= i <= rank for i in word):
        raise ValueError(f"word letters must lie in 1..{rank}")
    return SchubertSpec(cartan_type=CartanType(family, rank),
                        word=tuple(word))
