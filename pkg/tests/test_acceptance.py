"""Acceptance suite: one test per exit criterion, one printed line each."""

import json
import random
import time

import pytest

from qstrata import cli
from qstrata.exact_linalg import Matrix, integer_kernel_basis, kernel_dim_q, rank_q
from qstrata.quantum_affine import (AffineSpaceSpec, skew_adjacency,
                                    stratum_dim, verify_strata_inequality)
from qstrata.quantum_torus import TorusSpec, center_description
from qstrata.root_system import CartanType
from qstrata.schubert import (SchubertSpec, build_schubert, cauchon_entries,
                              degree_table, stratum_dim_operator,
                              verify_crucial_inequality)

from oracles import boxed_kernel_vectors, in_lattice, rank_by_minors

SCHUBERT_CASES = [
    ("A", 2, (1, 2, 1), 6),
    ("B", 2, (1, 2, 1, 2), 8),
    ("G", 2, (1, 2, 1, 2, 1, 2), 12),
    ("A", 3, (1, 2, 1, 3, 2, 1), 24),
]


def _report(name, ok):
    print(f"ACCEPTANCE {name}: {'PASS' if ok else 'FAIL'}")
    assert ok


def _build(family, rank, word):
    return build_schubert(SchubertSpec(CartanType(family, rank), word))


def _random_skew(rng, n, bound=3):
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            rows[i][j] = rng.randint(-bound, bound)
            rows[j][i] = -rows[i][j]
    return Matrix.from_rows(rows)


def test_criterion_1_bcl_cross_formula_agreement():
    start = time.monotonic()
    ok = True
    for family, rank, word, _ in SCHUBERT_CASES:
        data = _build(family, rank, word)
        for e in cauchon_entries(data):
            if stratum_dim_operator(data, e.diagram) != e.stratum_dim:
                ok = False
    elapsed = time.monotonic() - start
    ok = ok and elapsed < 30.0
    _report(f"1 bcl-agreement ({elapsed:.2f}s)", ok)


def test_criterion_2_cauchon_bijection_counts():
    ok = True
    for family, rank, word, expected in SCHUBERT_CASES:
        data = _build(family, rank, word)
        entries = cauchon_entries(data)
        if len(entries) != expected:
            ok = False
        if len({e.element for e in entries}) != expected:
            ok = False
    _report("2 cauchon-counts (6/8/12/24)", ok)


def test_criterion_3_crucial_inequalities():
    rng = random.Random(2024)
    ok = True
    for _ in range(50):
        n = rng.randint(1, 10)
        spec = AffineSpaceSpec(n, _random_skew(rng, n))
        rep = verify_strata_inequality(spec, seed=2024)
        if not (rep.ok and rep.exhaustive and rep.pairs_checked == 3 ** n):
            ok = False
    for family, rank, word, _ in SCHUBERT_CASES:
        data = _build(family, rank, word)
        if not verify_crucial_inequality(data).ok:
            ok = False
    _report("3 crucial-inequalities", ok)


def test_criterion_4_a2_worked_example():
    data = _build("A", 2, (1, 2, 1))
    ok = data.betas == ((1, 0), (1, 1), (0, 1))
    ok = ok and data.skew_matrix.rows == ((0, 1, -1), (-1, 0, 1), (1, -1, 0))
    entries = cauchon_entries(data)
    by_len = {e.element.length: e for e in entries}
    ok = ok and by_len[0].stratum_dim == 1
    ok = ok and by_len[3].stratum_dim == 0
    ok = ok and all(e.height == e.element.length for e in entries)
    rows = degree_table(data, entries)
    ok = ok and all(r["locdeg"] == r["primdeg"] == r["ratdeg"]
                    == r["stratum_dim"] for r in rows)
    _report("4 a2-worked-example", ok)


def test_criterion_5_torus_affine_consistency():
    rng = random.Random(55)
    specs = [AffineSpaceSpec(2, Matrix.from_rows([[0, 1], [-1, 0]])),
             AffineSpaceSpec(3, Matrix.from_rows([[0, 1, -1], [-1, 0, 1],
                                                  [1, -1, 0]])),
             AffineSpaceSpec(4, Matrix.zero(4, 4))]
    specs += [AffineSpaceSpec(n, _random_skew(rng, n))
              for n in (2, 3, 4, 5, 6)]
    ok = True
    for spec in specs:
        for d in spec.all_diagrams():
            dim = stratum_dim(spec, d)
            sub = skew_adjacency(spec, d)
            r = (len(integer_kernel_basis(sub)) if sub.nrows else 0)
            if sub.nrows:
                r2 = center_description(TorusSpec(sub.nrows, sub)).rank
                if r2 != r:
                    ok = False
            if dim != r:
                ok = False
            if dim % 2 != (spec.n - len(d)) % 2:
                ok = False
    _report("5 torus-affine-consistency", ok)


def test_criterion_6_reduced_word_invariance():
    ok = True
    for family, rank, words in [("A", 2, [(1, 2, 1), (2, 1, 2)]),
                                ("B", 2, [(1, 2, 1, 2), (2, 1, 2, 1)])]:
        beta_sets = []
        dim_multisets = []
        for w in words:
            data = _build(family, rank, w)
            beta_sets.append(frozenset(data.betas))
            dim_multisets.append(tuple(sorted(
                stratum_dim_operator(data, e.diagram)
                for e in cauchon_entries(data))))
        if len(set(beta_sets)) != 1 or len(set(dim_multisets)) != 1:
            ok = False
    _report("6 reduced-word-invariance", ok)


def test_criterion_7_exact_linalg_oracle_equivalence():
    rng = random.Random(777)
    ok = True
    for _ in range(200):
        nr, nc = rng.randint(1, 6), rng.randint(1, 6)
        m = Matrix.from_rows([[rng.randint(-4, 4) for _ in range(nc)]
                              for _ in range(nr)])
        if rank_q(m) != rank_by_minors(m.to_lists(), nc):
            ok = False
        if nc <= 4:
            basis = integer_kernel_basis(m)
            if len(basis) != kernel_dim_q(m):
                ok = False
            for v in boxed_kernel_vectors(m.to_lists(), nc, 5):
                if not in_lattice(v, basis):
                    ok = False
    _report("7 linalg-oracle-equivalence", ok)


def test_criterion_8_determinism_and_cache_transparency(tmp_path, capsys):
    def run(argv):
        code = cli.main(argv)
        out = capsys.readouterr().out
        return code, out

    base = ["verify", "--format", "json", "--seed", "0"]
    code1, out1 = run(base)
    code2, out2 = run(base)
    cache = str(tmp_path / "cache")
    code3, out3 = run(base + ["--cache-dir", cache])
    code4, out4 = run(base + ["--cache-dir", cache])
    ok = (code1 == code2 == code3 == code4 == 0
          and out1 == out2 == out3 == out4
          and json.loads(out1)["ok"])
    with capsys.disabled():
        _report("8 determinism-and-cache", ok)
