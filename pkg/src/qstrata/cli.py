"""Command-line interface.

Verbs:
  affine    per-diagram stratum reports plus the nested-pair inequality check
  torus     center lattice description and degree table over heights
  schubert  roots, skew matrix, degree table, and all three verifiers
  verify    built-in desk-scale suite; exits nonzero on any violation

JSON is the canonical output; csv and table are projections of the same
record set.  Exit codes: 0 success, 1 verification failure, 2 bad input.
"""

from __future__ import annotations

import argparse
import csv
import hashlib
import io
import json
import os
import sys
import tempfile

from . import quantum_affine, quantum_torus, schubert

CACHE_VERSION = 1
CACHE_ENV_VAR = "QSTRATA_CACHE_DIR"
AFFINE_N_GUARD = 20


class InputError(Exception):
    pass


# ---------------------------------------------------------------------------
# cache


def _cache_key(spec: schubert.SchubertSpec) -> str:
    doc = {
        "family": spec.cartan_type.family,
        "rank": spec.cartan_type.rank,
        "word": list(spec.word),
        "version": CACHE_VERSION,
    }
    blob = json.dumps(doc, sort_keys=True).encode()
    return hashlib.sha256(blob).hexdigest()


def cache_lookup(cache_dir, spec):
    """Return the cached payload for spec, or None on any kind of miss."""
    if not cache_dir:
        return None
    path = os.path.join(cache_dir, _cache_key(spec) + ".json")
    try:
        with open(path, encoding="utf-8") as fh:
            entry = json.load(fh)
    except (OSError, ValueError):
        return None
    if entry.get("version") != CACHE_VERSION:
        return None
    return entry.get("payload")


def cache_store(cache_dir, spec, payload):
    """Atomically store a payload; failures to write are non-fatal."""
    if not cache_dir:
        return
    try:
        os.makedirs(cache_dir, exist_ok=True)
        entry = {"version": CACHE_VERSION, "payload": payload}
        fd, tmp = tempfile.mkstemp(dir=cache_dir, suffix=".tmp")
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            json.dump(entry, fh, sort_keys=True)
        os.replace(tmp, os.path.join(cache_dir, _cache_key(spec) + ".json"))
    except OSError:
        pass


# ---------------------------------------------------------------------------
# input / output helpers


def _load_input(raw):
    """Accept a path to a JSON file, '-' for stdin, or inline JSON."""
    if raw is None:
        raise InputError("--input is required for this command")
    if raw == "-":
        text = sys.stdin.read()
    elif raw.lstrip().startswith(("{", "[")):
        text = raw
    else:
        try:
            with open(raw, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise InputError(f"cannot read input file: {exc}") from exc
    try:
        return json.loads(text)
    except ValueError as exc:
        raise InputError(f"input is not valid JSON: {exc}") from exc


def _emit_json(doc, out):
    json.dump(doc, out, sort_keys=True, separators=(",", ": "), indent=1)
    out.write("\n")


def _emit_csv(rows, out):
    if not rows:
        return
    writer = csv.DictWriter(out, fieldnames=list(rows[0]), lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({k: _flat(v) for k, v in row.items()})


def _flat(v):
    if isinstance(v, list):
        return " ".join(str(x) for x in v)
    return v


def _emit_table(rows, out):
    if not rows:
        return
    headers = list(rows[0])
    cells = [[str(_flat(r[h])) for h in headers] for r in rows]
    widths = [max(len(h), *(len(c[i]) for c in cells))
              for i, h in enumerate(headers)]
    out.write("  ".join(h.ljust(w) for h, w in zip(headers, widths)).rstrip())
    out.write("\n")
    for c in cells:
        out.write("  ".join(x.ljust(w) for x, w in zip(c, widths)).rstrip())
        out.write("\n")


def _emit(doc, rows, fmt, out):
    if fmt == "json":
        _emit_json(doc, out)
    elif fmt == "csv":
        _emit_csv(rows, out)
    else:
        _emit_table(rows, out)


def _verifier_doc(report):
    return {
        "name": report.name,
        "checked": report.checked,
        "ok": report.ok,
        "violations": [list(map(list, v)) for v in report.violations],
        "notes": [list(map(list, n)) for n in report.notes],
    }


# ---------------------------------------------------------------------------
# verbs


def run_affine(args, out):
    spec = quantum_affine.spec_from_dict(_load_input(args.input))
    if spec.n > AFFINE_N_GUARD and not args.force:
        raise InputError(
            f"N={spec.n} exceeds the {AFFINE_N_GUARD}-generator guard "
            "(pass --force to override)")
    rows = []
    for d in spec.all_diagrams():
        r = quantum_affine.stratum_report(spec, d)
        rows.append({
            "diagram": sorted(r.diagram),
            "stratum_dim": r.stratum_dim,
            "height": r.height,
            "locdeg": r.locdeg,
            "primdeg": r.primdeg,
            "ratdeg": r.ratdeg,
        })
    ineq = quantum_affine.verify_strata_inequality(spec, seed=args.seed)
    doc = {
        "n": spec.n,
        "skew": spec.skew.to_lists(),
        "reports": rows,
        "inequality": {
            "ok": ineq.ok,
            "pairs_checked": ineq.pairs_checked,
            "exhaustive": ineq.exhaustive,
            "seed": ineq.seed,
            "violations": [list(map(list, v)) for v in ineq.violations],
        },
    }
    _emit(doc, rows, args.format, out)
    return 0 if ineq.ok else 1


def run_torus(args, out):
    spec = quantum_torus.spec_from_dict(_load_input(args.input))
    center = quantum_torus.center_description(spec)
    rows = [{"height": h, "degree": quantum_torus.degree_of_prime(spec, h)}
            for h in range(center.rank + 1)]
    doc = {
        "n": spec.n,
        "skew": spec.skew.to_lists(),
        "center_rank": center.rank,
        "lattice_basis": [list(b) for b in center.lattice_basis],
        "degrees": rows,
    }
    _emit(doc, rows, args.format, out)
    return 0


def _schubert_doc(spec, interval_guard):
    """Full report document: build data, degree table, all verifiers."""
    data = schubert.build_schubert(spec)
    entries = schubert.cauchon_entries(data, interval_guard=interval_guard)
    verifiers = [
        schubert.verify_bcl_agreement(data, entries),
        schubert.verify_crucial_inequality(data, entries),
        schubert.verify_poset_monotone(data, entries),
    ]
    return {
        "type": spec.cartan_type.family,
        "rank": spec.cartan_type.rank,
        "word": list(spec.word),
        "betas": [list(b) for b in data.betas],
        "skew_matrix": data.skew_matrix.to_lists(),
        "degree_table": schubert.degree_table(data, entries),
        "verifiers": [_verifier_doc(v) for v in verifiers],
    }


def _schubert_doc_cached(spec, interval_guard, cache_dir):
    doc = cache_lookup(cache_dir, spec)
    if doc is None:
        doc = _schubert_doc(spec, interval_guard)
        cache_store(cache_dir, spec, doc)
    return doc


def run_schubert(args, out):
    spec = schubert.spec_from_dict(_load_input(args.input))
    guard = None if args.force else schubert.INTERVAL_GUARD
    doc = _schubert_doc_cached(spec, guard, args.cache_dir)
    _emit(doc, doc["degree_table"], args.format, out)
    return 0 if all(v["ok"] for v in doc["verifiers"]) else 1


BUILTIN_SCHUBERT_CASES = [
    ("A", 2, [1, 2, 1]),
    ("B", 2, [1, 2, 1, 2]),
    ("G", 2, [1, 2, 1, 2, 1, 2]),
    ("A", 3, [1, 2, 1, 3, 2, 1]),
]


def _random_skew(rng, n):
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            rows[i][j] = rng.randint(-3, 3)
            rows[j][i] = -rows[i][j]
    return rows


def run_verify(args, out):
    import random

    checks = []

    for family, rank, word in BUILTIN_SCHUBERT_CASES:
        spec = schubert.SchubertSpec(schubert.CartanType(family, rank),
                                     tuple(word))
        doc = _schubert_doc_cached(spec, schubert.INTERVAL_GUARD,
                                   args.cache_dir)
        for rep in doc["verifiers"]:
            checks.append({
                "case": f"schubert {family}{rank} {list(word)}",
                "check": rep["name"],
                "checked": rep["checked"],
                "ok": rep["ok"],
            })

    rng = random.Random(args.seed)
    for k in range(10):
        n = rng.randint(2, 7)
        aspec = quantum_affine.AffineSpaceSpec(
            n, quantum_affine.Matrix.from_rows(_random_skew(rng, n)))
        rep = quantum_affine.verify_strata_inequality(aspec, seed=args.seed)
        checks.append({
            "case": f"affine random #{k} (n={n})",
            "check": "strata_inequality",
            "checked": rep.pairs_checked,
            "ok": rep.ok,
        })

    ok = all(c["ok"] for c in checks)
    doc = {"seed": args.seed, "ok": ok, "checks": checks}
    _emit(doc, checks, args.format, out)
    return 0 if ok else 1


# ---------------------------------------------------------------------------
# entry point


def build_parser():
    parser = argparse.ArgumentParser(
        prog="qstrata",
        description="Exact stratum dimensions, heights, and degree triples "
                    "for quantum tori, affine spaces, and Schubert cells.")
    sub = parser.add_subparsers(dest="verb", required=True)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", help="path, inline JSON, or - for stdin")
    common.add_argument("--format", choices=["json", "csv", "table"],
                        default="table")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--cache-dir",
                        default=os.environ.get(CACHE_ENV_VAR),
                        help="directory for cached enumerations "
                             f"(default from ${CACHE_ENV_VAR})")
    common.add_argument("--force", action="store_true",
                        help="override size guards")
    common.add_argument("--quiet", action="store_true",
                        help="suppress the report, keep the exit code")
    sub.add_parser("affine", parents=[common],
                   help="stratum reports for a quantum affine space")
    sub.add_parser("torus", parents=[common],
                   help="center lattice and degrees for a quantum torus")
    sub.add_parser("schubert", parents=[common],
                   help="degree table and verifiers for a Schubert cell")
    sub.add_parser("verify", parents=[common],
                   help="run the built-in verification suite")
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    out = io.StringIO() if args.quiet else sys.stdout
    runner = {
        "affine": run_affine,
        "torus": run_torus,
        "schubert": run_schubert,
        "verify": run_verify,
    }[args.verb]
    try:
        return runner(args, out)
    except (InputError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
