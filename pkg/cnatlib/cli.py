# Copyright 2024 The cnatlib authors.

# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at

#     http://www.apache.org/licenses/LICENSE-2.0

# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""
Command line interface
======================

.. currentmodule:: cnatlib.cli

The ``cnat`` command exposes the library. Every subcommand builds a :class:`Report`,
printed as text or, with ``--json``, as a JSON document. Exit codes: ``0`` success,
``1`` usage or I/O errors, ``2`` domain failures (invalid input objects, failed
fixture comparisons).

.. autosummary::
    Report
    main
    build_parser
"""
import argparse
import csv
import json
import logging
import math
import sys

from . import enumeration, fixtures, reference, sequences
from ._matrices import (
    InvalidCnmError,
    InvariantError,
    MatrixFormatError,
    Permutation,
    all_permutations,
    associated_permutation,
    check_axioms,
    determinant_sign,
    format_matrix,
    is_irreducible,
    is_unique_leaf_matrix,
    is_upper_diagonal,
    leaf_matrix,
    parse_matrix,
    validate_cnm,
)
from ._version import __version__
from .bijections import (
    InvalidTableauError,
    InvalidTreeError,
    TableauFormatError,
    enumerate_tlts,
    format_tableau,
    format_tree,
    occupied_corners,
    parse_tableau,
    parse_tree,
    permutation_to_udftt,
    removal_code,
    tlt_to_udcnm,
    udcnm_to_tlt,
    udftt_to_permutation,
)
from .random import random_cnm
from .swaps import format_trace, parse_trace, reduce_to_upper_diagonal, replay_trace

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DOMAIN = 2

FORCE_LIMIT = 8
COUNT_METRICS = ("T", "det-parity", "b-table", "unique-leaf", "ud-cnm")
DIRECTIONS = ("perm-udftt", "udftt-perm", "udcnm-tlt", "tlt-udcnm")
SUITES = {"fast": 5, "full": 7, "slow": 8}
CSV_COMMANDS = ("count", "fnk", "a", "transform", "verify")


class UsageError(Exception):
    """Raised for arguments that are well-formed but not acceptable."""


class Report:
    """The outcome of one command.

    Args:
        command (str): subcommand name
        inputs (dict): echo of the parameters

    Commands listed in ``CSV_COMMANDS`` fill ``header`` and ``table`` with the rows
    written by ``--csv``.
    """

    def __init__(self, command, inputs):
        self.command = command
        self.inputs = dict(inputs)
        self.results = {}
        self.fixtures = []
        self.lines = []
        self.failed = False
        self.table = None
        self.header = None

    def compare(self, fixture_id, expected, actual):
        """Records a comparison against a golden value; returns whether it passed."""
        passed = expected == actual
        self.fixtures.append(
            {"id": fixture_id, "expected": expected, "actual": actual, "pass": passed}
        )
        if not passed:
            self.failed = True
            logger.warning("fixture %s failed: expected %r, got %r", fixture_id, expected, actual)
        return passed

    def say(self, text):
        self.lines.append(text)

    @property
    def exit_code(self):
        return EXIT_DOMAIN if self.failed else EXIT_OK

    def to_dict(self):
        return {
            "command": self.command,
            "inputs": self.inputs,
            "results": self.results,
            "fixtures": self.fixtures,
        }

    def to_text(self):
        lines = list(self.lines)
        for f in self.fixtures:
            mark = "ok  " if f["pass"] else "FAIL"
            lines.append(f"{mark} {f['id']}: expected {f['expected']}, got {f['actual']}")
        if self.fixtures:
            passed = sum(f["pass"] for f in self.fixtures)
            lines.append(f"{passed}/{len(self.fixtures)} fixtures passed")
        return "\n".join(lines)


def _read(path):
    try:
        with open(path, encoding="utf-8") as f:
            return f.read()
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e.strerror}") from e


def _write(path, text):
    try:
        with open(path, "w", encoding="utf-8") as f:
            f.write(text)
    except OSError as e:
        raise UsageError(f"cannot write {path}: {e.strerror}") from e


def _load_cnm(path, report):
    """Parses and validates a matrix file; records violations and returns ``None`` if invalid."""
    cells = parse_matrix(_read(path))
    try:
        return validate_cnm(cells)
    except InvalidCnmError as e:
        report.failed = True
        report.results["valid"] = False
        report.results["violations"] = [
            {"code": v.code, "cells": [list(c) for c in v.cells], "message": v.message}
            for v in e.violations
        ]
        report.say("invalid CNM")
        for v in e.violations:
            report.say(f"  {v.code}: {v.message} at {list(v.cells)}")
        return None


def _permutation_arg(text):
    try:
        return Permutation.parse(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e)) from e


# ------------------------------------------------------------------------
# Commands                                                               |
# ------------------------------------------------------------------------


def cmd_validate(args):
    """Validates a matrix file and prints its axiom diagnostics."""
    report = Report("validate", {"path": args.path})
    c = _load_cnm(args.path, report)
    if c is not None:
        report.results.update(
            {"valid": True, "n": c.n, "leaves": [list(v) for v in c.leaves]}
        )
        report.say(f"valid CNM of size {c.n} with leaves {list(c.leaves)}")
    return report


def cmd_leaf_matrix(args):
    report = Report("leaf-matrix", {"path": args.path})
    c = _load_cnm(args.path, report)
    if c is not None:
        P = leaf_matrix(c)
        report.results["leaf_matrix"] = format_matrix(P).splitlines()
        report.say(format_matrix(P).rstrip("\n"))
    return report


def cmd_perm(args):
    report = Report("perm", {"path": args.path})
    c = _load_cnm(args.path, report)
    if c is not None:
        p = associated_permutation(c)
        report.results.update(
            {
                "permutation": list(p.images),
                "cycles": p.cycles(),
                "sign": p.sign(),
                "irreducible": is_irreducible(p),
                "unique_leaf_matrix": is_unique_leaf_matrix(p),
                "upper_diagonal": is_upper_diagonal(c),
            }
        )
        report.say(f"{p}  {p.cycles()}")
    return report


def cmd_det(args):
    report = Report("det", {"path": args.path})
    c = _load_cnm(args.path, report)
    if c is not None:
        report.results["det"] = determinant_sign(c)
        report.say(str(report.results["det"]))
    return report


def cmd_enumerate(args):
    inputs = {"n": args.n, "perm": str(args.perm) if args.perm else None}
    report = Report("enumerate", inputs)
    if args.perm is not None:
        cnms = enumeration.cnats_with_leaf_matrix(args.perm)
    else:
        cnms = enumeration.all_cnms(args.n)

    if args.output:
        try:
            with open(args.output, "w", encoding="utf-8") as f:
                count = enumeration.write_cnms(cnms, f)
        except OSError as e:
            raise UsageError(f"cannot write {args.output}: {e.strerror}") from e
    else:
        count = enumeration.write_cnms(cnms, sys.stdout) if not args.json else sum(1 for _ in cnms)
    report.results["count"] = count
    report.say(f"{count} CNMs")
    return report


def _count_values(metric, n, jobs, force):
    if metric in ("T", "det-parity", "b-table"):
        table = enumeration.count_table(n, jobs=jobs, force=force)
        if metric == "T":
            return table.total, table
        if metric == "det-parity":
            return {"A": table.det_plus, "B": table.det_minus, "A-B": table.det_plus - table.det_minus}, table
        return {str(k): b for k, b in sorted(table.by_k.items())}, table
    if metric == "unique-leaf":
        return sum(1 for p in all_permutations(n) if is_unique_leaf_matrix(p)), None
    return enumeration.count_cnats_with_leaf_matrix(Permutation.reversal(n)), None


def cmd_count(args):
    """Counts one metric for one size."""
    report = Report("count", {"what": args.what, "n": args.n, "jobs": args.jobs})
    if args.n < 1:
        raise UsageError("n must be positive")
    if args.n > FORCE_LIMIT and not args.force:
        raise UsageError(f"n={args.n} is beyond the feasible range; pass --force to run anyway")

    values, table = _count_values(args.what, args.n, args.jobs, args.force)
    report.results.update({"n": args.n, "metric": args.what, "values": values})
    if args.what == "b-table":
        report.header, report.table = ("n", "k", "b"), table.to_rows()
    elif isinstance(values, dict):
        report.header = ("n", "metric", "value")
        report.table = [(args.n, key, v) for key, v in values.items()]
    else:
        report.header, report.table = ("n", "metric", "value"), [(args.n, args.what, values)]
    report.say(json.dumps(values) if isinstance(values, dict) else str(values))
    return report


def cmd_bijection(args):
    """Maps an object through one of the bijections and prints its image."""
    report = Report("bijection", {"direction": args.direction, "path": args.path})
    text = _read(args.path)

    if args.direction == "perm-udftt":
        t = permutation_to_udftt(Permutation.parse(text))
        code = removal_code(t)
        output = format_tree(t)
        report.results["removal_code"] = {"a": list(code.a), "b": list(code.b)}
    elif args.direction == "udftt-perm":
        t = parse_tree(text)
        code = removal_code(t)
        output = str(udftt_to_permutation(t)) + "\n"
        report.results["removal_code"] = {"a": list(code.a), "b": list(code.b)}
    elif args.direction == "udcnm-tlt":
        c = _load_cnm(args.path, report)
        if c is None:
            return report
        if not is_upper_diagonal(c):
            report.failed = True
            report.say("CNM is not upper-diagonal")
            return report
        t = udcnm_to_tlt(c)
        output = format_tableau(t)
        report.results["occupied_corners"] = len(occupied_corners(t))
    else:
        c = tlt_to_udcnm(parse_tableau(text))
        output = format_matrix(c.cells)

    report.results["output"] = output.splitlines()
    if args.output:
        _write(args.output, output)
    report.say(output.rstrip("\n"))
    if "occupied_corners" in report.results:
        report.say(f"occupied_corners: {report.results['occupied_corners']}")
    return report


def cmd_fnk(args):
    """Prints f(n, k) for one pair or a whole row, by the chosen method."""
    method = {
        "rec": sequences.f_rec,
        "simple": sequences.f_simple,
        "closed": sequences.f_closed,
        "oracle": sequences.f_count_oracle,
    }[args.method]
    report = Report("fnk", {"n": args.n, "k": args.k, "method": args.method})
    ks = [args.k] if args.k is not None else list(range(args.n))
    rows = [(args.n, k, method(args.n, k)) for k in ks]
    report.results["values"] = {str(k): f for _, k, f in rows}
    report.header, report.table = ("n", "k", "f"), rows
    for n, k, f in rows:
        report.say(f"f({n},{k}) = {f}")
    return report


def cmd_a(args):
    report = Report("a", {"n": args.n})
    value = sequences.a(args.n)
    report.results.update({"a": value, "f(n+1,n)": sequences.f_closed(args.n + 1, args.n)})
    report.header, report.table = ("n", "k", "f"), [(args.n + 1, args.n, value)]
    report.say(str(value))
    return report


def cmd_transform(args):
    """Binomial transform of explicit values, or of a b(n, k) column."""
    report = Report("transform", {"values": args.values, "column": args.column, "forward": args.forward})
    if args.column is not None:
        tables = [enumeration.count_table(n, jobs=args.jobs) for n in range(2, args.n_max + 1)]
        seq = sequences.b_column(tables, args.column)
    elif args.values:
        seq = args.values
    else:
        raise UsageError("give values or --column")
    out = sequences.binomial_transform(seq, inverse=not args.forward)
    report.results.update({"sequence": list(seq), "transform": out})
    report.header = ("m", "value", "transform")
    report.table = list(zip(range(len(out)), seq, out))
    report.say(" ".join(str(x) for x in out))
    return report


def cmd_reduce(args):
    report = Report("reduce", {"path": args.path, "snapshots": args.snapshots})
    c = _load_cnm(args.path, report)
    if c is None:
        return report
    trace, result = reduce_to_upper_diagonal(c, snapshots=args.snapshots)
    sign_ok = associated_permutation(c).sign() == (-1) ** len(trace) * associated_permutation(result).sign()
    report.results.update(
        {
            "steps": [str(s) for s in trace],
            "length": len(trace),
            "result": format_matrix(result.cells).splitlines(),
            "sign_consistent": sign_ok,
        }
    )
    if args.snapshots:
        report.results["snapshots"] = [format_matrix(m).splitlines() for m in trace.snapshots]
    if args.trace:
        _write(args.trace, format_trace(trace))
    report.say(format_trace(trace).rstrip("\n"))
    report.say(format_matrix(result.cells).rstrip("\n"))
    return report


def cmd_replay(args):
    report = Report("replay", {"path": args.path, "trace": args.trace})
    cells = parse_matrix(_read(args.path))
    try:
        steps = parse_trace(_read(args.trace))
    except ValueError as e:
        raise UsageError(str(e)) from e
    results = replay_trace(cells, steps)
    valid = [r.valid for r in results]
    final = results[-1].cells if results else cells
    report.results.update(
        {
            "valid": valid,
            "final": format_matrix(final).splitlines(),
            "final_is_cnm": not check_axioms(final),
        }
    )
    if not all(valid) or check_axioms(final):
        report.failed = True
    for step, ok in zip(steps, valid):
        report.say(f"{step}: {'valid' if ok else 'INVALID'}")
    return report


# ------------------------------------------------------------------------
# Verification                                                           |
# ------------------------------------------------------------------------


def _verify_counts(report, n_max, jobs):
    golden = fixtures.data_table()
    b_golden = fixtures.b_table()
    tables = {}
    for n in range(1, n_max + 1):
        table = enumeration.count_table(n, jobs=jobs, force=True)
        tables[n] = table
        T, A, B = golden[n]
        report.compare(f"T({n})", T, table.total)
        report.compare(f"det-parity({n})", [A, B], [table.det_plus, table.det_minus])
        report.compare(f"sum k*b({n},k) = T({n})", T, sum(k * b for k, b in table.by_k.items()))
        for k, b in sorted(b_golden.get(n, {}).items()):
            report.compare(f"b({n},{k})", b, table.b(k))
        if n >= 2:
            report.compare(f"unique-leaf({n})", 2 ** (n - 2), table.b(1))
    # b(2, 1) = b(1, 1) = 1, so the doubling bound starts at n = 2
    for n in range(2, n_max):
        report.compare(f"b({n + 1},k) >= 2 b({n},k)", True, enumeration.lower_bound_holds(tables[n], tables[n + 1]))
    for n in range(3, n_max):
        report.compare(f"b({n},2) = b({n + 1},3)", tables[n].b(2), tables[n + 1].b(3))

    targets = fixtures.binomial_transform_targets()
    ordered = [tables[n] for n in range(2, n_max + 1)]
    for k, target in sorted(targets.items()):
        out = sequences.binomial_transform(sequences.b_column(ordered, k))
        m = min(len(out), len(target))
        report.compare(f"transform b(n,{k})", target[:m], out[:m])


def _verify_leaf_matrices(report, n_max):
    for n in range(2, min(n_max, 7) + 1):
        counts = {p: enumeration.count_cnats_with_leaf_matrix(p) for p in all_permutations(n)}
        counted = sum(1 for k in counts.values() if k == 1)
        report.compare(f"L-subset criterion({n})", 2 ** (n - 2), counted)
        agree = all(is_unique_leaf_matrix(p) == (k == 1) for p, k in counts.items())
        report.compare(f"unique leaf matrices({n})", True, agree)

    for n in range(1, min(n_max, 6) + 1):
        agree = all(
            is_irreducible(p) == bool(enumeration.enumerate_cnats_with_leaf_matrix(p))
            for p in all_permutations(n)
        )
        report.compare(f"irreducible iff nonempty({n})", True, agree)

    for n in range(1, min(n_max, 5) + 1):
        constructive = sorted(c.key for c in enumeration.all_cnms(n))
        brute = [c.key for c in reference.brute_force_cnms(n)]
        report.compare(f"oracle equivalence({n})", brute, constructive)

    for n in range(2, min(n_max, 5) + 1):
        ok = True
        for p in enumeration.irreducible_permutations(n):
            k = enumeration.count_cnats_with_leaf_matrix(p)
            first, second = enumeration.extend_leaf_matrix(p)
            ok &= first != second
            ok &= enumeration.count_cnats_with_leaf_matrix(first) == k
            ok &= enumeration.count_cnats_with_leaf_matrix(second) == k
        report.compare(f"extensions({n})", True, ok)

    for n in range(2, min(n_max, 6) + 1):
        best, winners = enumeration.max_cnat_permutations(n)
        report.compare(
            f"max CNMs per leaf matrix({n})",
            [math.factorial(n - 1), [list(range(n, 0, -1))]],
            [best, [list(p.images) for p in winners]],
        )


def _verify_bijections(report, n_max):
    for n in range(2, min(n_max, 6) + 1):
        ud = enumeration.enumerate_cnats_with_leaf_matrix(Permutation.reversal(n))
        report.compare(f"UD CNMs({n})", math.factorial(n - 1), len(ud))
        images = {udcnm_to_tlt(c) for c in ud}
        report.compare(f"TLT images({n})", math.factorial(n - 1), len(images))
        report.compare(f"TLT round trip({n})", True, all(tlt_to_udcnm(udcnm_to_tlt(c)) == c for c in ud))
        trees = {permutation_to_udftt(p) for p in all_permutations(n - 1)}
        report.compare(f"UdFtts({n})", math.factorial(n - 1), len(trees))
        report.compare(
            f"UdFtt round trip({n})", True, all(permutation_to_udftt(udftt_to_permutation(t)) == t for t in trees)
        )


def _verify_sequences(report, n_max):
    for n in range(1, min(n_max, 6) + 1):
        no_corner = sum(1 for t in enumerate_tlts(n) if not occupied_corners(t))
        values = [
            no_corner,
            sequences.f_count_oracle(n + 1, n),
            sequences.f_rec(n + 1, n),
            sequences.f_closed(n + 1, n),
            sequences.a(n),
        ]
        report.compare(f"a({n}) five ways", [no_corner] * 5, values)

    for n in range(2, 13):
        row = [(sequences.f_rec(n, k), sequences.f_simple(n, k), sequences.f_closed(n, k)) for k in range(-1, n)]
        report.compare(f"f_rec = f_simple = f_closed({n})", True, all(x == y == z for x, y, z in row))
        report.compare(f"row sum f({n},k)", math.factorial(n - 1), sum(x for x, _, _ in row))
    report.compare(
        "a(n) = f(n+1,n), n <= 12",
        [sequences.f_rec(n + 1, n) for n in range(1, 13)],
        [sequences.a(n) for n in range(1, 13)],
    )


def _reduces_cleanly(c, bound):
    trace, out = reduce_to_upper_diagonal(c)
    sign_ok = associated_permutation(c).sign() == (-1) ** len(trace) * associated_permutation(out).sign()
    return sign_ok and len(trace) <= bound


def _verify_reductions(report, n_max, samples):
    for n in range(1, min(n_max, 5) + 1):
        ok = all(_reduces_cleanly(c, n * n) for c in enumeration.all_cnms(n))
        report.compare(f"reduction({n})", True, ok)

    ok = all(_reduces_cleanly(random_cnm(6, seed=seed), 36) for seed in range(samples))
    report.compare(f"reduction of {samples} random size-6 CNMs", True, ok)


def _guarded(report, name, check, *args):
    """Runs one group of checks; an ``InvariantError`` becomes a failed comparison."""
    try:
        check(report, *args)
    except InvariantError as e:
        logger.error("%s raised InvariantError: %s", name, e)
        report.results.setdefault("errors", []).append({"check": name, "error": str(e)})
        report.compare(f"{name}: no invariant violation", None, f"InvariantError: {e}")


def cmd_verify(args):
    """Runs the golden-fixture comparisons and property checks of a suite."""
    report = Report("verify", {"suite": args.suite, "jobs": args.jobs})
    n_max = SUITES[args.suite]
    samples = 20 if args.suite == "fast" else 1000
    _guarded(report, "counts", _verify_counts, n_max, args.jobs)
    _guarded(report, "leaf matrices", _verify_leaf_matrices, n_max)
    _guarded(report, "bijections", _verify_bijections, n_max)
    _guarded(report, "sequences", _verify_sequences, n_max)
    _guarded(report, "reductions", _verify_reductions, n_max, samples)
    report.table = [(f["id"], f["pass"]) for f in report.fixtures]
    report.header = ("id", "pass")
    return report


# ------------------------------------------------------------------------
# Entry point                                                            |
# ------------------------------------------------------------------------


def build_parser():
    """Returns the ``argparse`` parser of the ``cnat`` command."""
    parser = argparse.ArgumentParser(
        prog="cnat", description="Complete non-ambiguous trees and their matrices."
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v for info, -vv for debug logging")
    parser.add_argument("--json", action="store_true", help="print the report as JSON")
    parser.add_argument("--csv", metavar="PATH", help="write tabular results as CSV (count, fnk, a, transform, verify)")
    parser.add_argument("--jobs", type=int, default=None, help="number of workers (default: CNATLIB_JOBS or CPU count)")
    parser.add_argument("--force", action="store_true", help="allow sizes beyond the feasible range")
    sub = parser.add_subparsers(dest="command", required=True)

    for name, func, help_text in (
        ("validate", cmd_validate, "check the four axioms"),
        ("leaf-matrix", cmd_leaf_matrix, "print the leaf matrix"),
        ("perm", cmd_perm, "print the associated permutation"),
        ("det", cmd_det, "print the determinant"),
    ):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("path", help="matrix file")
        p.set_defaults(func=func)

    p = sub.add_parser("enumerate", help="stream CNMs of one size or one leaf matrix")
    p.add_argument("n", type=int, nargs="?", default=None)
    p.add_argument("--perm", type=_permutation_arg, help="one-line permutation, e.g. '3 5 1 2 4'")
    p.add_argument("--output", metavar="PATH")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("count", help="aggregate counts")
    p.add_argument("what", choices=COUNT_METRICS)
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("bijection", help="map an object through a bijection")
    p.add_argument("direction", choices=DIRECTIONS)
    p.add_argument("path")
    p.add_argument("--output", metavar="PATH")
    p.set_defaults(func=cmd_bijection)

    p = sub.add_parser("fnk", help="f(n, k)")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int, nargs="?", default=None)
    p.add_argument("--method", choices=("rec", "simple", "closed", "oracle"), default="rec")
    p.set_defaults(func=cmd_fnk)

    p = sub.add_parser("a", help="tree-like tableaux without occupied corners")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_a)

    p = sub.add_parser("transform", help="binomial transform")
    p.add_argument("values", type=int, nargs="*")
    p.add_argument("--column", type=int, help="transform the b(n, k) column k")
    p.add_argument("--n-max", type=int, default=6)
    p.add_argument("--forward", action="store_true", help="use the unsigned transform")
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("reduce", help="reduce to upper-diagonal form")
    p.add_argument("path")
    p.add_argument("--trace", metavar="PATH", help="write the swap trace")
    p.add_argument("--snapshots", action="store_true")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("replay", help="re-apply a swap trace and validate")
    p.add_argument("path")
    p.add_argument("trace")
    p.set_defaults(func=cmd_replay)

    p = sub.add_parser("verify", help="compare against the golden fixtures")
    p.add_argument("suite", choices=tuple(SUITES), nargs="?", default="fast")
    p.set_defaults(func=cmd_verify)
    return parser


def _write_csv(path, report):
    try:
        with open(path, "w", newline="", encoding="utf-8") as f:
            writer = csv.writer(f)
            writer.writerow(report.header)
            writer.writerows(report.table)
    except OSError as e:
        raise UsageError(f"cannot write {path}: {e.strerror}") from e


def main(argv=None):
    """Runs the ``cnat`` command and returns its exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "enumerate" and (args.n is None) == (args.perm is None):
            parser.error("enumerate needs exactly one of n and --perm")
    except SystemExit as e:
        # argparse exits with 2 on bad usage; --help and --version exit with 0
        return EXIT_OK if not e.code else EXIT_USAGE

    level = {0: logging.WARNING, 1: logging.INFO}.get(args.verbose, logging.DEBUG)
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")

    try:
        if args.csv and args.command not in CSV_COMMANDS:
            raise UsageError(f"--csv is not supported by {args.command}; use one of {', '.join(CSV_COMMANDS)}")
        report = args.func(args)
        if args.csv:
            _write_csv(args.csv, report)
    except UsageError as e:
        print(f"cnat: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (MatrixFormatError, TableauFormatError) as e:
        print(f"cnat: error: {e}", file=sys.stderr)
        return EXIT_DOMAIN
    except (InvalidTreeError, InvalidTableauError, ValueError) as e:
        print(f"cnat: error: {e}", file=sys.stderr)
        return EXIT_DOMAIN

    if args.json:
        print(json.dumps(report.to_dict(), indent=2))
    else:
        text = report.to_text()
        if text:
            print(text)
    return report.exit_code
