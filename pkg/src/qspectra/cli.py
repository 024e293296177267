"""Command-line surface: variety registry, spectrum reports, collection
checks, and the cross-validation selftest.

Exit codes: 0 success, 1 usage or input error, 2 internal invariant
violation (an AssertionError escaping the library).  JSON output is
byte-identical across runs: it carries tool and version strings but no
timestamps or timings; wall-clock numbers go to stderr only.
"""

import argparse
import json
import random
import sys
import time
from fractions import Fraction

from . import __version__
from .algebra import (jacobi_ring, mult_matrix, qh_ig2, qh_projective,
                      validate_algebra)
from .bwb import (BundleExpr, check_collection, check_collection_hyperplane,
                  collection_backend, ext_table)
from .chevalley import grassmann_divisor_matrix, ig2_divisor_matrix
from .exactlin import charpoly
from .lefschetz import (builtin_collection, conjecture_numerology,
                        lengths, load_collection)
from .schur import qh_grassmannian
from .spectrum import quantum_spectrum_report


class VarietyDescriptor:
    __slots__ = ("id", "display", "provider", "fano_index", "dim_X")

    def __init__(self, id, display, provider, fano_index, dim_X):
        self.id = id
        self.display = display
        self.provider = provider
        self.fano_index = fano_index
        self.dim_X = dim_X


def _build_registry():
    reg = {}

    def add(id, display, provider, fano_index, dim_X):
        assert id not in reg, "duplicate registry id"
        reg[id] = VarietyDescriptor(id, display, provider, fano_index, dim_X)

    for n in range(1, 11):
        add("P%d" % n, "projective space of dimension %d" % n,
            (lambda n=n: qh_projective(n)), n + 1, n)
    for k, n in ((2, 4), (2, 5), (2, 6), (3, 6)):
        add("G(%d,%d)" % (k, n), "Grassmannian of %d-planes in %d-space"
            % (k, n), (lambda k=k, n=n: qh_grassmannian(k, n)), n,
            k * (n - k))
    for n in (2, 3, 4, 5):
        add("IG(2,%d)" % (2 * n),
            "isotropic Grassmannian of 2-planes in %d-space" % (2 * n),
            (lambda n=n: qh_ig2(n)), 2 * n - 1, 4 * n - 5)
    for label in (["A%d" % r for r in range(1, 9)]
                  + ["D%d" % r for r in (4, 5, 6)]
                  + ["E%d" % r for r in (6, 7, 8)]):
        add(label, "Milnor algebra of the %s singularity" % label,
            (lambda label=label: jacobi_ring(label)), 1, None)
    return reg


REGISTRY = _build_registry()


class RunReport:
    """Everything one command run produced: the spectrum report plus
    optional numerology and exceptionality verdicts, and tool metadata."""

    __slots__ = ("spectrum", "numerology", "bwb", "meta")

    def __init__(self, spectrum=None, numerology=None, bwb=None):
        self.spectrum = spectrum
        self.numerology = numerology
        self.bwb = bwb
        self.meta = {"tool": "qspectra", "version": __version__}

    def to_dict(self):
        out = {"meta": dict(self.meta)}
        if self.spectrum is not None:
            out["spectrum"] = self.spectrum.to_dict()
        if self.numerology is not None:
            out["numerology"] = self.numerology.to_dict()
        if self.bwb is not None:
            out["bwb"] = self.bwb.to_dict()
        return out


def _yes(flag):
    return "yes" if flag else "no"


def _count(value):
    if isinstance(value, Fraction) and value.denominator != 1:
        return "%d/%d" % (value.numerator, value.denominator)
    return "%d" % value


def _report_markdown(r):
    zp = r.zero_part
    rows = [
        ("algebra dimension", "%d" % r.dim_total),
        ("Fano index m", "%d" % r.fano_index),
        ("anticanonical charpoly", r.to_dict()["kappa_charpoly"]),
        ("invertible fiber: length", "%d" % r.dim_nonzero_part),
        ("invertible fiber: reduced points", "%d" % r.nonzero_point_count),
        ("invertible fiber: semisimple", _yes(r.nonzero_semisimple)),
        ("orbits by length (k)", _count(r.orbit_count_by_length)),
        ("orbits by points", _count(r.orbit_count_by_points)),
        ("charpoly rotation-invariant", _yes(r.charpoly_rotation_invariant)),
        ("zero fiber: length", "%d" % r.dim_zero_part),
        ("zero fiber: points", "%d" % zp["geometric_point_count"]),
        ("zero fiber: single point", _yes(zp["is_single_point"])),
        ("zero fiber: Hilbert function",
         "(%s)" % ", ".join(str(h) for h in zp["hilbert_function"])),
        ("zero fiber: socle dimension", "%d" % zp["socle_dim"]),
    ]
    lines = ["# quantum spectrum: %s" % r.name, "",
             "| quantity | value |", "| --- | --- |"]
    lines += ["| %s | %s |" % row for row in rows]
    return "\n".join(lines)


def _registry_listing():
    return "registered ids: " + ", ".join(REGISTRY)


def cmd_report(args):
    desc = REGISTRY.get(args.id)
    if desc is None:
        print("unknown variety id %r" % args.id, file=sys.stderr)
        print(_registry_listing(), file=sys.stderr)
        return 1
    t0 = time.monotonic()
    report = quantum_spectrum_report(desc.provider())
    elapsed = time.monotonic() - t0
    print(_report_markdown(report))
    if args.json:
        run = RunReport(spectrum=report)
        with open(args.json, "w", encoding="utf-8") as fh:
            json.dump(run.to_dict(), fh, indent=2, sort_keys=True)
            fh.write("\n")
    print("computed in %.3f s" % elapsed, file=sys.stderr)
    return 0


def _numerology_lines(verdict):
    lines = ["numerology vs spectrum of %s:" % verdict.variety]
    for name, ck in verdict.checks.items():
        lines.append("  [%s] %s: %s" % ("ok" if ck["ok"] else "differs",
                                        name, ck["explanation"]))
    return lines


def _bwb_lines(verdict, backend):
    n = len(verdict.objects)
    lines = ["exceptionality via %s backend: %d objects, %d ordered pairs"
             % (backend, n, n * (n - 1) // 2)]
    for f in verdict.failures:
        if f["kind"] == "exceptional":
            lines.append("  [fail] %s is not exceptional: %r"
                         % (f["object"], f["table"]))
        else:
            lines.append("  [fail] Ext(%s, %s) nonzero: %r"
                         % (f["source"], f["target"], f["table"]))
    for f in verdict.inconclusive:
        what = (f["object"] if f["kind"] == "exceptional"
                else "Ext(%s, %s)" % (f["source"], f["target"]))
        lines.append("  [undecided] %s: the vanishing criterion does not "
                     "determine this pair; exceptionality here rests on "
                     "the literature, not on this run" % what)
    if verdict.ok:
        lines.append("  all pairs pass")
    return lines


def cmd_check(args):
    try:
        coll = load_collection(args.file)
    except (OSError, json.JSONDecodeError, ValueError) as e:
        print("cannot read collection %s: %s" % (args.file, e),
              file=sys.stderr)
        return 1
    desc = REGISTRY.get(coll.variety)
    if desc is None:
        print("collection names unknown variety %r" % coll.variety,
              file=sys.stderr)
        print(_registry_listing(), file=sys.stderr)
        return 1
    t0 = time.monotonic()
    report = quantum_spectrum_report(desc.provider())
    verdict = conjecture_numerology(report, coll)
    sizes = lengths(coll)
    print("collection on %s: sigma = %r, starting block of %d"
          % (coll.variety, coll.support, len(coll.starting_block)))
    print("lengths: total %d, rectangular %d, residual %d"
          % (sizes["total"], sizes["rectangular"],
             sizes["residual_expected"]))
    for line in _numerology_lines(verdict):
        print(line)
    # shape disagreement is information about the collection, not an
    # error: a full collection need not be of the conjectured shape
    code = 0
    bwb_verdict = None
    if args.bwb:
        backend = collection_backend(coll.variety)
        if backend is None:
            print("warning: no cohomology backend for %r; numerology only"
                  % coll.variety, file=sys.stderr)
        else:
            if backend == "grassmannian":
                bwb_verdict = check_collection(coll)
            else:
                bwb_verdict = check_collection_hyperplane(coll)
            for line in _bwb_lines(bwb_verdict, backend):
                print(line)
            if not bwb_verdict.ok:
                code = 1
    print("checked in %.3f s" % (time.monotonic() - t0), file=sys.stderr)
    return code


def _selftest_checks():
    """The cross-validation suite, as (module, description, thunk) rows.

    Every thunk either returns silently or raises AssertionError with a
    reason; each row reruns independent constructions against each other
    rather than repeating any single implementation.
    """
    checks = []

    def add(module, description):
        def wrap(fn):
            checks.append((module, description, fn))
            return fn
        return wrap

    @add("schur", "tableau ring matches divisor reconstruction on G(2,5)")
    def _():
        from .chevalley import grassmannian_algebra
        A = qh_grassmannian(2, 5)
        B = grassmannian_algebra(2, 5)
        assert A.structure == B.structure, "structure constants differ"
        assert A.anticanonical == B.anticanonical

    @add("schur", "rim-hook ring matches polynomial presentation on P4")
    def _():
        A = qh_grassmannian(1, 5)
        B = qh_projective(4)
        assert A.structure == B.structure, "structure constants differ"

    @add("algebra", "every registry provider validates")
    def _():
        for desc in REGISTRY.values():
            report = validate_algebra(desc.provider())
            assert report.ok, "%s: %s" % (desc.id,
                                          "; ".join(report.violations))

    @add("algebra", "isotropic divisor operator matches the shipped ring")
    def _():
        for n in (2, 3, 4, 5):
            A = qh_ig2(n)
            m = A.fano_index
            sigma1 = tuple(c / m for c in A.anticanonical)
            D, _lengths = ig2_divisor_matrix(n)
            got = charpoly(mult_matrix(A, sigma1))
            want = charpoly(D)
            assert got.coeffs == want.coeffs, "IG(2,%d) charpoly" % (2 * n)

    @add("algebra", "grassmannian divisor operator matches the tableau ring")
    def _():
        for k, n in ((2, 4), (2, 5), (3, 6)):
            A = qh_grassmannian(k, n)
            sigma1 = tuple(c / n for c in A.anticanonical)
            D, _lengths = grassmann_divisor_matrix(k, n)
            got = charpoly(mult_matrix(A, sigma1))
            want = charpoly(D)
            assert got.coeffs == want.coeffs, "G(%d,%d) charpoly" % (k, n)

    @add("exactlin", "Cayley-Hamilton for anticanonical operators")
    def _():
        for vid in ("P5", "G(2,4)", "IG(2,6)"):
            A = REGISTRY[vid].provider()
            M = mult_matrix(A, A.anticanonical)
            p = charpoly(M)
            assert p(M).is_zero(), vid

    @add("spectrum", "rotation invariance of every registry charpoly")
    def _():
        for desc in REGISTRY.values():
            r = quantum_spectrum_report(desc.provider())
            assert r.charpoly_rotation_invariant, desc.id

    @add("spectrum", "fiber dimensions are additive")
    def _():
        for desc in REGISTRY.values():
            r = quantum_spectrum_report(desc.provider())
            assert r.dim_zero_part + r.dim_nonzero_part == r.dim_total, \
                desc.id

    @add("bwb", "Serre duality on seeded random pairs")
    def _():
        rng = random.Random(20240)
        for k, n in ((2, 4), (2, 5)):
            top = k * (n - k)
            for _ in range(40):
                lam = tuple(sorted((rng.randint(-2, 2) for _ in range(k)),
                                   reverse=True))
                mu = tuple(sorted((rng.randint(-2, 2)
                                   for _ in range(n - k)), reverse=True))
                E = BundleExpr(k, n, {(lam, mu): 1})
                F = BundleExpr.structure_sheaf(k, n).twist(rng.randint(-2, 2))
                lhs = ext_table(E, F)
                rhs = ext_table(F, E.twist(-n))
                assert lhs == {top - i: d for i, d in rhs.items()}, (k, n)

    @add("bwb", "builtin collections are exceptional")
    def _():
        for name, arg in (("beilinson", 3), ("kapranov_g24", None),
                          ("minimal_g24", None)):
            c = (builtin_collection(name, arg) if arg is not None
                 else builtin_collection(name))
            v = check_collection(c)
            assert v.ok, "%s: %r" % (name, v.failures)
        v = check_collection_hyperplane(builtin_collection("kuznetsov_ig2", 3))
        assert v.ok and not v.inconclusive, repr(v)

    @add("lefschetz", "builtin numerology pairs agree with the spectra")
    def _():
        pairs = [("P%d" % n, builtin_collection("beilinson", n))
                 for n in range(1, 11)]
        pairs.append(("G(2,4)", builtin_collection("minimal_g24")))
        pairs += [("IG(2,%d)" % (2 * n), builtin_collection("kuznetsov_ig2", n))
                  for n in (3, 4, 5)]
        for vid, coll in pairs:
            r = quantum_spectrum_report(REGISTRY[vid].provider())
            v = conjecture_numerology(r, coll)
            assert v.ok, "%s: %r" % (vid, {k: c for k, c in v.checks.items()
                                           if not c["ok"]})

    return checks


def cmd_selftest(args):
    checks = _selftest_checks()
    if args.filter:
        checks = [row for row in checks if args.filter in row[0]]
        if not checks:
            print("no selftest entries match filter %r" % args.filter,
                  file=sys.stderr)
            return 1
    failed = 0
    for module, description, fn in checks:
        t0 = time.monotonic()
        try:
            fn()
        except Exception as e:
            failed += 1
            status = "fail"
            detail = "  (%s: %s)" % (type(e).__name__, e)
        else:
            status = "pass"
            detail = ""
        print("[%s] %s: %s%s" % (status, module, description, detail))
        print("  %.3f s" % (time.monotonic() - t0), file=sys.stderr)
    print("selftest: %d passed, %d failed" % (len(checks) - failed, failed))
    return 2 if failed else 0


class _Parser(argparse.ArgumentParser):
    # usage problems are exit 1; argparse's default of 2 is reserved for
    # invariant violations
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, "%s: error: %s\n" % (self.prog, message))


def _build_parser():
    parser = _Parser(prog="qspectra", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True,
                                parser_class=_Parser)

    p = sub.add_parser("report", help="quantum spectrum of a registered "
                       "variety")
    p.add_argument("id", help="variety id, e.g. P3, G(2,4), IG(2,6), A3")
    p.add_argument("--json", metavar="OUT",
                   help="also write the report as JSON to this path")
    p.set_defaults(func=cmd_report)

    p = sub.add_parser("check", help="check a collection file against the "
                       "spectrum numerology")
    p.add_argument("file", help="collection JSON file")
    p.add_argument("--bwb", action="store_true",
                   help="also verify exceptionality cohomologically")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("selftest", help="run the cross-validation suite")
    p.add_argument("--filter", metavar="MODULE",
                   help="only run checks whose module tag contains this")
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv=None):
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except AssertionError as e:
        print("internal invariant violation: %s" % e, file=sys.stderr)
        return 2
    except (ValueError, OSError) as e:
        print("error: %s" % e, file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
