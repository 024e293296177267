"""Lefschetz collection shapes and their comparison against spectrum data.

A collection here is a purely combinatorial object: a starting block of
opaque bundle descriptors and a non-increasing support partition, stored
zero-padded to the Fano index so the rectangular-part formula m * sigma[m-1]
degenerates correctly for short partitions.  Descriptor strings are only
interpreted by the cohomology backend; the numerology below never looks
inside them.
"""

import json


class LefschetzCollection:
    """Starting block plus support partition, padded to length fano_index.

    asserted_full marks the builtin collections, whose fullness is a cited
    theorem; user-built collections leave it False and the total-length
    check is then reported as a bare comparison, not a completeness claim.
    """

    __slots__ = ("variety", "starting_block", "support", "fano_index",
                 "asserted_full")

    def __init__(self, variety, starting_block, support, fano_index,
                 asserted_full=False):
        if fano_index < 1:
            raise ValueError("fano_index must be positive")
        support = tuple(int(s) for s in support)
        if len(support) > fano_index:
            raise ValueError("support partition longer than the Fano index")
        support = support + (0,) * (fano_index - len(support))
        if any(s < 0 for s in support):
            raise ValueError("support partition has negative entries")
        if any(support[i] < support[i + 1] for i in range(fano_index - 1)):
            raise ValueError("support partition not non-increasing")
        block = tuple(str(e) for e in starting_block)
        if support and support[0] > len(block):
            raise ValueError("support partition exceeds the starting block")
        self.variety = str(variety)
        self.starting_block = block
        self.support = support
        self.fano_index = fano_index
        self.asserted_full = bool(asserted_full)

    def __repr__(self):
        return "LefschetzCollection(%r, sigma=%r)" % (
            self.variety, self.support)


def twisted_objects(c):
    """The full collection in Lefschetz order: (descriptor, twist) pairs,
    block by block, block i holding the first support[i] objects."""
    out = []
    for twist, width in enumerate(c.support):
        for e in c.starting_block[:width]:
            out.append((e, twist))
    return out


def lengths(c):
    """Total, rectangular, and expected-residual lengths of a collection."""
    total = sum(c.support)
    rectangular = c.fano_index * c.support[-1]
    return {
        "total": total,
        "rectangular": rectangular,
        "residual_expected": total - rectangular,
    }


class NumerologyVerdict:
    """Outcome of the shape-versus-spectrum comparison."""

    __slots__ = ("variety", "total_length", "rect_length",
                 "residual_expected", "k_required", "checks")

    def __init__(self, variety, total_length, rect_length, residual_expected,
                 k_required, checks):
        self.variety = variety
        self.total_length = total_length
        self.rect_length = rect_length
        self.residual_expected = residual_expected
        self.k_required = k_required
        self.checks = checks

    @property
    def ok(self):
        return all(c["ok"] for c in self.checks.values())

    def to_dict(self):
        return {
            "variety": self.variety,
            "total_length": self.total_length,
            "rect_length": self.rect_length,
            "residual_expected": self.residual_expected,
            "k_required": self.k_required,
            "checks": self.checks,
            "ok": self.ok,
        }

    def __repr__(self):
        state = "ok" if self.ok else "FAIL"
        return "NumerologyVerdict(%r, %s)" % (self.variety, state)


def conjecture_numerology(report, c):
    """Compare a collection's shape with a spectrum report.

    Checks: the total length against the algebra dimension (a completeness
    claim only for asserted-full collections), the smallest block width
    against the orbit count, the residual length against the zero-fiber
    dimension, and, when the zero fiber is reduced, the residual length
    against its point count.  Orthogonality per point is a categorical
    statement and is only echoed as that count comparison.
    """
    if report.fano_index != c.fano_index:
        raise ValueError("Fano index mismatch: report %d, collection %d"
                         % (report.fano_index, c.fano_index))
    sizes = lengths(c)
    k = report.orbit_count_by_length
    checks = {}
    if c.asserted_full:
        checks["total_vs_dim"] = {
            "ok": sizes["total"] == report.dim_total,
            "explanation": "full collection of length %d vs dim %d"
                           % (sizes["total"], report.dim_total),
        }
    else:
        checks["total_vs_dim"] = {
            "ok": sizes["total"] == report.dim_total,
            "explanation": "length %d vs dim H* = %d (no fullness asserted)"
                           % (sizes["total"], report.dim_total),
        }
    checks["smallest_block_vs_orbits"] = {
        "ok": report.orbit_length_integral and c.support[-1] == k,
        "explanation": "sigma[m-1] = %d vs k = %r"
                       % (c.support[-1], k),
    }
    checks["residual_vs_zero_fiber"] = {
        "ok": sizes["residual_expected"] == report.dim_zero_part,
        "explanation": "residual %d vs zero-fiber length %d"
                       % (sizes["residual_expected"], report.dim_zero_part),
    }
    zp = report.zero_part
    if zp["dim"] == zp["geometric_point_count"]:
        checks["residual_vs_zero_points"] = {
            "ok": sizes["residual_expected"] == zp["geometric_point_count"],
            "explanation": "reduced zero fiber: residual %d vs %d points"
                           % (sizes["residual_expected"],
                              zp["geometric_point_count"]),
        }
    return NumerologyVerdict(
        variety=c.variety,
        total_length=sizes["total"],
        rect_length=sizes["rectangular"],
        residual_expected=sizes["residual_expected"],
        k_required=k,
        checks=checks,
    )


def builtin_collection(name, n=None):
    """Named collections with concrete bundle descriptors.

    beilinson and kuznetsov_ig2 take the parameter n; the two G(2,4)
    collections are parameter-free.
    """
    if name == "beilinson":
        if n is None or n < 1:
            raise ValueError("beilinson requires n >= 1")
        return LefschetzCollection(
            variety="P%d" % n, starting_block=("O",),
            support=(1,) * (n + 1), fano_index=n + 1, asserted_full=True)
    if name == "kapranov_g24":
        return LefschetzCollection(
            variety="G(2,4)", starting_block=("O", "U*", "S^2 U*"),
            support=(3, 2, 1, 0), fano_index=4, asserted_full=True)
    if name == "minimal_g24":
        return LefschetzCollection(
            variety="G(2,4)", starting_block=("O", "U*"),
            support=(2, 2, 1, 1), fano_index=4, asserted_full=True)
    if name == "kuznetsov_ig2":
        if n is None or n < 2:
            raise ValueError("kuznetsov_ig2 requires n >= 2")
        block = tuple("O" if i == 0 else "U*" if i == 1 else "S^%d U*" % i
                      for i in range(n))
        support = (n,) * (n - 1) + (n - 1,) * n
        return LefschetzCollection(
            variety="IG(2,%d)" % (2 * n), starting_block=block,
            support=support, fano_index=2 * n - 1, asserted_full=True)
    raise ValueError(
        "unknown collection %r; known: beilinson, kapranov_g24, "
        "minimal_g24, kuznetsov_ig2" % (name,))


def collection_to_json(c):
    return {
        "variety": c.variety,
        "fano_index": c.fano_index,
        "starting_block": list(c.starting_block),
        "support": list(c.support),
    }


def collection_from_json(obj):
    if not isinstance(obj, dict):
        raise ValueError("collection file must hold a JSON object")
    missing = [k for k in ("variety", "fano_index", "starting_block",
                           "support") if k not in obj]
    if missing:
        raise ValueError("collection file missing keys: %s"
                         % ", ".join(missing))
    return LefschetzCollection(
        variety=obj["variety"],
        starting_block=obj["starting_block"],
        support=obj["support"],
        fano_index=obj["fano_index"],
    )


def load_collection(path):
    with open(path, "r", encoding="utf-8") as fh:
        return collection_from_json(json.load(fh))


def save_collection(c, path):
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(collection_to_json(c), fh, indent=2, sort_keys=True)
        fh.write("\n")
