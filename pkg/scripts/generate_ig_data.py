"""Regenerate the shipped IG(2,2n) structure-constant files.

Builds each ring from its two-relation presentation, cross-checks it
against the Chevalley divisor operator (characteristic polynomials agree
and the coset degrees reproduce the graded dimensions), then writes the
JSON next to the package sources.  Run from the repository root:

    python3 scripts/generate_ig_data.py
"""

import os
import sys
import tempfile

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

# an empty override forces the presentation path even if data files exist
_tmp = tempfile.mkdtemp(prefix="qspectra-empty-")
os.environ["QSPECTRA_DATA"] = _tmp

from fractions import Fraction

from qspectra.algebra import mult_matrix, qh_ig2, save_algebra, validate_algebra
from qspectra.chevalley import ig2_divisor_matrix
from qspectra.exactlin import charpoly, poly_str


def main():
    target = os.path.join(os.path.dirname(__file__), "..", "src",
                          "qspectra", "data")
    os.makedirs(target, exist_ok=True)
    for n in (2, 3, 4, 5):
        A = qh_ig2(n)
        report = validate_algebra(A)
        if not report.ok:
            raise SystemExit("IG(2,%d) failed validation: %s"
                             % (2 * n, report.violations[0]))
        m = 2 * n - 1
        sigma1 = tuple(c / m for c in A.anticanonical)
        p_pres = charpoly(mult_matrix(A, sigma1))
        M, lengths = ig2_divisor_matrix(n)
        p_op = charpoly(M)
        if p_pres != p_op:
            raise SystemExit("IG(2,%d) divisor charpoly mismatch:\n  %s\n  %s"
                             % (2 * n, poly_str(p_pres), poly_str(p_op)))
        by_degree = {}
        for d in A.degrees:
            by_degree[d] = by_degree.get(d, 0) + 1
        coset = {}
        for l in lengths:
            coset[l % m] = coset.get(l % m, 0) + 1
        if by_degree != coset:
            raise SystemExit("IG(2,%d) graded dimensions disagree" % (2 * n))
        path = os.path.join(target, "ig2_%d.json" % (2 * n))
        save_algebra(A, path)
        print("wrote %s  dim %d  charpoly %s"
              % (os.path.relpath(path), A.dim, poly_str(p_pres)))


if __name__ == "__main__":
    main()
