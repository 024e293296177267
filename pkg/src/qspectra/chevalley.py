"""Divisor multiplication on coset spaces from the Chevalley formula.

Works over minimal-length coset representatives for a maximal parabolic in
Weyl groups of types A and C.  When the divisor operator has a full Krylov
space, every basis class is a polynomial in the divisor applied to the
unit, and one matrix rebuilds the complete multiplication table; that is
how grassmannian_algebra recovers the cyclic cases such as G(2,5) and the
projective spaces G(1,n).  The divisor does not always generate (on
IG(2,2n) with n >= 3 it annihilates the whole nilpotent summand), but its
matrix is exact regardless, so the operators here double as independent
oracles for rings built by other routes: characteristic polynomials are
basis independent and can be compared directly.
"""

from fractions import Fraction
from itertools import permutations, product

from .algebra import FiniteCommAlgebra, validate_algebra
from .exactlin import Matrix, Solver, rank

_ONE = Fraction(1)
_ZERO = Fraction(0)


def _reflection(alpha):
    # signed-image tuple of the reflection in a type A/C root
    n = len(alpha)
    norm = sum(a * a for a in alpha)
    images = []
    for i in range(n):
        coef = Fraction(2 * alpha[i], norm)
        vec = [(_ONE if j == i else _ZERO) - coef * alpha[j] for j in range(n)]
        nz = [(j, c) for j, c in enumerate(vec) if c != 0]
        if len(nz) != 1 or nz[0][1] not in (1, -1):
            raise AssertionError("reflection is not a signed permutation")
        j, c = nz[0]
        images.append(j + 1 if c == 1 else -(j + 1))
    return tuple(images)


def _compose(w, s):
    # (w . s)(e_i) = w(s(e_i))
    out = []
    for t in s:
        r = w[abs(t) - 1]
        out.append(r if t > 0 else -r)
    return tuple(out)


def _act(w, vec):
    out = [0] * len(vec)
    for i, t in enumerate(w):
        if t > 0:
            out[t - 1] += vec[i]
        else:
            out[-t - 1] -= vec[i]
    return tuple(out)


class _CosetModel:
    """Root data plus the crossed node; caches lengths on demand."""

    __slots__ = ("rank", "positive", "pos_set", "simples", "weyl", "k",
                 "levi", "_lengths")

    def __init__(self, rank, positive, simples, weyl, k):
        self.rank = rank
        self.positive = tuple(positive)
        self.pos_set = frozenset(self.positive)
        self.simples = tuple(simples)
        self.weyl = tuple(weyl)
        self.k = k
        self.levi = tuple((root, _reflection(root))
                          for i, root in enumerate(simples) if i != k - 1)
        self._lengths = {}

    def is_negative(self, vec):
        return tuple(-x for x in vec) in self.pos_set

    def length(self, w):
        got = self._lengths.get(w)
        if got is None:
            got = sum(1 for a in self.positive if self.is_negative(_act(w, a)))
            self._lengths[w] = got
        return got

    def is_minimal(self, w):
        return not any(self.is_negative(_act(w, root)) for root, _ in self.levi)

    def to_minimal(self, w):
        # strip the Levi part on the right; greedy descent terminates
        while True:
            for root, refl in self.levi:
                if self.is_negative(_act(w, root)):
                    w = _compose(w, refl)
                    break
            else:
                return w

    def outside_levi(self, alpha):
        return sum(alpha[: self.k]) != 0

    def coroot(self, alpha):
        norm = sum(a * a for a in alpha)
        return tuple(Fraction(2 * a, norm) for a in alpha)


def _type_a(n, k):
    positive = []
    for i in range(n):
        for j in range(i + 1, n):
            v = [0] * n
            v[i], v[j] = 1, -1
            positive.append(tuple(v))
    simples = []
    for i in range(n - 1):
        v = [0] * n
        v[i], v[i + 1] = 1, -1
        simples.append(tuple(v))
    weyl = [tuple(p) for p in permutations(range(1, n + 1))]
    return _CosetModel(n, positive, simples, weyl, k)


def _type_c(n, k):
    positive = []
    for i in range(n):
        for j in range(i + 1, n):
            v = [0] * n
            v[i], v[j] = 1, -1
            positive.append(tuple(v))
            v = [0] * n
            v[i], v[j] = 1, 1
            positive.append(tuple(v))
    for i in range(n):
        v = [0] * n
        v[i] = 2
        positive.append(tuple(v))
    simples = []
    for i in range(n - 1):
        v = [0] * n
        v[i], v[i + 1] = 1, -1
        simples.append(tuple(v))
    v = [0] * n
    v[n - 1] = 2
    simples.append(tuple(v))
    weyl = []
    for p in permutations(range(1, n + 1)):
        for signs in product((1, -1), repeat=n):
            weyl.append(tuple(s * x for s, x in zip(signs, p)))
    return _CosetModel(n, positive, simples, weyl, k)


def _divisor_matrix(model, reps, m):
    """Multiplication by the degree-1 coset class, columns over reps."""
    idx = {w: i for i, w in enumerate(reps)}
    k = model.k
    cols = []
    for w in reps:
        lw = model.length(w)
        col = [0] * len(reps)
        for alpha in model.positive:
            if not model.outside_levi(alpha):
                continue
            co = model.coroot(alpha)
            c = sum(co[:k])
            if c.denominator != 1:
                raise AssertionError("non-integral pairing")
            c = c.numerator
            u = _compose(w, _reflection(alpha))
            if model.length(u) == lw + 1 and model.is_minimal(u):
                col[idx[u]] += c
            else:
                v = model.to_minimal(u)
                if model.length(v) == lw + 1 - m * c:
                    col[idx[v]] += c
        cols.append(col)
    return Matrix([[cols[j][i] for j in range(len(reps))]
                   for i in range(len(reps))])


def _ring_from_divisor(name, model, reps, m, dim_X, labels):
    """Rebuild the full product table from the divisor operator alone."""
    n = len(reps)
    M = _divisor_matrix(model, reps, m)
    unit = tuple(_ONE if i == 0 else _ZERO for i in range(n))
    powers = [unit]
    for _ in range(n - 1):
        powers.append(M.apply(powers[-1]))
    S = Matrix.from_columns(powers)
    if rank(S) != n:
        raise AssertionError(
            "divisor class does not generate %s; table not reconstructible"
            % name)
    solver = Solver(S)
    in_krylov = [solver.solve(tuple(_ONE if i == j else _ZERO
                                    for i in range(n)))
                 for j in range(n)]
    # iterated images M^l b_j, reused across all rows
    images = []
    for j in range(n):
        b = tuple(_ONE if i == j else _ZERO for i in range(n))
        seq = [b]
        for _ in range(n - 1):
            seq.append(M.apply(seq[-1]))
        images.append(seq)
    structure = [[None] * n for _ in range(n)]
    for i in range(n):
        pi = in_krylov[i]
        for j in range(i, n):
            acc = [_ZERO] * n
            seq = images[j]
            for l, c in enumerate(pi):
                if c == 0:
                    continue
                vec = seq[l]
                for t in range(n):
                    if vec[t] != 0:
                        acc[t] += c * vec[t]
            cell = tuple(acc)
            structure[i][j] = cell
            structure[j][i] = cell
    lengths = [model.length(w) for w in reps]
    if lengths[1] != 1 or lengths.count(1) != 1:
        raise AssertionError("degree-1 line is not where expected")
    degrees = [l % m for l in lengths]
    anticanonical = tuple(Fraction(m) if i == 1 else _ZERO for i in range(n))
    return FiniteCommAlgebra(
        name=name, basis_labels=labels, structure=structure, unit=unit,
        degrees=degrees, fano_index=m, anticanonical=anticanonical,
        dim_X=dim_X)


def _grassmann_partition(w, k):
    # first k images, sorted, shifted down to a partition
    a = sorted(w[:k])
    return tuple(x - (i + 1) for i, x in enumerate(a))[::-1]


def grassmannian_algebra(k, n):
    """G(k,n) at q = 1 via type A cosets; basis ordered like the box model.

    Independent of the tableau route: same ring, different construction,
    used to cross-validate both.
    """
    if not 0 < k < n:
        raise ValueError("need 0 < k < n")
    model = _type_a(n, k)
    reps = [w for w in model.weyl if model.is_minimal(w)]
    reps.sort(key=lambda w: (model.length(w), _grassmann_partition(w, k)))
    labels = []
    for w in reps:
        parts = tuple(p for p in _grassmann_partition(w, k) if p > 0)
        labels.append("s(%s)" % ",".join(str(p) for p in parts)
                      if parts else "1")
    A = _ring_from_divisor("G(%d,%d)" % (k, n), model, reps, n,
                           k * (n - k), labels)
    report = validate_algebra(A)
    if not report.ok:
        raise AssertionError("reconstructed G(%d,%d) is invalid: %s"
                             % (k, n, report.violations[0]))
    return A


def grassmann_divisor_matrix(k, n):
    """Divisor operator of G(k,n) at q = 1, with basis degrees.

    Same basis order as grassmannian_algebra, but no ring reconstruction,
    so this works in the non-cyclic cases too (G(2,4) for one).
    """
    if not 0 < k < n:
        raise ValueError("need 0 < k < n")
    model = _type_a(n, k)
    reps = [w for w in model.weyl if model.is_minimal(w)]
    reps.sort(key=lambda w: (model.length(w), _grassmann_partition(w, k)))
    M = _divisor_matrix(model, reps, n)
    return M, [model.length(w) for w in reps]


def ig2_divisor_matrix(n):
    """Divisor operator of IG(2,2n) at q = 1, with basis degrees.

    Acts on the 2n(n-1) coset classes ordered by degree; crossed node 2 in
    type C_n, quantum parameter in degree 2n-1.  For n >= 3 the divisor
    kills the nilpotent summand and so cannot generate the ring; callers
    compare characteristic polynomials against independently presented
    rings instead of rebuilding the table from this matrix.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    model = _type_c(n, 2)
    reps = [w for w in model.weyl if model.is_minimal(w)]
    reps.sort(key=lambda w: (model.length(w), w))
    if len(reps) != 2 * n * (n - 1):
        raise AssertionError("coset count mismatch for IG(2,%d)" % (2 * n))
    M = _divisor_matrix(model, reps, 2 * n - 1)
    return M, [model.length(w) for w in reps]
