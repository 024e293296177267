"""Dense exact linear algebra over the rationals.

Matrices, univariate polynomials, characteristic polynomials, kernels and
the Bezout identity: the arithmetic kernel everything else is built on.
All entries are fractions.Fraction; floating point never enters.
"""

from fractions import Fraction

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _q(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError("expected int or Fraction, got %r" % (x,))


def vec(entries):
    """Coerce an iterable to a tuple of Fractions."""
    return tuple(_q(x) for x in entries)


def vec_add(u, v):
    return tuple(a + b for a, b in zip(u, v))


def vec_sub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def vec_scale(c, u):
    c = _q(c)
    return tuple(c * a for a in u)


def zero_vec(n):
    return (_ZERO,) * n


def unit_vec(n, i):
    return tuple(_ONE if j == i else _ZERO for j in range(n))


class Matrix:
    """Immutable dense matrix with Fraction entries, row-major."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, entries, cols=None):
        data = tuple(tuple(_q(x) for x in row) for row in entries)
        if data:
            width = len(data[0])
            if any(len(row) != width for row in data):
                raise ValueError("ragged rows")
        else:
            width = 0 if cols is None else cols
        self.data = data
        self.rows = len(data)
        self.cols = width

    @classmethod
    def identity(cls, n):
        return cls([[_ONE if i == j else _ZERO for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, rows, cols):
        return cls([[_ZERO] * cols for _ in range(rows)], cols=cols)

    @classmethod
    def from_columns(cls, columns, height=None):
        columns = [vec(c) for c in columns]
        if columns:
            height = len(columns[0])
        elif height is None:
            height = 0
        return cls([[c[i] for c in columns] for i in range(height)], cols=len(columns))

    def __getitem__(self, key):
        i, j = key
        return self.data[i][j]

    def row(self, i):
        return self.data[i]

    def column(self, j):
        return tuple(row[j] for row in self.data)

    def is_square(self):
        return self.rows == self.cols

    def __eq__(self, other):
        return isinstance(other, Matrix) and self.data == other.data \
            and self.cols == other.cols

    def __hash__(self):
        return hash((self.cols, self.data))

    def __add__(self, other):
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError("shape mismatch")
        return Matrix([vec_add(a, b) for a, b in zip(self.data, other.data)],
                      cols=self.cols)

    def __sub__(self, other):
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError("shape mismatch")
        return Matrix([vec_sub(a, b) for a, b in zip(self.data, other.data)],
                      cols=self.cols)

    def __neg__(self):
        return Matrix([[-x for x in row] for row in self.data], cols=self.cols)

    def __mul__(self, other):
        if isinstance(other, Matrix):
            if self.cols != other.rows:
                raise ValueError("shape mismatch")
            cols = [other.column(j) for j in range(other.cols)]
            return Matrix(
                [[sum((a * b for a, b in zip(row, col)), _ZERO) for col in cols]
                 for row in self.data],
                cols=other.cols)
        return Matrix([[_q(other) * x for x in row] for row in self.data],
                      cols=self.cols)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __pow__(self, e):
        if not self.is_square():
            raise ValueError("power of a non-square matrix")
        if e < 0:
            raise ValueError("negative power")
        result = Matrix.identity(self.rows)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    def apply(self, v):
        """Matrix times column vector, as a tuple."""
        if len(v) != self.cols:
            raise ValueError("length mismatch")
        v = vec(v)
        return tuple(sum((a * b for a, b in zip(row, v)), _ZERO)
                     for row in self.data)

    def transpose(self):
        return Matrix([self.column(j) for j in range(self.cols)], cols=self.rows)

    def trace(self):
        if not self.is_square():
            raise ValueError("trace of a non-square matrix")
        return sum((self.data[i][i] for i in range(self.rows)), _ZERO)

    def is_zero(self):
        return all(x == 0 for row in self.data for x in row)

    def __repr__(self):
        return "Matrix(%r)" % ([[str(x) for x in row] for row in self.data],)


def _rref(rows, width):
    """Row-reduce a list of row lists in place; return pivot column list."""
    pivots = []
    r = 0
    for c in range(width):
        piv = None
        for i in range(r, len(rows)):
            if rows[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = rows[r][c]
        if inv != 1:
            rows[r] = [x / inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return pivots


def rank(M):
    rows = [list(row) for row in M.data]
    return len(_rref(rows, M.cols))


def kernel_basis(M):
    """Basis of the right kernel of M, as a list of tuples.

    Canonical: one vector per free column of the reduced row echelon form,
    scaled so the first nonzero coordinate is 1.
    """
    rows = [list(row) for row in M.data]
    pivots = _rref(rows, M.cols)
    pivot_set = set(pivots)
    basis = []
    for free in range(M.cols):
        if free in pivot_set:
            continue
        v = [_ZERO] * M.cols
        v[free] = _ONE
        for r, c in enumerate(pivots):
            v[c] = -rows[r][free]
        lead = next(x for x in v if x != 0)
        basis.append(tuple(x / lead for x in v))
    return basis


def solve(M, b):
    """One solution of M x = b (free coordinates set to 0), or None."""
    if len(b) != M.rows:
        raise ValueError("length mismatch")
    rows = [list(row) + [_q(x)] for row, x in zip(M.data, b)]
    if not rows:
        return zero_vec(M.cols)
    pivots = _rref(rows, M.cols)
    for r in range(len(pivots), len(rows)):
        if rows[r][M.cols] != 0:
            return None
    x = [_ZERO] * M.cols
    for r, c in enumerate(pivots):
        x[c] = rows[r][M.cols]
    return tuple(x)


def span_basis(vectors):
    """Echelonized basis of the span of the given vectors (canonical, ordered)."""
    vectors = [vec(v) for v in vectors]
    if not vectors:
        return []
    width = len(vectors[0])
    rows = [list(v) for v in vectors]
    _rref(rows, width)
    return [tuple(r) for r in rows if any(x != 0 for x in r)]


class Solver:
    """Repeated solving of S x = b against a fixed full-column-rank S."""

    __slots__ = ("_transform", "_ncols", "_nrows")

    def __init__(self, S):
        n, m = S.rows, S.cols
        rows = [list(S.data[i]) + [_ONE if j == i else _ZERO for j in range(n)]
                for i in range(n)]
        pivots = _rref(rows, m)
        if len(pivots) != m:
            raise ValueError("matrix does not have full column rank")
        self._transform = [row[m:] for row in rows]
        self._ncols = m
        self._nrows = n

    def solve(self, b):
        """Coordinates x with S x = b; raises if b is outside the column span."""
        if len(b) != self._nrows:
            raise ValueError("length mismatch")
        b = vec(b)
        t = [sum((a * x for a, x in zip(row, b)), _ZERO) for row in self._transform]
        for r in range(self._ncols, self._nrows):
            if t[r] != 0:
                raise ValueError("vector outside the span")
        return tuple(t[: self._ncols])


class Poly:
    """Univariate polynomial with Fraction coefficients; index = degree."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        cs = [_q(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def x_power(cls, a):
        return cls([_ZERO] * a + [_ONE])

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def lc(self):
        return self.coeffs[-1] if self.coeffs else _ZERO

    def monic(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no monic form")
        lead = self.coeffs[-1]
        if lead == 1:
            return self
        return Poly([c / lead for c in self.coeffs])

    def __eq__(self, other):
        return isinstance(other, Poly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        if not isinstance(other, Poly):
            other = Poly([other])
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    def __radd__(self, other):
        return self.__add__(other)

    def __neg__(self):
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other):
        if not isinstance(other, Poly):
            other = Poly([other])
        return self + (-other)

    def __rsub__(self, other):
        return Poly([other]) - self

    def __mul__(self, other):
        if not isinstance(other, Poly):
            c = _q(other)
            return Poly([c * a for a in self.coeffs])
        out = [_ZERO] * (len(self.coeffs) + len(other.coeffs) - 1) \
            if self.coeffs and other.coeffs else []
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                if b != 0:
                    out[i + j] += a * b
        return Poly(out)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __divmod__(self, other):
        if not isinstance(other, Poly):
            other = Poly([other])
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        d = other.degree
        lead = other.coeffs[-1]
        if len(rem) <= d:
            return Poly([]), Poly(rem)
        quo = [_ZERO] * (len(rem) - d)
        for i in range(len(rem) - 1, d - 1, -1):
            c = rem[i]
            if c == 0:
                continue
            f = c / lead
            quo[i - d] = f
            for j, b in enumerate(other.coeffs):
                rem[i - d + j] -= f * b
        return Poly(quo), Poly(rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __call__(self, x):
        """Evaluate by Horner; x may be a Fraction, int, or square Matrix."""
        if isinstance(x, Matrix):
            if not x.is_square():
                raise ValueError("evaluation at a non-square matrix")
            n = x.rows
            acc = Matrix.zeros(n, n)
            eye = Matrix.identity(n)
            for c in reversed(self.coeffs):
                acc = acc * x + c * eye
            return acc
        x = _q(x)
        acc = _ZERO
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self):
        return Poly([i * c for i, c in enumerate(self.coeffs)][1:])

    def __repr__(self):
        return "Poly(%s)" % (poly_str(self),)


def poly_str(p, var="x"):
    """Readable form, highest degree first: 'x^4 - 2*x + 1'."""
    if p.is_zero():
        return "0"
    parts = []
    for i in range(p.degree, -1, -1):
        c = p.coeffs[i]
        if c == 0:
            continue
        if i == 0:
            mono = ""
        elif i == 1:
            mono = var
        else:
            mono = "%s^%d" % (var, i)
        mag = abs(c)
        if mag == 1 and mono:
            body = mono
        else:
            body = str(mag) + ("*" + mono if mono else "")
        if not parts:
            parts.append(body if c > 0 else "-" + body)
        else:
            parts.append(("+ " if c > 0 else "- ") + body)
    return " ".join(parts)


def charpoly(M):
    """det(xI - M), monic of degree = size, via exact Hessenberg reduction."""
    if not M.is_square():
        raise ValueError("characteristic polynomial of a non-square matrix")
    n = M.rows
    if n == 0:
        return Poly([1])
    H = [list(row) for row in M.data]
    # similarity reduction to upper Hessenberg form
    for c in range(n - 2):
        piv = None
        for r in range(c + 1, n):
            if H[r][c] != 0:
                piv = r
                break
        if piv is None:
            continue
        if piv != c + 1:
            H[piv], H[c + 1] = H[c + 1], H[piv]
            for row in H:
                row[piv], row[c + 1] = row[c + 1], row[piv]
        for r in range(c + 2, n):
            if H[r][c] != 0:
                f = H[r][c] / H[c + 1][c]
                H[r] = [a - f * b for a, b in zip(H[r], H[c + 1])]
                for row in H:
                    row[c + 1] += f * row[r]
    # cofactor recurrence along last columns of leading blocks
    x = Poly.x_power(1)
    ps = [Poly([1])]
    for m in range(1, n + 1):
        p = (x - H[m - 1][m - 1]) * ps[m - 1]
        prod = _ONE
        for i in range(1, m):
            prod *= H[m - i][m - i - 1]
            if prod == 0:
                break
            coef = H[m - 1 - i][m - 1] * prod
            if coef != 0:
                p = p - coef * ps[m - 1 - i]
        ps.append(p)
    return ps[n]


def poly_gcd(p, q):
    """Monic gcd by the Euclidean remainder sequence."""
    a, b = p, q
    while not b.is_zero():
        a, b = b, a % b
    if a.is_zero():
        return a
    return a.monic()


def squarefree_part(p):
    """p / gcd(p, p'), made monic."""
    if p.is_zero():
        raise ValueError("zero polynomial")
    g = poly_gcd(p, p.derivative())
    if g.is_zero() or g.degree == 0:
        return p.monic()
    quo, rem = divmod(p, g)
    if not rem.is_zero():
        raise AssertionError("gcd does not divide its argument")
    return quo.monic()


def split_at_zero(p):
    """Write p = x^a * g with g(0) != 0; returns (a, g)."""
    if p.is_zero():
        raise ValueError("zero polynomial")
    a = 0
    while p.coeffs[a] == 0:
        a += 1
    return a, Poly(p.coeffs[a:])


def bezout_coprime(p, q):
    """(u, v) with u*p + v*q = 1, deg u < deg q, deg v < deg p.

    Inputs must be coprime; otherwise the (monic) gcd is reported.
    """
    r0, r1 = p, q
    s0, s1 = Poly([1]), Poly([])
    t0, t1 = Poly([]), Poly([1])
    while not r1.is_zero():
        quo, rem = divmod(r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, s0 - quo * s1
        t0, t1 = t1, t0 - quo * t1
    if r0.is_zero() or r0.degree != 0:
        raise ValueError("inputs are not coprime; gcd = %s"
                         % (poly_str(r0.monic()) if r0 else "0"))
    c = r0.coeffs[0]
    u = s0 * (1 / c)
    if q.is_zero():
        return u, Poly([])
    # normalize degrees: u mod q, then v forced by exactness
    u = u % q
    v, rem = divmod(Poly([1]) - u * p, q)
    if not rem.is_zero():
        raise AssertionError("Bezout normalization failed")
    return u, v
