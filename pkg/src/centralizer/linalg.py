"""Dense exact matrices and the elimination kernels built on them.

Matrix entries are stored row-major and 0-indexed, as Python would.  The
helper :func:`matrix_unit` follows the mathematical convention instead: it
takes 1-based ``(i, j)`` and returns ``e_ij``.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt
from typing import Iterable, Sequence

from .arith import INTEGERS, PRIME_FIELD, QQ, RingError, RingSpec


class ShapeError(ValueError):
    """Operands have incompatible shapes or live over different rings."""


class DenseMatrix:
    """An immutable ``rows x cols`` matrix over a :class:`RingSpec`.

    Entries must already be canonical for the ring; use :meth:`from_rows` to
    coerce arbitrary input.
    """

    __slots__ = ("ring", "rows", "cols", "_data", "_hash")

    def __init__(self, ring: RingSpec, data: Sequence[Sequence]):
        rows = len(data)
        cols = len(data[0]) if rows else 0
        if rows == 0 or cols == 0:
            raise ShapeError("matrices must have at least one row and one column")
        if any(len(r) != cols for r in data):
            raise ShapeError("ragged rows")
        self.ring = ring
        self.rows = rows
        self.cols = cols
        self._data = tuple(tuple(r) for r in data)
        self._hash = None

    # -- construction -------------------------------------------------------

    @classmethod
    def from_rows(cls, ring: RingSpec, rows: Iterable[Iterable]) -> "DenseMatrix":
        return cls(ring, [[ring.coerce(x) for x in row] for row in rows])

    @classmethod
    def zeros(cls, ring: RingSpec, rows: int, cols: int | None = None) -> "DenseMatrix":
        cols = rows if cols is None else cols
        return cls(ring, [[0] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, ring: RingSpec, n: int) -> "DenseMatrix":
        return cls(ring, [[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def from_entries(cls, ring: RingSpec, rows: int, cols: int, entries: dict) -> "DenseMatrix":
        """Build from a ``{(r, c): value}`` map with 0-based keys."""
        data = [[0] * cols for _ in range(rows)]
        for (r, c), v in entries.items():
            data[r][c] = ring.norm(data[r][c] + v)
        return cls(ring, data)

    # -- access -------------------------------------------------------------

    def __getitem__(self, key):
        r, c = key
        return self._data[r][c]

    def row(self, r: int) -> tuple:
        return self._data[r]

    def tolist(self) -> list[list]:
        return [list(r) for r in self._data]

    def flat(self) -> tuple:
        return tuple(x for r in self._data for x in r)

    def nonzero(self):
        """Yield ``(r, c, value)`` for every nonzero entry in row-major order."""
        for r, row in enumerate(self._data):
            for c, x in enumerate(row):
                if x != 0:
                    yield r, c, x

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_zero(self) -> bool:
        return all(x == 0 for r in self._data for x in r)

    # -- arithmetic ---------------------------------------------------------

    def _check_same(self, other: "DenseMatrix"):
        if not isinstance(other, DenseMatrix):
            raise TypeError(f"expected DenseMatrix, got {type(other).__name__}")
        if other.ring != self.ring:
            raise ShapeError(f"ring mismatch: {self.ring} vs {other.ring}")
        if other.shape != self.shape:
            raise ShapeError(f"shape mismatch: {self.shape} vs {other.shape}")

    def __add__(self, other: "DenseMatrix") -> "DenseMatrix":
        self._check_same(other)
        norm = self.ring.norm
        return DenseMatrix(self.ring, [[norm(x + y) for x, y in zip(r, s)]
                                       for r, s in zip(self._data, other._data)])

    def __sub__(self, other: "DenseMatrix") -> "DenseMatrix":
        self._check_same(other)
        norm = self.ring.norm
        return DenseMatrix(self.ring, [[norm(x - y) for x, y in zip(r, s)]
                                       for r, s in zip(self._data, other._data)])

    def __neg__(self) -> "DenseMatrix":
        return self.scale(-1)

    def scale(self, k) -> "DenseMatrix":
        norm = self.ring.norm
        return DenseMatrix(self.ring, [[norm(k * x) for x in r] for r in self._data])

    def __matmul__(self, other: "DenseMatrix") -> "DenseMatrix":
        return mat_mul(self, other)

    def __pow__(self, k: int) -> "DenseMatrix":
        if not self.is_square() or k < 0:
            raise ShapeError("powers need a square matrix and k >= 0")
        result = DenseMatrix.identity(self.ring, self.rows)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def transpose(self) -> "DenseMatrix":
        return DenseMatrix(self.ring, list(zip(*self._data)))

    def commutes_with(self, other: "DenseMatrix") -> bool:
        return self @ other == other @ self

    # -- protocol -----------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, DenseMatrix):
            return NotImplemented
        return self.ring == other.ring and self._data == other._data

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, self._data))
        return self._hash

    def __repr__(self):
        body = "; ".join(" ".join(self.ring.format(x) for x in r) for r in self._data)
        return f"DenseMatrix({self.ring}, [{body}])"

    def to_json(self) -> list[list[str]]:
        fmt = self.ring.format
        return [[fmt(x) for x in r] for r in self._data]


def matrix_unit(ring: RingSpec, rows: int, i: int, j: int, cols: int | None = None) -> DenseMatrix:
    """The matrix unit ``e_ij`` (1-based indices) in ``M_{rows x cols}``."""
    cols = rows if cols is None else cols
    if not (1 <= i <= rows and 1 <= j <= cols):
        raise ShapeError(f"e_{i},{j} out of range for {rows}x{cols}")
    return DenseMatrix.from_entries(ring, rows, cols, {(i - 1, j - 1): 1})


def mat_mul(a: DenseMatrix, b: DenseMatrix) -> DenseMatrix:
    if a.ring != b.ring:
        raise ShapeError(f"ring mismatch: {a.ring} vs {b.ring}")
    if a.cols != b.rows:
        raise ShapeError(f"cannot multiply {a.shape} by {b.shape}")
    norm = a.ring.norm
    bsparse = [[(c, x) for c, x in enumerate(row) if x != 0] for row in b._data]
    out = []
    for arow in a._data:
        acc = [0] * b.cols
        for k, x in enumerate(arow):
            if x != 0:
                for c, y in bsparse[k]:
                    acc[c] += x * y
        out.append([norm(v) for v in acc])
    return DenseMatrix(a.ring, out)


def block_diag(ring: RingSpec, blocks: Sequence[DenseMatrix]) -> DenseMatrix:
    n = sum(b.rows for b in blocks)
    m = sum(b.cols for b in blocks)
    entries = {}
    r0 = c0 = 0
    for b in blocks:
        for r, c, x in b.nonzero():
            entries[(r0 + r, c0 + c)] = x
        r0 += b.rows
        c0 += b.cols
    return DenseMatrix.from_entries(ring, n, m, entries)


# -- elimination -------------------------------------------------------------

def _require_field(ring: RingSpec):
    if not ring.is_field():
        raise RingError(f"{ring} is not a field; this kernel needs one")


def rref_rows(ring: RingSpec, rows: list[list], ncols: int) -> tuple[list[list], list[int]]:
    """Reduced row echelon form of a list of row vectors (rows are consumed).

    Returns the nonzero rows and their pivot columns.  Pivot search takes the
    first nonzero entry; the arithmetic is exact so no pivoting strategy is
    needed.
    """
    _require_field(ring)
    norm = ring.norm
    rows = [r for r in rows if any(x != 0 for x in r)]
    pivots = []
    top = 0
    for c in range(ncols):
        if top == len(rows):
            break
        for r in range(top, len(rows)):
            if rows[r][c] != 0:
                break
        else:
            continue
        rows[top], rows[r] = rows[r], rows[top]
        prow = rows[top]
        if prow[c] != 1:
            inv = ring.inv(prow[c])
            prow = [norm(x * inv) for x in prow]
            rows[top] = prow
        support = [k for k in range(c, ncols) if prow[k] != 0]
        for r2, row in enumerate(rows):
            if r2 != top:
                f = row[c]
                if f != 0:
                    for k in support:
                        row[k] = norm(row[k] - f * prow[k])
        pivots.append(c)
        top += 1
    return rows[:top], pivots


def rank(a: DenseMatrix) -> int:
    ring = a.ring if a.ring.is_field() else QQ
    return len(rref_rows(ring, a.tolist(), a.cols)[1])


def nullspace(a: DenseMatrix) -> list[DenseMatrix]:
    """Basis of ``{v : a v = 0}`` as column vectors, in reduced echelon form."""
    _require_field(a.ring)
    ring = a.ring
    rows, pivots = rref_rows(ring, a.tolist(), a.cols)
    pivset = set(pivots)
    free = [c for c in range(a.cols) if c not in pivset]
    vectors = []
    for f in free:
        v = [0] * a.cols
        v[f] = 1
        for row, pc in zip(rows, pivots):
            if row[f] != 0:
                v[pc] = ring.norm(-row[f])
        vectors.append(v)
    vectors, _ = rref_rows(ring, vectors, a.cols)
    return [DenseMatrix(ring, [[x] for x in v]) for v in vectors]


def solve_linear(a: DenseMatrix, rhs: DenseMatrix) -> DenseMatrix | None:
    """One solution ``x`` of ``a x = rhs``, or ``None`` when inconsistent."""
    _require_field(a.ring)
    if a.ring != rhs.ring:
        raise ShapeError(f"ring mismatch: {a.ring} vs {rhs.ring}")
    if a.rows != rhs.rows:
        raise ShapeError(f"row mismatch: {a.shape} vs {rhs.shape}")
    ring = a.ring
    aug = [list(ra) + list(rb) for ra, rb in zip(a._data, rhs._data)]
    rows, pivots = rref_rows(ring, aug, a.cols + rhs.cols)
    if pivots and pivots[-1] >= a.cols:
        return None
    sol = [[0] * rhs.cols for _ in range(a.cols)]
    for row, pc in zip(rows, pivots):
        sol[pc] = row[a.cols:]
    return DenseMatrix(ring, sol)


def in_span(ring: RingSpec, vectors: Sequence[Sequence], v: Sequence) -> bool:
    """Is ``v`` an R-linear combination of ``vectors``?

    Over Z the coordinates are solved over Q; a vector is in the Z-span only
    when every forced coordinate is integral.  Inputs that admit several
    rational solutions (dependent generators) are decided on the reduced
    solution with free coordinates set to zero.
    """
    if not vectors:
        return all(x == 0 for x in v)
    field = ring if ring.is_field() else QQ
    a = DenseMatrix(field, [list(col) for col in zip(*vectors)])
    rhs = DenseMatrix(field, [[x] for x in v])
    sol = solve_linear(a, rhs)
    if sol is None:
        return False
    if ring.kind == INTEGERS:
        return all(Fraction(x).denominator == 1 for x in sol.flat())
    return True


# -- characteristic polynomial ------------------------------------------------

def charpoly(a: DenseMatrix) -> list:
    """Coefficients of ``det(xI - a)`` from the leading term down (Faddeev-LeVerrier)."""
    if not a.is_square():
        raise ShapeError("characteristic polynomial of a non-square matrix")
    if a.ring.kind == PRIME_FIELD:
        raise RingError("Faddeev-LeVerrier divides by k; use exhaustive roots over GF(p)")
    q = DenseMatrix(QQ, a.tolist())
    n = a.rows
    coeffs = [1]
    m = DenseMatrix.zeros(QQ, n)
    ident = DenseMatrix.identity(QQ, n)
    for k in range(1, n + 1):
        m = q @ m + ident.scale(coeffs[-1])
        am = q @ m
        tr = sum(am[i, i] for i in range(n))
        coeffs.append(QQ.norm(Fraction(-tr, k)))
    return coeffs


def _poly_eval(coeffs, x):
    acc = 0
    for c in coeffs:
        acc = acc * x + c
    return acc


def _poly_divmod_linear(coeffs, r):
    """Synthetic division by ``(x - r)``; returns (quotient, remainder)."""
    out = []
    acc = 0
    for c in coeffs:
        acc = acc * r + c
        out.append(acc)
    return out[:-1], out[-1]


def _poly_strip(p):
    i = 0
    while i < len(p) - 1 and p[i] == 0:
        i += 1
    return p[i:]


def _poly_rem(a, b):
    a = [Fraction(x) for x in a]
    while len(a) >= len(b) and any(a):
        f = a[0] / b[0]
        for k in range(len(b)):
            a[k] -= f * b[k]
        a = _poly_strip(a[1:]) if len(a) > 1 else [Fraction(0)]
    return a


def _poly_gcd(a, b):
    a, b = _poly_strip(list(a)), _poly_strip(list(b))
    while any(b):
        a, b = b, _poly_rem(a, b)
    return [Fraction(x) / a[0] for x in a]


def _divisors(k: int) -> list[int]:
    k = abs(k)
    small = [d for d in range(1, isqrt(k) + 1) if k % d == 0]
    return sorted(set(small + [k // d for d in small]))


def rational_roots(coeffs) -> list[tuple[Fraction, int]]:
    """Rational roots with multiplicity of a polynomial given leading term first."""
    poly = [Fraction(c) for c in _poly_strip(list(coeffs))]
    if len(poly) <= 1:
        return []
    deriv = [c * (len(poly) - 1 - k) for k, c in enumerate(poly[:-1])]
    g = _poly_gcd(poly, deriv)
    # candidates come from the square-free part, whose constant term is small
    sqfree = poly
    if len(g) > 1:
        q = list(poly)
        sqfree = []
        while len(q) >= len(g):
            f = q[0] / g[0]
            sqfree.append(f)
            for k in range(len(g)):
                q[k] -= f * g[k]
            q = q[1:]
    den = 1
    for c in sqfree:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in sqfree]
    cands = set()
    while ints and ints[-1] == 0:
        ints.pop()
        cands.add(Fraction(0))
    if len(ints) > 1:
        for num in _divisors(ints[-1]):
            for d in _divisors(ints[0]):
                cands.add(Fraction(num, d))
                cands.add(Fraction(-num, d))
    roots = []
    for r in sorted(cands):
        mult = 0
        p = poly
        while len(p) > 1:
            quo, rem = _poly_divmod_linear(p, r)
            if rem != 0:
                break
            p = quo
            mult += 1
        if mult:
            roots.append((r, mult))
    return roots


def charpoly_and_rational_roots(a: DenseMatrix) -> tuple[list, list[tuple]]:
    """Characteristic polynomial and its rational roots with multiplicities.

    Only for Z and Q; over GF(p) roots are found by testing every residue
    (see :func:`prime_field_roots`).
    """
    if a.ring.kind == PRIME_FIELD:
        raise RingError("use prime_field_roots over GF(p): all residues are tested exhaustively")
    coeffs = charpoly(a)
    roots = [(QQ.norm(r), m) for r, m in rational_roots(coeffs)]
    return coeffs, roots


def prime_field_roots(a: DenseMatrix) -> list[tuple[int, int]]:
    """Eigenvalues in GF(p) with algebraic multiplicity, by exhaustive search."""
    ring = a.ring
    if ring.kind != PRIME_FIELD:
        raise RingError("prime_field_roots needs a GF(p) matrix")
    n = a.rows
    ident = DenseMatrix.identity(ring, n)
    out = []
    for r in range(ring.p):
        shifted = a - ident.scale(r)
        if rank(shifted) == n:
            continue
        mult = n - rank(shifted ** n)
        out.append((r, mult))
    return out
