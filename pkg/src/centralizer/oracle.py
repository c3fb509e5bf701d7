"""Brute-force ground truth computed from raw matrices only.

Nothing here knows about Jordan types or structured bases.  The centralizer
is the kernel of the commutator map, the radical comes from the trace form
of the regular representation, and simples are counted as the dimension of
the center of the semisimple quotient.  All of it is polynomial but slow, so
matrix size is capped.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .arith import RingError, RingSpec
from .linalg import DenseMatrix, ShapeError, nullspace, rref_rows

ORACLE_CAP = 10


class OracleCapExceeded(ValueError):
    pass


def _guard(ring: RingSpec, n: int, cap: int | None):
    if not ring.is_field():
        raise RingError(f"the oracle works over a field, not {ring}")
    cap = ORACLE_CAP if cap is None else cap
    if n > cap:
        raise OracleCapExceeded(f"matrix size {n} exceeds the oracle cap {cap}")


@dataclass(frozen=True)
class SpanBasis:
    """A subspace of ``M_n`` held as reduced echelon rows of length ``n^2``."""

    ring: RingSpec
    n: int
    rows: tuple[tuple, ...]
    pivots: tuple[int, ...]

    @classmethod
    def from_matrices(cls, ring: RingSpec, n: int, mats: Sequence[DenseMatrix]) -> "SpanBasis":
        for m in mats:
            if m.shape != (n, n) or m.ring != ring:
                raise ShapeError(f"expected {n}x{n} matrices over {ring}")
        rows, pivots = rref_rows(ring, [list(m.flat()) for m in mats], n * n)
        return cls(ring, n, tuple(tuple(r) for r in rows), tuple(pivots))

    @property
    def dim(self) -> int:
        return len(self.rows)

    def matrices(self) -> list[DenseMatrix]:
        n = self.n
        return [DenseMatrix(self.ring, [r[k * n:(k + 1) * n] for k in range(n)]) for r in self.rows]

    def coordinates(self, m: DenseMatrix) -> list | None:
        """Coefficients against :attr:`rows`, or ``None`` outside the span."""
        v = list(m.flat())
        norm = self.ring.norm
        coords = []
        for row, p in zip(self.rows, self.pivots):
            f = v[p]
            coords.append(f)
            if f:
                for k in range(p, len(v)):
                    if row[k]:
                        v[k] = norm(v[k] - f * row[k])
        return None if any(v) else coords

    def contains(self, m: DenseMatrix) -> bool:
        return self.coordinates(m) is not None


def _commutator_rows(ring: RingSpec, c: DenseMatrix) -> list[list]:
    """Rows of the linear map ``a -> c a - a c`` on ``n^2``-vectors (row-major)."""
    n = c.rows
    rows = []
    for r in range(n):
        for col in range(n):
            row = [0] * (n * n)
            for k in range(n):
                if c[r, k]:
                    row[k * n + col] = ring.norm(row[k * n + col] + c[r, k])
                if c[k, col]:
                    row[r * n + k] = ring.norm(row[r * n + k] - c[k, col])
            if any(row):
                rows.append(row)
    return rows


def centralizer_nullspace(c: DenseMatrix, cap: int | None = None) -> SpanBasis:
    """All matrices commuting with ``c``."""
    return centralizer_of_set([c], cap)


def centralizer_of_set(mats: Sequence[DenseMatrix], cap: int | None = None) -> SpanBasis:
    if not mats:
        raise ValueError("need at least one matrix")
    ring, n = mats[0].ring, mats[0].rows
    _guard(ring, n, cap)
    rows = []
    for c in mats:
        if c.shape != (n, n) or c.ring != ring:
            raise ShapeError("matrices must be square of one size over one ring")
        rows.extend(_commutator_rows(ring, c))
    if not rows:
        ident = [DenseMatrix.from_entries(ring, n, n, {(r, k): 1})
                 for r in range(n) for k in range(n)]
        return SpanBasis.from_matrices(ring, n, ident)
    kernel = nullspace(DenseMatrix(ring, rows))
    vecs = [list(v.flat()) for v in kernel]
    out, pivots = rref_rows(ring, vecs, n * n)
    return SpanBasis(ring, n, tuple(tuple(r) for r in out), tuple(pivots))


def span_equal(a: SpanBasis, b: SpanBasis) -> bool:
    if (a.ring, a.n) != (b.ring, b.n):
        raise ShapeError("spans live in different ambient spaces")
    if a.dim != b.dim:
        return False
    return all(a.contains(m) for m in b.matrices()) and all(b.contains(m) for m in a.matrices())


class _Echelon:
    """Incremental echelon form of sparse vectors (``{index: value}`` dicts)."""

    def __init__(self, ring: RingSpec):
        self.ring = ring
        self.rows: dict = {}

    def add(self, vec: dict) -> bool:
        norm = self.ring.norm
        v = {k: x for k, x in vec.items() if x}
        while v:
            lead = min(v)
            row = self.rows.get(lead)
            if row is None:
                inv = self.ring.inv(v[lead])
                self.rows[lead] = {k: norm(x * inv) for k, x in v.items()}
                return True
            f = v[lead]
            for k, x in row.items():
                w = norm(v.get(k, 0) - f * x)
                if w:
                    v[k] = w
                else:
                    v.pop(k, None)
        return False

    @property
    def rank(self) -> int:
        return len(self.rows)


def _structure(basis: SpanBasis) -> tuple[list[DenseMatrix], list[list[list]]]:
    mats = basis.matrices()
    consts = []
    for x in mats:
        row = []
        for y in mats:
            coords = basis.coordinates(x @ y)
            if coords is None:
                raise ValueError("the span is not closed under multiplication")
            row.append(coords)
        consts.append(row)
    return mats, consts


def _check_char(basis: SpanBasis):
    p = basis.ring.characteristic
    if p and p <= basis.n:
        raise RingError(f"the trace-form radical is only reliable for p > {basis.n}; got p = {p}")


def radical_oracle(basis: SpanBasis, cap: int | None = None) -> SpanBasis:
    """``{x : Tr(L_x L_y) = 0 for all y}``, checked to be nilpotent before returning."""
    _guard(basis.ring, basis.n, cap)
    _check_char(basis)
    rad_coords = _radical_coordinates(basis, _structure(basis)[1])
    mats = basis.matrices()
    ring, n = basis.ring, basis.n
    rad = [_combine(ring, n, mats, v) for v in rad_coords]
    out = SpanBasis.from_matrices(ring, n, rad) if rad else SpanBasis(ring, n, (), ())
    _assert_nilpotent(out)
    return out


def _combine(ring, n, mats, coeffs) -> DenseMatrix:
    acc = DenseMatrix.zeros(ring, n)
    for m, c in zip(mats, coeffs):
        if c:
            acc = acc + m.scale(c)
    return acc


def _radical_coordinates(basis: SpanBasis, consts) -> list[list]:
    ring = basis.ring
    d = basis.dim
    if d == 0:
        return []
    # Tr(L_b) = sum_j coord_j(b b_j); Tr(L_x L_y) = Tr(L_{xy}) expands linearly
    t = [ring.norm(sum(consts[k][j][j] for j in range(d))) for k in range(d)]
    gram = [[ring.norm(sum(c * tk for c, tk in zip(consts[x][y], t))) for y in range(d)]
            for x in range(d)]
    return [list(v.flat()) for v in nullspace(DenseMatrix(ring, gram))]


def _assert_nilpotent(rad: SpanBasis):
    if rad.dim == 0:
        return
    ring, n = rad.ring, rad.n
    gens = rad.matrices()
    power = gens
    for _ in range(n):
        prods = [a @ b for a in power for b in gens]
        prods = [m for m in prods if not m.is_zero()]
        if not prods:
            return
        nxt = SpanBasis.from_matrices(ring, n, prods)
        power = nxt.matrices()
    raise AssertionError("trace-form radical is not nilpotent")


def simple_count_oracle(basis: SpanBasis, cap: int | None = None) -> int:
    """Dimension of the center of ``A / rad A``.

    For a split semisimple quotient this is the number of simple modules.
    The center is the kernel of ``x -> ([x, b_j] mod rad)_j``; its preimage in
    ``A`` contains ``rad``, which is subtracted at the end.
    """
    _guard(basis.ring, basis.n, cap)
    _check_char(basis)
    ring = basis.ring
    d = basis.dim
    _, consts = _structure(basis)
    rad = _radical_coordinates(basis, consts)
    rad_rows, rad_piv = rref_rows(ring, [list(v) for v in rad], d) if rad else ([], [])
    norm = ring.norm

    def mod_rad(v):
        v = list(v)
        for row, p in zip(rad_rows, rad_piv):
            f = v[p]
            if f:
                for k in range(d):
                    if row[k]:
                        v[k] = norm(v[k] - f * row[k])
        return v

    ech = _Echelon(ring)
    for i in range(d):
        col = {}
        for j in range(d):
            comm = [norm(a - b) for a, b in zip(consts[i][j], consts[j][i])]
            if any(comm):
                for k, x in enumerate(mod_rad(comm)):
                    if x:
                        col[j * d + k] = x
        ech.add(col)
    return (d - ech.rank) - len(rad_rows)
