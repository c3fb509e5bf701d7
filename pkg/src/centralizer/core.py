"""The structured basis ``F^p_ij`` of a Jordan centralizer and its multiplication.

Every basis element is a 0/1 matrix with ``p`` ones placed along a diagonal
of block ``(i, j)``; different elements have disjoint supports.  Products of
basis elements are again basis elements or zero, decided by comparing
levels, so structure constants never require materializing a matrix.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .arith import RingSpec
from .jordan import JordanType, block_index, idempotent_f
from .linalg import DenseMatrix, ShapeError


@dataclass(frozen=True, order=True)
class BasisElement:
    """``F^p_ij`` in eigenvalue group ``group`` (all indices 1-based)."""

    group: int
    i: int
    j: int
    p: int

    def __str__(self):
        return f"F[{self.group}]^{self.p}_{self.i},{self.j}"

    def to_json(self) -> dict:
        return {"group": self.group, "i": self.i, "j": self.j, "p": self.p}


def validate_element(jt: JordanType, e: BasisElement) -> None:
    idx = block_index(jt)
    if not 1 <= e.group <= jt.t:
        raise ValueError(f"{e}: no eigenvalue group {e.group}")
    gi = idx.groups[e.group - 1]
    if not (1 <= e.i <= gi.ms and 1 <= e.j <= gi.ms):
        raise ValueError(f"{e}: block index out of range")
    if not 1 <= e.p <= gi.theta(e.i, e.j):
        raise ValueError(f"{e}: level must lie in [1, {gi.theta(e.i, e.j)}]")


def _support(jt: JordanType, e: BasisElement) -> list[tuple[int, int]]:
    """0-based positions of the ones of ``F^p_ij``."""
    idx = block_index(jt)
    gi = idx.groups[e.group - 1]
    top = idx.offset(e.group, e.i) - gi.lam(e.i)
    right = idx.offset(e.group, e.j)
    return [(top + e.p - u, right - u) for u in range(1, e.p + 1)]


def _anchor(jt: JordanType, e: BasisElement) -> tuple[int, int]:
    """0-based position whose entry is the coefficient of ``e`` in any element."""
    idx = block_index(jt)
    gi = idx.groups[e.group - 1]
    return idx.offset(e.group, e.i) - gi.lam(e.i) + e.p - 1, idx.offset(e.group, e.j) - 1


def basis_matrix(jt: JordanType, e: BasisElement) -> DenseMatrix:
    return DenseMatrix.from_entries(jt.ring, jt.n, jt.n, {rc: 1 for rc in _support(jt, e)})


def semicirculant_basis(m: int, n: int, ring: RingSpec) -> list[DenseMatrix]:
    """``G^1, ..., G^min(m,n)`` in ``M_{m x n}``; ``G^p`` has ones on a diagonal ending at ``(p, n)``."""
    if m < 1 or n < 1:
        raise ShapeError("dimensions must be positive")
    out = []
    for p in range(1, min(m, n) + 1):
        out.append(DenseMatrix.from_entries(
            ring, m, n, {(p - j, n - j): 1 for j in range(1, p + 1)}))
    return out


@lru_cache(maxsize=256)
def _structured_basis(jt: JordanType) -> tuple[BasisElement, ...]:
    idx = block_index(jt)
    out = []
    for grp, gi in enumerate(idx.groups, start=1):
        for i in gi.blocks():
            for j in gi.blocks():
                for p in range(1, gi.theta(i, j) + 1):
                    out.append(BasisElement(grp, i, j, p))
    return tuple(out)


def structured_basis(jt: JordanType) -> list[BasisElement]:
    """All ``F^p_ij``, ordered by ``(group, i, j, p)``."""
    return list(_structured_basis(jt))


def rank_formula(jt: JordanType) -> int:
    total = 0
    for grp in jt.groups:
        prev = 0
        for size, b in grp.blocks:
            cur = prev + b
            total += (cur * cur - prev * prev) * size
            prev = cur
    return total


def multiply_basis(jt: JordanType, x: BasisElement, y: BasisElement) -> BasisElement | None:
    """``F^p_ik F^q_lj``: either ``F^{p+q-lambda_k}_ij`` (coefficient one) or zero."""
    if x.group != y.group or x.j != y.i:
        return None
    gi = block_index(jt).groups[x.group - 1]
    level = x.p + y.p - gi.lam(x.j)
    if level < 1:
        return None
    return BasisElement(x.group, x.i, y.j, level)


class AlgebraElement:
    """A finitely supported combination of structured basis elements."""

    __slots__ = ("jt", "coeffs")

    def __init__(self, jt: JordanType, coeffs: dict | None = None):
        norm = jt.ring.norm
        clean = {}
        for e, c in (coeffs or {}).items():
            c = norm(c)
            if c != 0:
                clean[e] = c
        self.jt = jt
        self.coeffs = clean

    @classmethod
    def basis(cls, jt: JordanType, e: BasisElement) -> "AlgebraElement":
        validate_element(jt, e)
        return cls(jt, {e: 1})

    @classmethod
    def identity(cls, jt: JordanType) -> "AlgebraElement":
        idx = block_index(jt)
        coeffs = {}
        for grp, gi in enumerate(idx.groups, start=1):
            for i in gi.blocks():
                coeffs[BasisElement(grp, i, i, gi.lam(i))] = 1
        return cls(jt, coeffs)

    @classmethod
    def from_matrix(cls, jt: JordanType, m: DenseMatrix) -> "AlgebraElement":
        """Coordinates of a centralizer element; raises if ``m`` is not one."""
        if m.shape != (jt.n, jt.n) or m.ring != jt.ring:
            raise ShapeError(f"expected an {jt.n}x{jt.n} matrix over {jt.ring}")
        coeffs = {e: m[_anchor(jt, e)] for e in _structured_basis(jt)}
        a = cls(jt, coeffs)
        if a.materialize() != m:
            raise ValueError("matrix does not commute with the Jordan matrix")
        return a

    @classmethod
    def from_vector(cls, jt: JordanType, vec) -> "AlgebraElement":
        basis = _structured_basis(jt)
        if len(vec) != len(basis):
            raise ShapeError(f"expected {len(basis)} coordinates, got {len(vec)}")
        return cls(jt, dict(zip(basis, vec)))

    def vector(self) -> list:
        return [self.coeffs.get(e, 0) for e in _structured_basis(self.jt)]

    def materialize(self) -> DenseMatrix:
        entries = {}
        for e, c in self.coeffs.items():
            for rc in _support(self.jt, e):
                entries[rc] = c
        return DenseMatrix.from_entries(self.jt.ring, self.jt.n, self.jt.n, entries)

    def _check(self, other):
        if not isinstance(other, AlgebraElement):
            raise TypeError(f"expected AlgebraElement, got {type(other).__name__}")
        if other.jt != self.jt:
            raise ShapeError("elements of different algebras")

    def __add__(self, other):
        self._check(other)
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, 0) + c
        return AlgebraElement(self.jt, out)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, k):
        return AlgebraElement(self.jt, {e: k * c for e, c in self.coeffs.items()})

    def __mul__(self, other):
        return multiply_elements(self, other)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.jt == other.jt and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.jt, frozenset(self.coeffs.items())))

    def __repr__(self):
        fmt = self.jt.ring.format
        terms = " + ".join(f"{fmt(c)}*{e}" for e, c in sorted(self.coeffs.items()))
        return f"AlgebraElement({terms or '0'})"


def multiply_elements(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    a._check(b)
    jt = a.jt
    by_row: dict[tuple[int, int], list] = {}
    for e, c in b.coeffs.items():
        by_row.setdefault((e.group, e.i), []).append((e, c))
    out: dict = {}
    for x, cx in a.coeffs.items():
        for y, cy in by_row.get((x.group, x.j), ()):
            z = multiply_basis(jt, x, y)
            if z is not None:
                out[z] = out.get(z, 0) + cx * cy
    return AlgebraElement(jt, out)


def _basic_single_group(jt: JordanType, what: str) -> None:
    if not jt.ring.is_field():
        raise ValueError(f"{what} needs a field; use oracle radical")
    if jt.t != 1 or any(b != 1 for b in jt.groups[0].mults):
        raise ValueError(f"{what} needs one eigenvalue group with all multiplicities 1; "
                         "use oracle radical")


def radical_basis_basic(jt: JordanType) -> list[BasisElement]:
    """Radical of the basic algebra: everything except the diagonal tops ``F^{lambda_i}_ii``."""
    _basic_single_group(jt, "the closed-form radical")
    sizes = jt.groups[0].sizes
    return [e for e in _structured_basis(jt) if not (e.i == e.j and e.p == sizes[e.i - 1])]


def cartan_dims(jt: JordanType) -> list[list[int]]:
    """``dim f_i A f_j`` over all Jordan blocks, ordered group by group."""
    idx = block_index(jt)
    labels = [(grp, i) for grp, gi in enumerate(idx.groups, start=1) for i in gi.blocks()]
    table = []
    for g1, i in labels:
        row = []
        for g2, j in labels:
            row.append(idx.groups[g1 - 1].theta(i, j) if g1 == g2 else 0)
        table.append(row)
    return table


@dataclass
class Relation:
    text: str
    holds: bool
    expected: bool


@dataclass
class Quiver:
    vertices: int
    arrows: dict[tuple[int, int], int]
    relations: list[Relation] = field(default_factory=list)

    @property
    def relations_hold(self) -> bool:
        return all(r.holds for r in self.relations if r.expected)

    def to_json(self) -> dict:
        return {
            "vertices": self.vertices,
            "arrows": [{"from": u, "to": v, "count": k} for (u, v), k in sorted(self.arrows.items())],
            "relations": [{"relation": r.text, "holds": r.holds, "expected": r.expected}
                          for r in self.relations],
        }


def gabriel_quiver(jt: JordanType) -> Quiver:
    """Arrow counts ``dim f_u (rad/rad^2) f_v`` for the basic single-group case.

    The radical and its square are both spanned by subsets of the structured
    basis (products of basis elements are basis elements), so the quotient
    dimension is the size of a set difference.
    """
    rad = radical_basis_basic(jt)
    rad_set = set(rad)
    rows: dict[int, list] = {}
    for e in rad:
        rows.setdefault(e.i, []).append(e)
    rad2 = set()
    for x in rad:
        for y in rows.get(x.j, ()):
            z = multiply_basis(jt, x, y)
            if z is not None:
                rad2.add(z)
    if not rad2 <= rad_set:
        raise AssertionError("rad^2 escaped the radical")
    arrows: dict[tuple[int, int], int] = {}
    for e in rad:
        if e not in rad2:
            arrows[(e.i, e.j)] = arrows.get((e.i, e.j), 0) + 1
    s = jt.groups[0].s
    quiver = Quiver(s, arrows)
    sizes = jt.groups[0].sizes

    def mat(i, j, p):
        return basis_matrix(jt, BasisElement(1, i, j, p))

    if s >= 2 and all(sizes[i - 1] == s - i + 1 for i in range(1, s + 1)):
        alpha = {i: mat(i, i + 1, sizes[i]) for i in range(1, s)}
        beta = {i: mat(i + 1, i, sizes[i]) for i in range(1, s)}
        quiver.relations.append(Relation(
            f"beta_{s-1} alpha_{s-1} = 0", (beta[s - 1] @ alpha[s - 1]).is_zero(), True))
        for i in range(2, s):
            quiver.relations.append(Relation(
                f"alpha_{i} beta_{i} = beta_{i-1} alpha_{i-1}",
                alpha[i] @ beta[i] == beta[i - 1] @ alpha[i - 1], True))
    if s == 2 and arrows.get((1, 2)) == 1 and arrows.get((2, 1)) == 1:
        a, b = mat(1, 2, sizes[1]), mat(2, 1, sizes[1])
        quiver.relations.append(Relation(
            "beta alpha beta alpha = 0", (b @ a @ b @ a).is_zero(), False))
    return quiver


def product_decomposition(jt: JordanType) -> list[tuple[object, JordanType]]:
    """One single-eigenvalue factor per group; the algebra is their direct product."""
    return [(g.eigenvalue, jt.restrict(k)) for k, g in enumerate(jt.groups, start=1)]


def block_idempotents(jt: JordanType) -> list[DenseMatrix]:
    idx = block_index(jt)
    return [idempotent_f(jt, i, grp) for grp, gi in enumerate(idx.groups, start=1)
            for i in gi.blocks()]
