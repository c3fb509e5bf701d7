"""Frobenius systems ``(E, x, y)`` for subalgebras ``B`` of ``M_n(R)``.

Two constructions are provided.  For a finite matrix group the trace is the
conjugation average ``a -> sum_g g a g^-1`` together with duals built from a
free point.  For a Jordan centralizer the trace is assembled blockwise from
semicirculant pieces.  Either way :func:`check_frobenius_system` verifies the
bimodule law and both dual-basis identities on every matrix unit.

Internally matrices are handled as sparse ``{(r, c): value}`` dicts with
0-based keys; the verification loops are dominated by products of very
sparse matrices.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, isqrt
from typing import Sequence

from .arith import QQ, RingSpec
from .core import basis_matrix, semicirculant_basis, structured_basis
from .jordan import JordanType, block_index, embed_phi, embed_psi
from .linalg import DenseMatrix, ShapeError, block_diag, nullspace, rank, rref_rows

Sparse = dict


def _sparse(m: DenseMatrix) -> Sparse:
    return {(r, c): x for r, c, x in m.nonzero()}


def _dense(ring: RingSpec, n: int, s: Sparse) -> DenseMatrix:
    return DenseMatrix.from_entries(ring, n, n, s)


def _spmul(ring: RingSpec, a: Sparse, b: Sparse) -> Sparse:
    rows: dict[int, list] = {}
    for (r, c), x in b.items():
        rows.setdefault(r, []).append((c, x))
    out: Sparse = {}
    for (r, k), x in a.items():
        for c, y in rows.get(k, ()):
            out[(r, c)] = out.get((r, c), 0) + x * y
    norm = ring.norm
    return {rc: v for rc, v in ((rc, norm(v)) for rc, v in out.items()) if v != 0}


def _spadd(ring: RingSpec, acc: Sparse, b: Sparse, k=1) -> None:
    norm = ring.norm
    for rc, v in b.items():
        w = norm(acc.get(rc, 0) + k * v)
        if w:
            acc[rc] = w
        else:
            acc.pop(rc, None)


# -- groups -------------------------------------------------------------------

_CYCLE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str) -> list[tuple[int, ...]]:
    """Parse cycle notation such as ``"(1 2 3)(4 5)"`` (1-based, fixed points omitted)."""
    stripped = text.strip()
    if stripped in ("", "()"):
        return []
    if _CYCLE.sub("", stripped).strip():
        raise ValueError(f"malformed cycle notation: {text!r}")
    cycles = []
    for body in _CYCLE.findall(stripped):
        parts = body.replace(",", " ").split()
        try:
            pts = tuple(int(x) for x in parts)
        except ValueError as exc:
            raise ValueError(f"malformed cycle notation: {text!r}") from exc
        if any(x < 1 for x in pts) or len(set(pts)) != len(pts):
            raise ValueError(f"bad cycle {body!r}")
        if len(pts) > 1:
            cycles.append(pts)
    seen = [x for c in cycles for x in c]
    if len(seen) != len(set(seen)):
        raise ValueError(f"cycles in {text!r} are not disjoint")
    return cycles


def perm_from_cycles(cycles: Sequence[tuple[int, ...]], degree: int) -> tuple[int, ...]:
    """Image tuple ``(1)s, ..., (n)s`` (1-based values)."""
    img = list(range(1, degree + 1))
    for cyc in cycles:
        if max(cyc) > degree:
            raise ValueError(f"cycle {cyc} exceeds degree {degree}")
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            img[a - 1] = b
    return tuple(img)


def cycle_type(perm: Sequence[int]) -> list[int]:
    seen, lengths = set(), []
    for start in range(1, len(perm) + 1):
        if start in seen:
            continue
        k, x = 0, start
        while x not in seen:
            seen.add(x)
            x = perm[x - 1]
            k += 1
        lengths.append(k)
    return sorted(lengths, reverse=True)


def permutation_matrix(ring: RingSpec, perm: Sequence[int]) -> DenseMatrix:
    """``c_s = sum_i e_{i,(i)s}``."""
    n = len(perm)
    return DenseMatrix.from_entries(ring, n, n, {(i, perm[i] - 1): 1 for i in range(n)})


def _compose(a, b):
    return tuple(b[x - 1] for x in a)


@dataclass(frozen=True)
class GroupSpec:
    """A finite subgroup of ``GL_n(R)``, identity first."""

    ring: RingSpec
    n: int
    elements: tuple[DenseMatrix, ...]
    permutations: tuple[tuple[int, ...], ...] | None = None

    @property
    def order(self) -> int:
        return len(self.elements)

    @classmethod
    def from_permutations(cls, ring: RingSpec, cycles: Sequence[str],
                          degree: int | None = None) -> "GroupSpec":
        """The group generated by permutations written in cycle notation."""
        parsed = [parse_cycles(c) for c in cycles]
        top = max((x for cs in parsed for c in cs for x in c), default=1)
        degree = top if degree is None else degree
        if degree < top:
            raise ValueError(f"degree {degree} smaller than largest moved point {top}")
        gens = [perm_from_cycles(cs, degree) for cs in parsed]
        ident = tuple(range(1, degree + 1))
        elems = {ident}
        frontier = [ident]
        while frontier:
            nxt = []
            for a in frontier:
                for g in gens:
                    b = _compose(a, g)
                    if b not in elems:
                        elems.add(b)
                        nxt.append(b)
            frontier = nxt
        perms = [ident] + sorted(elems - {ident})
        return cls(ring, degree, tuple(permutation_matrix(ring, p) for p in perms), tuple(perms))

    @classmethod
    def from_matrices(cls, ring: RingSpec, mats: Sequence[DenseMatrix]) -> "GroupSpec":
        """Validate an explicit element list: it must already be a group."""
        if not mats:
            raise ValueError("a group needs at least one element")
        n = mats[0].rows
        for m in mats:
            if m.shape != (n, n) or m.ring != ring:
                raise ShapeError("group elements must be square matrices of one size over one ring")
            field_m = m if ring.is_field() else DenseMatrix(QQ, m.tolist())
            if rank(field_m) != n:
                raise ValueError("group elements must be invertible")
        uniq = list(dict.fromkeys(mats))
        ident = DenseMatrix.identity(ring, n)
        if ident not in uniq:
            raise ValueError("the element list does not contain the identity")
        members = set(uniq)
        for a in uniq:
            for b in uniq:
                if a @ b not in members:
                    raise ValueError("the element list is not closed under multiplication")
        ordered = [ident] + [m for m in uniq if m != ident]
        return cls(ring, n, tuple(ordered), None)

    def inverse(self, g: DenseMatrix) -> DenseMatrix:
        ident = DenseMatrix.identity(self.ring, self.n)
        for h in self.elements:
            if g @ h == ident:
                return h
        raise ValueError("element has no inverse in the group")

    def fixed_algebra_basis(self) -> list[DenseMatrix]:
        """Basis of ``{a : g a = a g for all g}``."""
        ring, n = self.ring, self.n
        if self.permutations is not None:
            # orbit sums of matrix units under simultaneous relabelling
            seen, out = set(), []
            for r in range(1, n + 1):
                for c in range(1, n + 1):
                    if (r, c) in seen:
                        continue
                    orbit = {(p[r - 1], p[c - 1]) for p in self.permutations}
                    seen |= orbit
                    out.append(DenseMatrix.from_entries(
                        ring, n, n, {(a - 1, b - 1): 1 for a, b in orbit}))
            return out
        if not ring.is_field():
            raise ValueError("fixed algebras of matrix groups over Z are not supported; "
                             "give permutations instead")
        rows = []
        for g in self.elements[1:]:
            for i in range(n):
                for j in range(n):
                    row = [0] * (n * n)
                    for k in range(n):
                        row[k * n + j] = ring.norm(row[k * n + j] + g[i, k])
                        row[i * n + k] = ring.norm(row[i * n + k] - g[k, j])
                    rows.append(row)
        if not rows:
            return [DenseMatrix.from_entries(ring, n, n, {(r, c): 1})
                    for r in range(n) for c in range(n)]
        kernel = nullspace(DenseMatrix(ring, rows))
        return [DenseMatrix(ring, [list(v.flat()[r * n:(r + 1) * n]) for r in range(n)])
                for v in kernel]


def find_free_point(g: GroupSpec) -> int | None:
    """Smallest ``i`` with ``g_ii = 0`` for every non-identity ``g``, or ``None``."""
    for i in range(g.n):
        if all(h[i, i] == 0 for h in g.elements[1:]):
            return i + 1
    return None


def perm_free_point_criterion(cycle_lengths: Sequence[int]) -> bool:
    """A cyclic permutation group has a free point iff some cycle length is divisible by all."""
    if not cycle_lengths:
        raise ValueError("empty cycle type")
    return any(all(part % other == 0 for other in cycle_lengths) for part in cycle_lengths)


# -- systems ------------------------------------------------------------------

@dataclass
class FrobeniusSystem:
    ring: RingSpec
    n: int
    images: dict[tuple[int, int], Sparse]
    x: list[DenseMatrix]
    y: list[DenseMatrix]
    subalgebra: list[DenseMatrix]
    description: str
    details: dict = field(default_factory=dict)

    def apply(self, a: DenseMatrix) -> DenseMatrix:
        return _dense(self.ring, self.n, self._apply_sparse(_sparse(a)))

    def _apply_sparse(self, a: Sparse) -> Sparse:
        acc: Sparse = {}
        for rc, v in a.items():
            _spadd(self.ring, acc, self.images[rc], v)
        return acc


@dataclass
class FrobeniusReport:
    image_in_subalgebra: bool = True
    bimodule: bool = True
    dual_left: bool = True
    dual_right: bool = True
    counterexample: str | None = None

    @property
    def passed(self) -> bool:
        return self.image_in_subalgebra and self.bimodule and self.dual_left and self.dual_right

    def _fail(self, attr: str, msg: str):
        setattr(self, attr, False)
        if self.counterexample is None:
            self.counterexample = msg

    def to_json(self) -> dict:
        return {"passed": self.passed, "image_in_subalgebra": self.image_in_subalgebra,
                "bimodule": self.bimodule, "dual_basis_left": self.dual_left,
                "dual_basis_right": self.dual_right, "counterexample": self.counterexample}


class _SpanTest:
    """Membership in the R-span of independent matrices (integral coordinates over Z)."""

    def __init__(self, ring: RingSpec, mats: Sequence[DenseMatrix], n: int):
        self.ring = ring
        self.field = ring if ring.is_field() else QQ
        self.width = n * n
        self.k = k = len(mats)
        rows = []
        for t, m in enumerate(mats):
            row = list(m.flat()) + [0] * k
            row[self.width + t] = 1
            rows.append(row)
        echelon, pivots = rref_rows(self.field, rows, self.width + k)
        self.rows = [(r, p) for r, p in zip(echelon, pivots) if p < self.width]

    def coordinates(self, s: Sparse, n: int):
        norm = self.field.norm
        v = [0] * self.width
        for (r, c), x in s.items():
            v[r * n + c] = x
        coords = [0] * self.k
        for row, p in self.rows:
            f = v[p]
            if f:
                for k, x in enumerate(row):
                    if x:
                        if k < self.width:
                            v[k] = norm(v[k] - f * x)
                        else:
                            coords[k - self.width] = norm(coords[k - self.width] + f * x)
        if any(v):
            return None
        if not self.ring.is_field() and any(not isinstance(c, int) for c in coords):
            return None
        return coords


def check_frobenius_system(sys: FrobeniusSystem) -> FrobeniusReport:
    """Verify ``E`` is a B-bimodule map into B and that ``x, y`` are dual bases."""
    ring, n = sys.ring, sys.n
    rep = FrobeniusReport()
    span = _SpanTest(ring, sys.subalgebra, n)
    for (r, c), img in sorted(sys.images.items()):
        if span.coordinates(img, n) is None:
            rep._fail("image_in_subalgebra", f"E(e_{r+1},{c+1}) is not in the subalgebra")
            break
    units = [(r, c) for r in range(n) for c in range(n)]
    subs = [_sparse(b) for b in sys.subalgebra]
    for t, b in enumerate(subs):
        for (r, c) in units:
            a = {(r, c): 1}
            if sys._apply_sparse(_spmul(ring, b, a)) != _spmul(ring, b, sys.images[(r, c)]):
                rep._fail("bimodule", f"E(b{t} e_{r+1},{c+1}) != b{t} E(e_{r+1},{c+1})")
                break
            if sys._apply_sparse(_spmul(ring, a, b)) != _spmul(ring, sys.images[(r, c)], b):
                rep._fail("bimodule", f"E(e_{r+1},{c+1} b{t}) != E(e_{r+1},{c+1}) b{t}")
                break
        if not rep.bimodule:
            break
    xs = [_sparse(m) for m in sys.x]
    ys = [_sparse(m) for m in sys.y]
    for (r, c) in units:
        a = {(r, c): 1}
        left: Sparse = {}
        right: Sparse = {}
        for x, y in zip(xs, ys):
            _spadd(ring, left, _spmul(ring, x, sys._apply_sparse(_spmul(ring, y, a))))
            _spadd(ring, right, _spmul(ring, sys._apply_sparse(_spmul(ring, a, x)), y))
        if left != a and rep.dual_left:
            rep._fail("dual_left", f"sum x E(y e_{r+1},{c+1}) != e_{r+1},{c+1}")
        if right != a and rep.dual_right:
            rep._fail("dual_right", f"sum E(e_{r+1},{c+1} x) y != e_{r+1},{c+1}")
    return rep


def group_trace_system(g: GroupSpec, point: int | None = None,
                       require_free: bool = True) -> FrobeniusSystem:
    """Conjugation-average trace with duals ``x_j = e_{j,i}``, ``y_j = e_{i,j}``."""
    ring, n = g.ring, g.n
    free = find_free_point(g)
    if point is None:
        if free is None and require_free:
            raise ValueError("the group has no free point")
        point = free or 1
    if not 1 <= point <= n:
        raise ValueError(f"point {point} out of range")
    if require_free and any(h[point - 1, point - 1] != 0 for h in g.elements[1:]):
        raise ValueError(f"point {point} is not free")
    pairs = [(_sparse(h), _sparse(g.inverse(h))) for h in g.elements]
    images = {}
    for r in range(n):
        for c in range(n):
            acc: Sparse = {}
            for h, hinv in pairs:
                _spadd(ring, acc, _spmul(ring, _spmul(ring, h, {(r, c): 1}), hinv))
            images[(r, c)] = acc
    i = point - 1
    x = [DenseMatrix.from_entries(ring, n, n, {(j, i): 1}) for j in range(n)]
    y = [DenseMatrix.from_entries(ring, n, n, {(i, j): 1}) for j in range(n)]
    return FrobeniusSystem(ring, n, images, x, y, g.fixed_algebra_basis(),
                           f"group trace over {g.order} elements", {"point": point})


def group_split_witness(g: GroupSpec, sys: FrobeniusSystem) -> tuple[DenseMatrix, bool] | None:
    """``z = |G|^-1 I`` with the check ``E(z) = I``, when ``|G|`` is a unit."""
    ring = g.ring
    if ring.characteristic and gcd(g.order, ring.characteristic) != 1:
        return None
    if not ring.is_field() and g.order != 1:
        return None
    z = DenseMatrix.identity(ring, g.n).scale(ring.inv(ring.from_int(g.order)))
    return z, sys.apply(z) == DenseMatrix.identity(ring, g.n)


def dimension_obstruction(ring: RingSpec, subalgebra: Sequence[DenseMatrix], n: int) -> str | None:
    """Detect a local two-dimensional fixed algebra whose dimension cannot divide ``n^2``.

    Over a local algebra, projective modules are free, so ``M_n`` projective
    would force ``dim B | n^2``.  Only the two-dimensional case is recognised.
    """
    if not ring.is_field() or len(subalgebra) != 2 or (n * n) % 2 == 0:
        return None
    ident = DenseMatrix.identity(ring, n)
    span = _SpanTest(ring, list(subalgebra), n)
    if span.coordinates(_sparse(ident), n) is None:
        return None
    gamma = next((b for b in subalgebra if span.coordinates(_sparse(b), n) is not None
                  and rank(DenseMatrix(ring, [list(b.flat()), list(ident.flat())])) == 2), None)
    if gamma is None:
        return None
    pair = _SpanTest(ring, [ident, gamma], n)
    coords = pair.coordinates(_sparse(gamma @ gamma), n)
    if coords is None:
        return None
    beta, alpha = coords  # gamma^2 = beta I + alpha gamma
    disc = ring.norm(alpha * alpha + 4 * beta)
    if ring.characteristic == 2:
        local = True if alpha == 0 else _has_no_root(ring, alpha, beta)
    else:
        local = disc == 0 or not _is_square(ring, disc)
    if not local:
        return None
    return (f"fixed algebra is local of dimension 2, which does not divide dim M_{n} = {n * n}; "
            f"M_{n} is not projective over it, so the extension is not Frobenius")


def _is_square(ring: RingSpec, x) -> bool:
    if ring.characteristic:
        return any(ring.norm(t * t) == x for t in range(ring.p))
    f = Fraction(x)
    if f < 0:
        return False
    a, b = f.numerator, f.denominator
    return isqrt(a) ** 2 == a and isqrt(b) ** 2 == b


def _has_no_root(ring: RingSpec, alpha, beta) -> bool:
    return all(ring.norm(t * t - alpha * t - beta) != 0 for t in range(ring.p))


# -- Jordan route ---------------------------------------------------------------

def build_Eij(jt: JordanType, group: int, i: int, j: int):
    """The linear map on ``lambda_i x lambda_j`` matrices used for block ``(i, j)``.

    Returns a callable taking and returning :class:`DenseMatrix`.  Its value
    is a combination of the semicirculants ``G^p`` with ``p <= rho_ij``.
    """
    gi = block_index(jt).groups[group - 1]
    li, lj = gi.lam(i), gi.lam(j)
    rho = gi.rho(i, j)
    ring = jt.ring
    gs = semicirculant_basis(li, lj, ring)

    def eij(a: DenseMatrix) -> DenseMatrix:
        if a.shape != (li, lj):
            raise ShapeError(f"E_{i}{j} acts on {li}x{lj} matrices, got {a.shape}")
        out = DenseMatrix.zeros(ring, li, lj)
        for p in range(1, rho + 1):
            coeff = 0
            for u in range(1, rho - p + 2):
                coeff += a[li - u, rho - p + 1 - u]
            coeff = ring.norm(coeff)
            if coeff:
                out = out + gs[p - 1].scale(coeff)
        return out

    eij.rho = rho
    return eij


def _group_trace_images(jt: JordanType, grp: int) -> dict[tuple[int, int], Sparse]:
    """``E(e_rc)`` for matrix units inside the diagonal block of group ``grp``."""
    idx = block_index(jt)
    gi = idx.groups[grp - 1]
    ring = jt.ring
    out = {}
    for i in gi.blocks():
        for j in gi.blocks():
            eij = build_Eij(jt, grp, i, j)
            li, lj = gi.lam(i), gi.lam(j)
            r0 = idx.first_row(grp, i) - 1
            c0 = idx.first_row(grp, j) - 1
            for a in range(li):
                for b in range(lj):
                    unit = DenseMatrix.from_entries(ring, li, lj, {(a, b): 1})
                    img = embed_phi(jt, i, j, eij(unit), grp) if eij.rho >= 1 else None
                    out[(r0 + a, c0 + b)] = _sparse(img) if img is not None else {}
    return out


def jordan_trace_system(jt: JordanType) -> FrobeniusSystem:
    ring, n = jt.ring, jt.n
    idx = block_index(jt)
    images = {(r, c): {} for r in range(n) for c in range(n)}
    for grp in range(1, jt.t + 1):
        images.update(_group_trace_images(jt, grp))
    starts = [idx.tau[k] for k in range(jt.t)]
    ends = [idx.tau[k] + jt.groups[k].sizes[0] - 1 for k in range(jt.t)]
    x = [DenseMatrix.from_entries(ring, n, n, {(i, s): 1 for s in starts}) for i in range(n)]
    y = [DenseMatrix.from_entries(ring, n, n, {(e, i): 1 for e in ends}) for i in range(n)]
    sub = [basis_matrix(jt, e) for e in structured_basis(jt)]
    return FrobeniusSystem(ring, n, images, x, y, sub, "Jordan block trace")


def separability_element(jt: JordanType) -> DenseMatrix:
    """All-ones upper-triangular blocks on the first eigenvalue group, zero elsewhere."""
    ring = jt.ring
    gi = block_index(jt).groups[0]
    blocks = []
    for i in gi.blocks():
        lam = gi.lam(i)
        blocks.append(DenseMatrix.from_entries(
            ring, lam, lam, {(r, c): 1 for r in range(lam) for c in range(r, lam)}))
    return embed_psi(jt, 1, block_diag(ring, blocks))


@dataclass
class SeparabilityReport:
    central: bool
    sums_to_identity: bool

    @property
    def passed(self) -> bool:
        return self.central and self.sums_to_identity

    def to_json(self) -> dict:
        return {"passed": self.passed, "commutes_with_subalgebra": self.central,
                "sum_x_d_y_is_identity": self.sums_to_identity}


def check_separability(jt: JordanType, sys: FrobeniusSystem, d: DenseMatrix) -> SeparabilityReport:
    ring, n = jt.ring, jt.n
    ds = _sparse(d)
    central = all(_spmul(ring, ds, b) == _spmul(ring, b, ds)
                  for b in (_sparse(m) for m in sys.subalgebra))
    acc: Sparse = {}
    for x, y in zip(sys.x, sys.y):
        _spadd(ring, acc, _spmul(ring, _spmul(ring, _sparse(x), ds), _sparse(y)))
    return SeparabilityReport(central, acc == {(k, k): 1 for k in range(n)})


def split_predicate(jt: JordanType) -> bool:
    """Split (and semisimple) exactly when every eigenvalue group is a single size-1 block."""
    return all(g.sizes == (1,) for g in jt.groups)


def semisimple_predicate(jt: JordanType) -> bool:
    if not jt.ring.is_field():
        raise ValueError("semisimplicity is decided over a field")
    return split_predicate(jt)


@dataclass
class SplitResult:
    witness: DenseMatrix | None
    predicate: bool
    witness_maps_to_identity: bool | None

    @property
    def agree(self) -> bool:
        return (self.witness is not None) == self.predicate

    def to_json(self) -> dict:
        return {"split": self.witness is not None, "closed_predicate": self.predicate,
                "agree": self.agree,
                "witness": None if self.witness is None else self.witness.to_json(),
                "E_of_witness_is_identity": self.witness_maps_to_identity}


def split_solver(jt: JordanType, sys: FrobeniusSystem | None = None) -> SplitResult:
    """Search for ``z`` commuting with the whole subalgebra and with ``E(z) = I``.

    Unknowns are the ``n^2`` entries of ``z``; the system stacks the
    commutator equations with the trace condition and is solved exactly.
    """
    ring, n = jt.ring, jt.n
    if not ring.is_field():
        raise ValueError("the split solver needs a field")
    sys = sys or jordan_trace_system(jt)
    nn = n * n
    rows = []
    for b in sys.subalgebra:
        bs = _sparse(b)
        # (z b - b z)[r, c] = sum_k z[r,k] b[k,c] - b[r,k] z[k,c]
        eqs: dict[tuple[int, int], dict[int, object]] = {}
        for (k, c), v in bs.items():
            for r in range(n):
                e = eqs.setdefault((r, c), {})
                e[r * n + k] = e.get(r * n + k, 0) + v
        for (r, k), v in bs.items():
            for c in range(n):
                e = eqs.setdefault((r, c), {})
                e[k * n + c] = e.get(k * n + c, 0) - v
        for e in eqs.values():
            row = [0] * (nn + 1)
            for col, v in e.items():
                row[col] = ring.norm(v)
            if any(row):
                rows.append(row)
    # E(z) = I, one equation per entry of the image
    trace_rows = {(r, c): [0] * (nn + 1) for r in range(n) for c in range(n)}
    for (r, c), img in sys.images.items():
        for (a, b), v in img.items():
            trace_rows[(a, b)][r * n + c] = ring.norm(trace_rows[(a, b)][r * n + c] + v)
    for (a, b), row in trace_rows.items():
        row[nn] = 1 if a == b else 0
        rows.append(row)
    echelon, pivots = rref_rows(ring, rows, nn + 1)
    predicate = split_predicate(jt)
    if pivots and pivots[-1] == nn:
        return SplitResult(None, predicate, None)
    z = [0] * nn
    for row, p in zip(echelon, pivots):
        z[p] = row[nn]
    witness = DenseMatrix(ring, [z[r * n:(r + 1) * n] for r in range(n)])
    return SplitResult(witness, predicate,
                       sys.apply(witness) == DenseMatrix.identity(ring, n))
