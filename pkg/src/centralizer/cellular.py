"""Cell datum of a Jordan centralizer and an executable check of the cellular axioms.

The cell basis is indexed by a level ``p`` (the poset, ordered ``1 < 2 < ...``
within each eigenvalue group) and a pair of blocks in ``M(p)``.  It coincides
with the structured basis of :mod:`centralizer.core`, which is verified on
construction.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .arith import QQ
from .core import (AlgebraElement, BasisElement, basis_matrix, multiply_basis,
                   structured_basis)
from .jordan import JordanType, block_index
from .linalg import DenseMatrix, rank


@dataclass(frozen=True)
class CellDatum:
    jt: JordanType
    posets: tuple[tuple[int, ...], ...]
    index_sets: tuple[dict, ...]
    basis: tuple[BasisElement, ...]
    involution: tuple[int, ...]

    def position(self, e: BasisElement) -> int:
        return self._positions()[e]

    def _positions(self) -> dict:
        cache = self.__dict__.get("_pos")
        if cache is None:
            cache = {e: k for k, e in enumerate(self.basis)}
            object.__setattr__(self, "_pos", cache)
        return cache

    def iota(self, e: BasisElement) -> BasisElement:
        return self.basis[self.involution[self.position(e)]]

    def M(self, group: int, p: int) -> tuple[int, ...]:
        return self.index_sets[group - 1][p]

    def with_involution(self, perm) -> "CellDatum":
        """Copy with a replaced involution table (used for negative controls)."""
        return replace(self, involution=tuple(perm))

    def to_json(self) -> dict:
        return {
            "groups": [
                {"poset": list(P),
                 "index_sets": {str(p): list(ms) for p, ms in sorted(sets.items())}}
                for P, sets in zip(self.posets, self.index_sets)
            ],
            "cell_basis_size": len(self.basis),
        }


def build_cell_datum(jt: JordanType) -> CellDatum:
    idx = block_index(jt)
    posets, index_sets, cells = [], [], []
    for grp, gi in enumerate(idx.groups, start=1):
        posets.append(tuple(range(1, gi.lam1 + 1)))
        sets = {p: tuple(gi.M(p)) for p in range(1, gi.lam1 + 1)}
        index_sets.append(sets)
        for p, ms in sets.items():
            cells.extend(BasisElement(grp, i, j, p) for i in ms for j in ms)
    cells.sort()
    if cells != structured_basis(jt):
        raise AssertionError("cell basis differs from the structured basis")
    pos = {e: k for k, e in enumerate(cells)}
    invol = tuple(pos[BasisElement(e.group, e.j, e.i, e.p)] for e in cells)
    return CellDatum(jt, tuple(posets), tuple(index_sets), tuple(cells), invol)


def involution_apply(d: CellDatum, a: AlgebraElement) -> AlgebraElement:
    if a.jt != d.jt:
        raise ValueError("element belongs to a different algebra")
    return AlgebraElement(d.jt, {d.iota(e): c for e, c in a.coeffs.items()})


def product_star(d: CellDatum, q: int, u: int, v: int, p: int, i: int, j: int,
                 group: int = 1) -> BasisElement | None:
    """``C^q_uv C^p_ij`` by the cellular product rule; ``None`` for zero."""
    mq, mp = d.M(group, q), d.M(group, p)
    if u not in mq or v not in mq:
        raise ValueError(f"({u}, {v}) not in M({q})")
    if i not in mp or j not in mp:
        raise ValueError(f"({i}, {j}) not in M({p})")
    if v != i:
        return None
    level = p + q - block_index(d.jt).groups[group - 1].lam(v)
    if level < 1:
        return None
    return BasisElement(group, u, j, level)


def star_agrees(d: CellDatum) -> tuple[bool, str | None]:
    """Compare the cellular product rule with :func:`multiply_basis` on all admissible quadruples."""
    jt = d.jt
    for grp, sets in enumerate(d.index_sets, start=1):
        for q, mq in sets.items():
            for p, mp in sets.items():
                for u in mq:
                    for v in mq:
                        for i in mp:
                            for j in mp:
                                got = product_star(d, q, u, v, p, i, j, grp)
                                want = multiply_basis(jt, BasisElement(grp, u, v, q),
                                                      BasisElement(grp, i, j, p))
                                if got != want:
                                    return False, f"C^{q}_{u},{v} C^{p}_{i},{j}: {got} vs {want}"
    return True, None


@dataclass
class CellularityReport:
    c1: bool = True
    c2: bool = True
    c3: bool = True
    counterexample: str | None = None
    failed_axiom: str | None = None

    @property
    def passed(self) -> bool:
        return self.c1 and self.c2 and self.c3

    def _fail(self, axiom: str, msg: str):
        setattr(self, axiom.lower(), False)
        if self.failed_axiom is None:
            self.failed_axiom = axiom
            self.counterexample = msg

    def to_json(self) -> dict:
        return {"passed": self.passed, "C1": self.c1, "C2": self.c2, "C3": self.c3,
                "failed_axiom": self.failed_axiom, "counterexample": self.counterexample}


def _check_c1(d: CellDatum, report: CellularityReport) -> None:
    jt = d.jt
    if len(d.basis) != len(set(d.basis)) or set(d.basis) != set(structured_basis(jt)):
        report._fail("C1", "cell basis does not match the structured basis as a set")
        return
    # independence is certified over Q even for Z (Z embeds in Q)
    field_jt = jt if jt.ring.is_field() else jt.with_ring(QQ)
    rows = [basis_matrix(field_jt, e).flat() for e in d.basis]
    if rank(DenseMatrix(field_jt.ring, rows)) != len(d.basis):
        report._fail("C1", "cell basis matrices are linearly dependent")


def _check_c2(d: CellDatum, report: CellularityReport) -> None:
    n = len(d.basis)
    inv = d.involution
    if sorted(inv) != list(range(n)):
        report._fail("C2", "involution table is not a permutation")
        return
    for k in range(n):
        if inv[inv[k]] != k:
            report._fail("C2", f"iota has order > 2 at {d.basis[k]}")
            return
        e, f = d.basis[k], d.basis[inv[k]]
        if (f.group, f.i, f.j, f.p) != (e.group, e.j, e.i, e.p):
            report._fail("C2", f"iota({e}) = {f}, expected the transposed index")
            return
    jt = d.jt
    for x in d.basis:
        for y in d.basis:
            xy = multiply_basis(jt, x, y)
            lhs = None if xy is None else d.iota(xy)
            rhs = multiply_basis(jt, d.iota(y), d.iota(x))
            if lhs != rhs:
                report._fail("C2", f"iota({x}*{y}) = {lhs} but iota({y})*iota({x}) = {rhs}")
                return


def _check_c3(d: CellDatum, report: CellularityReport) -> None:
    jt = d.jt
    for a in d.basis:
        grp = a.group
        sets = d.index_sets[grp - 1]
        for p, ms in sets.items():
            for i in ms:
                leading = None
                for j in ms:
                    prod = multiply_basis(jt, a, BasisElement(grp, i, j, p))
                    # leading part: coefficients of C^p_{u' j} for u' in M(p)
                    coeffs = {}
                    if prod is not None:
                        if prod.group != grp or prod.p > p:
                            report._fail("C3", f"{a}*C^{p}_{i},{j} = {prod} climbs above level {p}")
                            return
                        if prod.p == p:
                            if prod.j != j:
                                report._fail("C3", f"{a}*C^{p}_{i},{j} = {prod} changes column")
                                return
                            coeffs[prod.i] = 1
                    if leading is None:
                        leading = coeffs
                    elif coeffs != leading:
                        report._fail("C3", f"leading coefficients of {a}*C^{p}_{i},j depend on j")
                        return


def check_cellularity(d: CellDatum) -> CellularityReport:
    report = CellularityReport()
    _check_c1(d, report)
    _check_c2(d, report)
    _check_c3(d, report)
    return report


@dataclass
class CellChain:
    surviving_span: list[tuple[int, int]]
    surviving_formula: list[tuple[int, int]]
    count: int
    agree: bool

    def to_json(self) -> dict:
        return {"surviving_levels": [{"group": g, "p": p} for g, p in self.surviving_span],
                "count": self.count, "agrees_with_criterion": self.agree}


def _level_survives(d: CellDatum, grp: int, p: int) -> bool:
    """Does some product of two level-``p`` cells leave the span of lower levels?

    Products are formed as matrices and read back in cell coordinates.
    """
    jt = d.jt
    cells = [e for e in d.basis if e.group == grp and e.p == p]
    mats = {e: basis_matrix(jt, e) for e in cells}
    for x in cells:
        for y in cells:
            prod = AlgebraElement.from_matrix(jt, mats[x] @ mats[y])
            if any(e.group == grp and e.p >= p for e in prod.coeffs):
                return True
    return False


def cell_chain_simples(d: CellDatum) -> CellChain:
    if not d.jt.ring.is_field():
        raise ValueError("simple modules are counted over a field")
    idx = block_index(d.jt)
    span, formula = [], []
    for grp, gi in enumerate(idx.groups, start=1):
        for p in d.posets[grp - 1]:
            if _level_survives(d, grp, p):
                span.append((grp, p))
            if p == gi.sizes[gi.l(p) - 1]:
                formula.append((grp, p))
    return CellChain(span, formula, len(span), span == formula)


@dataclass
class QuasiHereditary:
    value: bool
    failing_group: int | None
    witness: str
    cell_chain_agrees: bool | None = None

    def to_json(self) -> dict:
        return {"quasi_hereditary": self.value, "failing_group": self.failing_group,
                "witness": self.witness, "cell_chain_agrees": self.cell_chain_agrees}


def is_quasi_hereditary(jt: JordanType, d: CellDatum | None = None) -> QuasiHereditary:
    """Quasi-hereditary iff the largest block size equals the number of sizes, per group.

    When a cell datum is supplied the answer is compared with the cell chain:
    the criterion should hold exactly when every level survives.
    """
    if not jt.ring.is_field():
        raise ValueError("quasi-heredity is decided over a field")
    result = QuasiHereditary(True, None, "largest block size equals number of sizes in every group")
    for k, g in enumerate(jt.groups, start=1):
        if g.sizes[0] != g.s:
            result = QuasiHereditary(False, k, f"group {k}: largest size {g.sizes[0]} != {g.s} sizes")
            break
    if d is not None:
        chain = cell_chain_simples(d)
        all_survive = chain.count == sum(len(P) for P in d.posets)
        result.cell_chain_agrees = all_survive == result.value and chain.agree
    return result
