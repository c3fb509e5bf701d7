"""Jordan block types and the index bookkeeping that every construction uses.

Algebraic indices follow the mathematical convention and are 1-based:
eigenvalue groups ``grp``, Jordan blocks ``i, j`` within a group and levels
``p``.  Within a group the blocks are laid out in the order of decreasing
size, each size repeated by its multiplicity.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .arith import PRIME_FIELD, QQ, RingSpec
from .linalg import (DenseMatrix, ShapeError, charpoly_and_rational_roots,
                     prime_field_roots, rank)


class NotJordanSimilar(ValueError):
    pass


@dataclass(frozen=True)
class EigenGroup:
    """All Jordan blocks for one eigenvalue: ``(size, multiplicity)`` pairs."""

    eigenvalue: object
    blocks: tuple[tuple[int, int], ...]

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(s for s, _ in self.blocks)

    @property
    def mults(self) -> tuple[int, ...]:
        return tuple(b for _, b in self.blocks)

    @property
    def s(self) -> int:
        """Number of distinct block sizes."""
        return len(self.blocks)

    @property
    def n(self) -> int:
        return sum(s * b for s, b in self.blocks)

    @property
    def num_blocks(self) -> int:
        return sum(self.mults)


def _normalize_blocks(blocks) -> tuple[tuple[int, int], ...]:
    merged: dict[int, int] = {}
    for item in blocks:
        size, mult = (item, 1) if isinstance(item, int) else item
        if not isinstance(size, int) or not isinstance(mult, int) or isinstance(size, bool):
            raise ValueError(f"block sizes and multiplicities must be integers: {item!r}")
        if size < 1 or mult < 1:
            raise ValueError(f"block sizes and multiplicities must be positive: {item!r}")
        merged[size] = merged.get(size, 0) + mult
    if not merged:
        raise ValueError("an eigenvalue group needs at least one block")
    return tuple(sorted(merged.items(), reverse=True))


@dataclass(frozen=True)
class JordanType:
    """Block type of a Jordan-block matrix over ``ring``.

    ``groups`` takes ``(eigenvalue, blocks)`` pairs where ``blocks`` lists
    ``(size, mult)`` pairs or bare sizes.  Equal sizes are merged and sizes
    sorted decreasingly, so any block order describes the same algebra.
    """

    ring: RingSpec
    groups: tuple[EigenGroup, ...]

    def __init__(self, ring: RingSpec, groups: Iterable):
        normalized = []
        for grp in groups:
            if isinstance(grp, EigenGroup):
                eig, blocks = grp.eigenvalue, grp.blocks
            else:
                eig, blocks = grp
            normalized.append(EigenGroup(ring.coerce(eig), _normalize_blocks(blocks)))
        if not normalized:
            raise ValueError("a Jordan type needs at least one eigenvalue group")
        eigs = [g.eigenvalue for g in normalized]
        if len(set(eigs)) != len(eigs):
            raise ValueError(f"eigenvalues must be pairwise distinct, got {eigs}")
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "groups", tuple(normalized))

    @classmethod
    def single(cls, sizes: Sequence[int], mults: Sequence[int] | None = None,
               eigenvalue=0, ring: RingSpec = QQ) -> "JordanType":
        mults = [1] * len(sizes) if mults is None else list(mults)
        if len(mults) != len(sizes):
            raise ValueError("sizes and mults differ in length")
        return cls(ring, [(eigenvalue, list(zip(sizes, mults)))])

    @property
    def n(self) -> int:
        return sum(g.n for g in self.groups)

    @property
    def t(self) -> int:
        return len(self.groups)

    def with_ring(self, ring: RingSpec) -> "JordanType":
        return JordanType(ring, [(g.eigenvalue, g.blocks) for g in self.groups])

    def restrict(self, grp: int) -> "JordanType":
        g = self.groups[grp - 1]
        return JordanType(self.ring, [(g.eigenvalue, g.blocks)])

    def to_json(self) -> list[dict]:
        return [{"eigenvalue": self.ring.format(g.eigenvalue),
                 "blocks": [{"size": s, "mult": b} for s, b in g.blocks]}
                for g in self.groups]

    @classmethod
    def from_json(cls, ring: RingSpec, obj) -> "JordanType":
        if not isinstance(obj, list):
            raise ValueError("jordan_type must be a list of eigenvalue groups")
        groups = []
        for grp in obj:
            if not isinstance(grp, dict) or "eigenvalue" not in grp or "blocks" not in grp:
                raise ValueError("each group needs 'eigenvalue' and 'blocks'")
            blocks = []
            for b in grp["blocks"]:
                if not isinstance(b, dict) or "size" not in b:
                    raise ValueError("each block needs a 'size'")
                blocks.append((b["size"], b.get("mult", 1)))
            groups.append((grp["eigenvalue"], blocks))
        return cls(ring, groups)

    def __str__(self):
        parts = []
        for g in self.groups:
            blocks = ",".join(f"{s}^{b}" if b > 1 else str(s) for s, b in g.blocks)
            parts.append(f"{self.ring.format(g.eigenvalue)}:({blocks})")
        return f"{{{'; '.join(parts)}}} over {self.ring}"


@dataclass(frozen=True)
class GroupIndex:
    """Combinatorics of one eigenvalue group (all blocks share an eigenvalue).

    Lists indexed by a block number ``i`` carry a dummy entry at 0 so that
    ``g[i]`` reads as ``g(i)``.
    """

    sizes: tuple[int, ...]
    mults: tuple[int, ...]
    m: tuple[int, ...] = field(init=False)
    g: tuple[int, ...] = field(init=False)
    h: tuple[int, ...] = field(init=False)
    end: tuple[int, ...] = field(init=False)

    def __post_init__(self):
        m = [0]
        for b in self.mults:
            m.append(m[-1] + b)
        g, h, end = [0], [0], [0]
        edge = 0
        for u, (size, b) in enumerate(zip(self.sizes, self.mults), start=1):
            for k in range(1, b + 1):
                g.append(u)
                h.append(k)
                edge += size
                end.append(edge)
        object.__setattr__(self, "m", tuple(m))
        object.__setattr__(self, "g", tuple(g))
        object.__setattr__(self, "h", tuple(h))
        object.__setattr__(self, "end", tuple(end))

    @property
    def s(self) -> int:
        return len(self.sizes)

    @property
    def ms(self) -> int:
        """Total number of Jordan blocks."""
        return self.m[-1]

    @property
    def n(self) -> int:
        return self.end[-1]

    @property
    def lam1(self) -> int:
        return self.sizes[0]

    def lam(self, i: int) -> int:
        """Size of the ``i``-th Jordan block, ``lambda_{g(i)}``."""
        return self.sizes[self.g[i] - 1]

    def start(self, i: int) -> int:
        """First row (1-based, within the group) of block ``i``."""
        return self.end[i] - self.lam(i) + 1

    def theta(self, i: int, j: int) -> int:
        return min(self.lam(i), self.lam(j))

    def rho(self, i: int, j: int) -> int:
        return self.lam(i) + self.lam(j) - self.lam1

    def l(self, p: int) -> int:
        """Largest ``u`` with ``lambda_u >= p``."""
        if not 1 <= p <= self.lam1:
            raise ValueError(f"level {p} outside [1, {self.lam1}]")
        return max(u for u, size in enumerate(self.sizes, start=1) if size >= p)

    def M(self, p: int) -> range:
        return range(1, self.m[self.l(p)] + 1)

    def blocks(self) -> range:
        return range(1, self.ms + 1)


@dataclass(frozen=True)
class BlockIndex:
    groups: tuple[GroupIndex, ...]
    tau: tuple[int, ...]

    @property
    def n(self) -> int:
        return self.tau[-1]

    def n_group(self, grp: int) -> int:
        return self.groups[grp - 1].n

    def offset(self, grp: int, i: int) -> int:
        """Global right edge (1-based) of block ``i`` of group ``grp``."""
        return self.tau[grp - 1] + self.groups[grp - 1].end[i]

    def first_row(self, grp: int, i: int) -> int:
        return self.tau[grp - 1] + self.groups[grp - 1].start(i)


@lru_cache(maxsize=512)
def block_index(jt: JordanType) -> BlockIndex:
    groups = tuple(GroupIndex(g.sizes, g.mults) for g in jt.groups)
    tau = [0]
    for gi in groups:
        tau.append(tau[-1] + gi.n)
    return BlockIndex(groups, tuple(tau))


def assemble_matrix(jt: JordanType) -> DenseMatrix:
    """The block-diagonal Jordan matrix with the groups in the given order."""
    ring = jt.ring
    entries = {}
    pos = 0
    for grp in jt.groups:
        for size, mult in grp.blocks:
            for _ in range(mult):
                for k in range(size):
                    entries[(pos + k, pos + k)] = grp.eigenvalue
                    if k + 1 < size:
                        entries[(pos + k, pos + k + 1)] = 1
                pos += size
    return DenseMatrix.from_entries(ring, pos, pos, entries)


def _diag_ones(ring, n, first, last) -> DenseMatrix:
    return DenseMatrix.from_entries(ring, n, n, {(r - 1, r - 1): 1 for r in range(first, last + 1)})


def idempotent_f(jt: JordanType, i: int, group: int = 1) -> DenseMatrix:
    """Identity on the rows of Jordan block ``i`` of eigenvalue group ``group``."""
    idx = block_index(jt)
    if not 1 <= group <= jt.t or not 1 <= i <= idx.groups[group - 1].ms:
        raise IndexError(f"no block {i} in group {group}")
    return _diag_ones(jt.ring, jt.n, idx.first_row(group, i), idx.offset(group, i))


def idempotent_eps(jt: JordanType, i: int) -> DenseMatrix:
    """Central idempotent cutting out eigenvalue group ``i``."""
    idx = block_index(jt)
    if not 1 <= i <= jt.t:
        raise IndexError(f"no eigenvalue group {i}")
    return _diag_ones(jt.ring, jt.n, idx.tau[i - 1] + 1, idx.tau[i])


def embed_phi(jt: JordanType, i: int, j: int, b: DenseMatrix, group: int = 1) -> DenseMatrix:
    """Place ``b`` at block position ``(i, j)`` of group ``group``, zeros elsewhere."""
    idx = block_index(jt)
    gi = idx.groups[group - 1]
    if b.shape != (gi.lam(i), gi.lam(j)):
        raise ShapeError(f"block ({i},{j}) has shape {(gi.lam(i), gi.lam(j))}, got {b.shape}")
    r0 = idx.first_row(group, i) - 1
    c0 = idx.first_row(group, j) - 1
    return DenseMatrix.from_entries(jt.ring, jt.n, jt.n,
                                    {(r0 + r, c0 + c): x for r, c, x in b.nonzero()})


def embed_psi(jt: JordanType, grp: int, x: DenseMatrix) -> DenseMatrix:
    """Place ``x`` on the diagonal block of eigenvalue group ``grp``."""
    idx = block_index(jt)
    ng = idx.n_group(grp)
    if x.shape != (ng, ng):
        raise ShapeError(f"group {grp} has size {ng}, got {x.shape}")
    o = idx.tau[grp - 1]
    return DenseMatrix.from_entries(jt.ring, jt.n, jt.n,
                                    {(o + r, o + c): v for r, c, v in x.nonzero()})


def jordan_type_of_rational(c: DenseMatrix) -> JordanType:
    """Recover the block type of a square matrix whose spectrum lies in the ring.

    Block sizes come from the rank sequence of ``(c - rI)^k``: the number of
    blocks of size at least ``k`` is ``rank((c-rI)^(k-1)) - rank((c-rI)^k)``.
    """
    if not c.is_square():
        raise ShapeError("need a square matrix")
    ring = c.ring
    n = c.rows
    if ring.kind == PRIME_FIELD:
        roots = prime_field_roots(c)
    else:
        _, roots = charpoly_and_rational_roots(c)
    if sum(m for _, m in roots) != n:
        raise NotJordanSimilar("not Jordan-similar over this ring; supply the block type explicitly")
    ident = DenseMatrix.identity(ring, n)
    groups = []
    for r, mult in roots:
        shifted = c - ident.scale(r)
        ranks = [n]
        power = ident
        for _ in range(mult):
            power = power @ shifted
            ranks.append(rank(power))
        at_least = [ranks[k - 1] - ranks[k] for k in range(1, mult + 1)] + [0]
        blocks = [(k, at_least[k - 1] - at_least[k]) for k in range(1, mult + 1)
                  if at_least[k - 1] - at_least[k] > 0]
        groups.append((r, blocks))
    return JordanType(ring, groups)


# -- enumeration and sampling --------------------------------------------------

def partitions(n: int, largest: int | None = None) -> Iterator[tuple[int, ...]]:
    """Partitions of ``n`` as non-increasing tuples."""
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for k in range(min(n, largest), 0, -1):
        for rest in partitions(n - k, k):
            yield (k,) + rest


def _blocks_of(partition: tuple[int, ...]) -> list[tuple[int, int]]:
    counts: dict[int, int] = {}
    for k in partition:
        counts[k] = counts.get(k, 0) + 1
    return sorted(counts.items(), reverse=True)


def all_jordan_types(n: int, ring: RingSpec = QQ) -> list[JordanType]:
    """Every block type of total size ``n`` up to relabelling eigenvalues.

    Eigenvalues are assigned ``0, 1, 2, ...`` in group order.
    """
    keyed = []

    def rec(remaining, bound, acc):
        if remaining == 0:
            keyed.append(list(acc))
            return
        for size in range(remaining, 0, -1):
            for part in partitions(size):
                key = (size, part)
                if bound is not None and key > bound:
                    continue
                rec(remaining - size, key, acc + [part])

    rec(n, None, [])
    out = []
    for parts in keyed:
        out.append(JordanType(ring, [(ring.from_int(k), _blocks_of(p)) for k, p in enumerate(parts)]))
    return out


def random_jordan_type(rng: random.Random, ring: RingSpec = QQ, max_n: int = 8,
                       max_groups: int = 3) -> JordanType:
    n = rng.randint(1, max_n)
    t = rng.randint(1, min(max_groups, n))
    cuts = sorted(rng.sample(range(1, n), t - 1))
    sizes = [b - a for a, b in zip([0] + cuts, cuts + [n])]
    if ring.kind == PRIME_FIELD:
        eigs = rng.sample(range(ring.p), t)
    else:
        eigs = rng.sample(range(-3, 4), t)
    groups = []
    for eig, size in zip(eigs, sizes):
        parts = list(partitions(size))
        groups.append((eig, _blocks_of(rng.choice(parts))))
    return JordanType(ring, groups)
