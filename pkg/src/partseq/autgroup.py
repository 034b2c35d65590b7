"""Automorphism group search over the backtracking levels of a sequence.

Levels are processed from the last backtracking level to the first. At level
``k`` with pivot ``p`` every vertex ``q`` of the pivot cell that is not yet
known to share ``p``'s orbit is tried as an alternative pivot. The replay only
has to reach the sub-partition level linked to ``k``; the generator is then
completed by :func:`compute_subpartition_mapping` instead of replaying the
rest of the sequence.

The group order is the product of the orbit lengths of the pivots along the
stabilizer chain, times ``m!`` for every group of ``m`` vertices that a
refinement dropped together as disconnected from one cell.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import factorial, prod
from typing import Sequence

from .graph import Graph, is_automorphism
from .sequence import (
    FailureRecord,
    PartitionSequence,
    SearchStats,
    discard_groups,
    generate_sequence,
    replay_alternative,
)


class UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x: int, y: int) -> bool:
        x, y = self.find(x), self.find(y)
        if x == y:
            return False
        if y < x:
            x, y = y, x
        self.parent[y] = x
        return True

    def add_permutation(self, perm: Sequence[int]) -> None:
        for v, w in enumerate(perm):
            self.union(v, w)

    def classes(self) -> list[list[int]]:
        out: dict[int, list[int]] = {}
        for v in range(len(self.parent)):
            out.setdefault(self.find(v), []).append(v)
        return sorted(out.values())


def orbits_of(n: int, generators) -> list[list[int]]:
    uf = UnionFind(n)
    for perm in generators:
        uf.add_permutation(perm)
    return uf.classes()


@dataclass(frozen=True)
class SubpartitionContext:
    """Discard lists of the original and the alternative between two levels."""

    k: int
    l: int
    discarded: tuple[int, ...]
    alt_discarded: tuple[int, ...]
    survivors: tuple[int, ...]
    alt_survivors: frozenset[int]

    @property
    def common_discarded(self) -> frozenset[int]:
        return frozenset(self.discarded) & frozenset(self.alt_discarded)

    @property
    def only_original(self) -> frozenset[int]:
        return frozenset(self.discarded) - self.common_discarded

    @property
    def only_alternative(self) -> frozenset[int]:
        return frozenset(self.alt_discarded) - self.common_discarded

    @property
    def common_survivors(self) -> frozenset[int]:
        return frozenset(self.survivors) & self.alt_survivors


def compute_subpartition_mapping(ctx: SubpartitionContext) -> list[int]:
    """Order of the alternative's surviving vertices matching ``survivors``.

    Start from ``survivors`` and replace every vertex discarded only by the
    alternative with a vertex discarded only by the original, found by
    following the pairing of the two discard lists backwards through the
    vertices both discarded.
    """
    if len(ctx.discarded) != len(ctx.alt_discarded):
        raise ValueError("discard lists differ in length")
    common = ctx.common_discarded
    w = list(ctx.survivors)
    pos = {v: i for i, v in enumerate(w)}
    alt_index = {v: i for i, v in enumerate(ctx.alt_discarded)}
    for i, c in enumerate(ctx.alt_discarded):
        if c in common:
            continue
        j = i
        for _ in range(len(ctx.discarded) + 1):
            if ctx.discarded[j] not in common:
                break
            j = alt_index[ctx.discarded[j]]
        else:
            raise ValueError("chain through the common discards does not terminate")
        if c not in pos:
            raise ValueError(f"vertex {c} is not in the surviving vertex order")
        w[pos[c]] = ctx.discarded[j]
    return w


def subpartition_context(seq: PartitionSequence, k: int, l: int, alt_discards) -> SubpartitionContext:
    discarded = seq.discarded_between(k, l)
    alt_discarded = tuple(v for d in alt_discards for v in d)
    alt_survivors = frozenset(seq.order_from(k)) - frozenset(alt_discarded)
    return SubpartitionContext(k, l, discarded, alt_discarded, seq.order_from(l), alt_survivors)


def infer_generator(g: Graph, seq: PartitionSequence, k: int, alt_discards, l: int | None = None) -> list[int]:
    """Automorphism carrying the original sequence onto a compatible replay.

    Identity on vertices discarded before level ``k``. Vertices discarded
    between ``k`` and ``l`` go to the replay's discards in the same order, and
    the survivors at ``l`` follow :func:`compute_subpartition_mapping`.
    """
    if l is None:
        l = k + len(alt_discards)
    ctx = subpartition_context(seq, k, l, alt_discards)
    perm = list(range(g.n))
    for e, e_alt in zip(ctx.discarded, ctx.alt_discarded):
        perm[e] = e_alt
    for v, w in zip(ctx.survivors, compute_subpartition_mapping(ctx)):
        perm[v] = w
    if not is_automorphism(g, perm):
        raise AssertionError(f"inferred map at levels {k}..{l} is not an automorphism: {perm}")
    return perm


@dataclass
class AutGroupResult:
    n: int
    generators: list[list[int]]
    orbit_partition: list[list[int]]
    order: int
    level_equivalents: dict[int, frozenset[int]]
    # per generator: ("discard",) or ("search", k, l)
    provenance: list[tuple] = field(default_factory=list)
    stats: dict[str, int] = field(default_factory=dict)

    @property
    def orbits(self) -> list[list[int]]:
        return self.orbit_partition


def _stabilizer_filter(generators: list[list[int]], n: int):
    """Candidate filter keeping one vertex per orbit of the known generators
    that fix every pivot chosen so far."""

    def keep(chosen, cell):
        fixing = [p for p in generators if all(p[v] == v for v in chosen)]
        if not fixing:
            return cell
        uf = UnionFind(n)
        for perm in fixing:
            uf.add_permutation(perm)
        seen, out = set(), []
        for v in cell:
            r = uf.find(v)
            if r not in seen:
                seen.add(r)
                out.append(v)
        return out

    return keep


def search_automorphisms(
    g: Graph, seq: PartitionSequence, *, use_memo: bool = True
) -> tuple[AutGroupResult, PartitionSequence]:
    n = g.n
    uf = UnionFind(n)
    generators: list[list[int]] = []
    provenance: list[tuple] = []
    stats = SearchStats()
    memo = FailureRecord(enabled=use_memo)
    truncated = 0

    order = 1
    for grp in discard_groups(seq):
        order *= factorial(len(grp))
        for v in grp[1:]:
            perm = list(range(n))
            perm[grp[0]], perm[v] = v, grp[0]
            generators.append(perm)
            provenance.append(("discard",))
            uf.union(grp[0], v)

    equivalents: dict[int, frozenset[int]] = {}
    removed = []
    for k in reversed(seq.backtracking_levels):
        rec = seq.levels[k]
        p = rec.pivot_vertex
        l = seq.subpartition_links[k]
        failed: list[int] = []
        for q in rec.pivot_cell:
            if q == p or uf.find(q) == uf.find(p):
                continue
            if any(uf.find(q) == uf.find(f) for f in failed):
                continue
            res = replay_alternative(
                g, seq, k, q, stop=l, memo=memo,
                candidate_filter=_stabilizer_filter(generators, n), stats=stats,
            )
            if not res.compatible:
                failed.append(q)
                continue
            perm = infer_generator(g, seq, k, res.discards, l)
            generators.append(perm)
            provenance.append(("search", k, l))
            truncated += l < seq.t
            uf.add_permutation(perm)
        eq = frozenset(v for v in rec.pivot_cell if uf.find(v) == uf.find(p))
        equivalents[k] = eq
        order *= len(eq)
        if len(eq) == len(rec.pivot_cell):
            seq = seq.with_removed([k])
            removed.append(k)

    info = stats.as_dict()
    info.update(
        generators=len(generators),
        truncated_generators=truncated,
        backtracking_levels=len(seq.backtracking_levels),
        removed_levels=len(removed),
        memo_size=len(memo),
    )
    result = AutGroupResult(n, generators, uf.classes(), order, equivalents, provenance, info)
    return result, seq


def automorphism_group(g: Graph, *, use_memo: bool = True) -> AutGroupResult:
    return search_automorphisms(g, generate_sequence(g), use_memo=use_memo)[0]


def group_order(result: AutGroupResult, seq: PartitionSequence | None = None) -> int:
    """Orbit lengths along the stabilizer chain times the discard-group factorials."""
    levels = prod(len(eq) for eq in result.level_equivalents.values())
    if seq is None:
        return result.order
    return levels * prod(factorial(len(grp)) for grp in discard_groups(seq))


def orbits(result: AutGroupResult) -> list[list[int]]:
    return orbits_of(result.n, result.generators)
