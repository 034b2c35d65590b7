"""Sequences of partitions and their replay on a second labeling.

A sequence starts at the unit partition and applies, at every level, the
first rule that fires:

    (a) a set refinement that splits a cell or discards a vertex,
        pivoting on the first cell for which it does;
    (b) a vertex refinement on the first singleton cell;
    (c) stop when every cell is a singleton or no vertex is left;
    (d) otherwise a backtracking level: a vertex refinement on the first
        vertex of the cell picked by :func:`select_pivot_cell`.

Replaying the recorded refinements with different pivot vertices at
backtracking levels and comparing traces is how both the automorphism search
and the isomorphism matcher look for compatible sequences.
"""
from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Callable, Iterable, NamedTuple, Sequence

from .graph import Graph
from .partition import (
    Partition,
    PartitionError,
    is_subpartition,
    set_refine,
    signatures,
    unit_partition,
    vertex_refine,
)

SET, VERTEX, NONE = "set", "vertex", "none"


@dataclass(frozen=True)
class LevelRecord:
    partition: Partition
    refinement_kind: str
    pivot_cell_pos: int | None = None
    pivot_vertex: int | None = None
    is_backtracking: bool = False
    # trace and discards of the refinement applied at this level
    trace: tuple = field(default=(), repr=False)
    discards_this_level: tuple[int, ...] = ()
    removed: bool = False

    @property
    def pivot_cell(self) -> tuple[int, ...]:
        return self.partition.cells[self.pivot_cell_pos]


@dataclass(frozen=True)
class PartitionSequence:
    levels: tuple[LevelRecord, ...]
    subpartition_links: dict[int, int] = field(default_factory=dict)

    @property
    def t(self) -> int:
        return len(self.levels) - 1

    @property
    def final(self) -> Partition:
        return self.levels[-1].partition

    @property
    def vertex_order(self) -> tuple[int, ...]:
        return self.order_from(0)

    def order_from(self, level: int) -> tuple[int, ...]:
        """Vertices of level ``level`` in the order the sequence discards them."""
        out = []
        for rec in self.levels[level:]:
            out += rec.discards_this_level
        for cell in self.final.cells:
            out += cell
        return tuple(out)

    def discarded_between(self, k: int, l: int) -> tuple[int, ...]:
        out = []
        for rec in self.levels[k:l]:
            out += rec.discards_this_level
        return tuple(out)

    @property
    def backtracking_levels(self) -> list[int]:
        return [k for k, rec in enumerate(self.levels) if rec.is_backtracking]

    @property
    def remaining_backtracking_levels(self) -> list[int]:
        return [k for k, rec in enumerate(self.levels) if rec.is_backtracking and not rec.removed]

    def with_removed(self, removed: Iterable[int]) -> "PartitionSequence":
        removed = set(removed)
        levels = tuple(
            replace(rec, removed=True) if k in removed else rec for k, rec in enumerate(self.levels)
        )
        return replace(self, levels=levels)


class PivotScore(NamedTuple):
    early_accept: bool
    score: int


def _effective(before: Partition, after: Partition) -> bool:
    return len(after.cells) != len(before.cells) or bool(after.discard_log)


def _set_step(g: Graph, p: Partition) -> tuple[int, Partition] | None:
    for idx in range(len(p.cells)):
        new = set_refine(g, p, idx)
        if _effective(p, new):
            return idx, new
    return None


def _singleton_step(g: Graph, p: Partition) -> tuple[int, Partition] | None:
    for idx, cell in enumerate(p.cells):
        if len(cell) == 1 and g.adj[cell[0], list(p.active)].any():
            return idx, vertex_refine(g, p, idx, cell[0])
    return None


def _forced_steps(g: Graph, p: Partition) -> tuple[Partition, int]:
    """Apply rules (a) and (b) until neither fires; return the partition and discard count."""
    discards = 0
    while True:
        step = _set_step(g, p) or _singleton_step(g, p)
        if step is None:
            return p, discards
        p = step[1]
        discards += len(p.discard_log)


def pivot_scores(g: Graph, p: Partition) -> list[tuple[int, PivotScore]]:
    """Score one candidate cell per distinct (size, available degree) signature.

    Scoring stops at the first candidate whose refinement reaches a
    sub-partition of ``p``.
    """
    sigs = signatures(g, p)
    if sigs is None or any(len(c) == 1 for c in p.cells) or _set_step(g, p) is not None:
        raise PartitionError("pivot selection needs an equitable partition without singletons")
    seen = set()
    out = []
    for idx, cell in enumerate(p.cells):
        if sigs[idx] in seen:
            continue
        seen.add(sigs[idx])
        first = vertex_refine(g, p, idx, cell[0])
        reached, later = _forced_steps(g, first)
        if is_subpartition(reached, p):
            out.append((idx, PivotScore(True, 0)))
            break
        discards = len(first.discard_log) + later
        out.append((idx, PivotScore(False, discards + len(reached.cells))))
    return out


def select_pivot_cell(g: Graph, p: Partition) -> int:
    scores = pivot_scores(g, p)
    if scores[-1][1].early_accept:
        return scores[-1][0]
    best = max(s.score for _, s in scores)
    return min(idx for idx, s in scores if s.score == best)


def generate_sequence(g: Graph, *, links: bool = True) -> PartitionSequence:
    levels = []
    p = unit_partition(g)
    while True:
        step = _set_step(g, p)
        if step is not None:
            idx, new = step
            levels.append(LevelRecord(p, SET, idx, None, False, new.trace, new.discarded))
            p = new
            continue
        step = _singleton_step(g, p)
        if step is not None:
            idx, new = step
            levels.append(LevelRecord(p, VERTEX, idx, p.cells[idx][0], False, new.trace, new.discarded))
            p = new
            continue
        if p.is_discrete():  # includes the empty partition
            levels.append(LevelRecord(p, NONE))
            break
        idx = select_pivot_cell(g, p)
        v = p.cells[idx][0]
        new = vertex_refine(g, p, idx, v)
        levels.append(LevelRecord(p, VERTEX, idx, v, True, new.trace, new.discarded))
        p = new
    seq = PartitionSequence(tuple(levels))
    return compute_subpartition_links(seq) if links else seq


def compute_subpartition_links(seq: PartitionSequence) -> PartitionSequence:
    """Map each backtracking level k to the first later backtracking level
    (or the final level) whose partition is a sub-partition of level k's."""
    out = {}
    for k in seq.backtracking_levels:
        pk = seq.levels[k].partition
        for l in range(k + 1, len(seq.levels)):
            rec = seq.levels[l]
            if (rec.is_backtracking or l == seq.t) and is_subpartition(rec.partition, pk):
                out[k] = l
                break
    return replace(seq, subpartition_links=out)


def discard_groups(seq: PartitionSequence) -> list[tuple[int, ...]]:
    """Vertices dropped together as disconnected from one sub-cell in one step.

    Any permutation inside such a group is an automorphism: its members share
    every code towards earlier-discarded vertices and have none to the rest.
    """
    out = []
    for k, rec in enumerate(seq.levels[:-1]):
        out += seq.levels[k + 1].partition.discard_groups
    return [grp for grp in out if grp]


# --- replay -------------------------------------------------------------------


class SearchStats:
    def __init__(self):
        self.nodes = 0
        self.backtrack_nodes = 0
        self.failures = 0
        self.memo_hits = 0

    def as_dict(self) -> dict[str, int]:
        return dict(vars(self))


class FailureRecord:
    """Append-only memo of (level, stop level, partition, candidate) dead ends.

    The continuation of a replay from a level depends only on the ordered
    partition reached there, so a candidate that failed from one partition
    fails again from the same partition whatever prefix produced it.
    """

    def __init__(self, enabled: bool = True):
        self.enabled = enabled
        self._keys: set = set()

    def __contains__(self, key) -> bool:
        return self.enabled and key in self._keys

    def add(self, key) -> None:
        if self.enabled:
            self._keys.add(key)

    def __len__(self):
        return len(self._keys)


CandidateFilter = Callable[[tuple[int, ...], tuple[int, ...]], Sequence[int]]


class ReplayResult(NamedTuple):
    compatible: bool
    discards: list[tuple[int, ...]] | None  # per level, from the start level
    partitions: list[Partition] | None
    fail_level: int | None


def extend_compatible(
    other: Graph,
    seq: PartitionSequence,
    target: Graph,
    start: int,
    stop: int,
    partition: Partition,
    *,
    forced: int | None = None,
    prefix: tuple[int, ...] = (),
    candidate_filter: CandidateFilter | None = None,
    memo: FailureRecord | None = None,
    stats: SearchStats | None = None,
) -> ReplayResult:
    """Depth-first search for a sequence on ``other`` compatible with ``seq``.

    Starting at level ``start`` from ``partition``, re-apply the recorded
    refinement of every level up to ``stop``. At backtracking levels every
    vertex of the pivot cell is a candidate, except that ``forced`` fixes the
    choice at ``start`` and a removed level only tries its first vertex.
    ``candidate_filter(prefix, cell)`` may thin the candidate list; ``prefix``
    holds the backtracking pivots chosen so far. When ``stop`` is below the
    final level the partition reached there must be compatible with the
    original one.
    """
    stats = stats if stats is not None else SearchStats()
    memo = memo if memo is not None else FailureRecord(enabled=False)
    deepest = [start]

    def finish(part: Partition) -> bool:
        if stop == seq.t:
            return not part.cells
        orig = seq.levels[stop].partition
        if len(part.cells) != len(orig.cells):
            return False
        mine = signatures(other, part)
        return mine is not None and mine == signatures(target, orig)

    def dfs(j: int, part: Partition, chosen: tuple[int, ...]):
        deepest[0] = max(deepest[0], j)
        if j == stop:
            return ([], []) if finish(part) else None
        rec = seq.levels[j]
        stats.nodes += 1
        if rec.refinement_kind == SET:
            new = set_refine(other, part, rec.pivot_cell_pos)
            if new.trace != rec.trace:
                return None
            rest = dfs(j + 1, new, chosen)
            if rest is None:
                return None
            return [new.discarded] + rest[0], [new] + rest[1]

        cell = part.cells[rec.pivot_cell_pos]
        if not rec.is_backtracking:
            candidates = cell
        elif j == start and forced is not None:
            candidates = (forced,)
        elif rec.removed:
            candidates = cell[:1]
        else:
            candidates = cell if candidate_filter is None else candidate_filter(chosen, cell)
            stats.backtrack_nodes += len(candidates)
        for u in candidates:
            key = (j, stop, part.cells, u)
            if key in memo:
                stats.memo_hits += 1
                continue
            new = vertex_refine(other, part, rec.pivot_cell_pos, u)
            if new.trace == rec.trace:
                nxt = chosen + (u,) if rec.is_backtracking else chosen
                rest = dfs(j + 1, new, nxt)
                if rest is not None:
                    return [new.discarded] + rest[0], [new] + rest[1]
            stats.failures += 1
            memo.add(key)
        return None

    found = dfs(start, partition, prefix)
    if found is None:
        return ReplayResult(False, None, None, deepest[0])
    return ReplayResult(True, found[0], found[1], None)


def replay_alternative(
    g: Graph,
    seq: PartitionSequence,
    k: int,
    q: int,
    *,
    stop: int | None = None,
    memo: FailureRecord | None = None,
    candidate_filter: CandidateFilter | None = None,
    stats: SearchStats | None = None,
) -> ReplayResult:
    """Re-run ``seq`` from backtracking level ``k`` with pivot vertex ``q``.

    By default the replay stops at the level linked to ``k`` by
    :func:`compute_subpartition_links`.
    """
    rec = seq.levels[k]
    if not rec.is_backtracking:
        raise PartitionError(f"level {k} is not a backtracking level")
    if q not in rec.pivot_cell or q == rec.pivot_vertex:
        raise PartitionError(f"vertex {q} is not an alternative pivot at level {k}")
    if stop is None:
        stop = seq.subpartition_links[k]
    prefix = tuple(seq.levels[j].pivot_vertex for j in seq.backtracking_levels if j < k)
    return extend_compatible(
        g, seq, g, k, stop, rec.partition,
        forced=q, prefix=prefix, candidate_filter=candidate_filter, memo=memo, stats=stats,
    )
