"""Isomorphism testing by matching sequences of partitions."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .autgroup import AutGroupResult, _stabilizer_filter, search_automorphisms
from .graph import Graph, invert_permutation, is_isomorphism
from .partition import unit_partition
from .sequence import FailureRecord, PartitionSequence, SearchStats, extend_compatible, generate_sequence

ISOMORPHIC, NON_ISOMORPHIC = "isomorphic", "non_isomorphic"


@dataclass
class IsoOutcome:
    verdict: str
    mapping: list[int] | None = None
    stats: dict = field(default_factory=dict)

    @property
    def isomorphic(self) -> bool:
        return self.verdict == ISOMORPHIC


@dataclass
class Analysis:
    """A graph with its reduced sequence and automorphism group."""

    graph: Graph
    seq: PartitionSequence
    aut: AutGroupResult

    @classmethod
    def of(cls, g: Graph, *, use_memo: bool = True) -> "Analysis":
        aut, seq = search_automorphisms(g, generate_sequence(g), use_memo=use_memo)
        return cls(g, seq, aut)

    @property
    def remaining(self) -> int:
        return len(self.seq.remaining_backtracking_levels)


def quick_reject(g: Graph, h: Graph) -> str | None:
    if g.n != h.n:
        return "vertex count"
    if g.code_counts() != h.code_counts():
        return "adjacency code counts"
    if Counter(g.degree_triples()) != Counter(h.degree_triples()):
        return "degree multiset"
    return None


def match_sequences(
    target: Analysis,
    other: Graph,
    other_aut: AutGroupResult | None = None,
    *,
    use_memo: bool = True,
    stats: SearchStats | None = None,
) -> list[int] | None:
    """Find a sequence on ``other`` compatible with the target's.

    Returns the map target vertex -> other vertex read off the two discard
    orders, or None.
    """
    g, seq = target.graph, target.seq
    if g.n != other.n:
        return None
    stats = stats if stats is not None else SearchStats()
    filt = _stabilizer_filter(other_aut.generators, other.n) if other_aut is not None else None
    res = extend_compatible(
        other, seq, g, 0, seq.t, unit_partition(other),
        candidate_filter=filt, memo=FailureRecord(enabled=use_memo), stats=stats,
    )
    if not res.compatible:
        return None
    mapping = [0] * g.n
    for a, b in zip(seq.vertex_order, (v for d in res.discards for v in d)):
        mapping[a] = b
    if not is_isomorphism(g, other, mapping):
        raise AssertionError("compatible sequences produced a non-isomorphism")
    return mapping


def are_isomorphic(g: Graph, h: Graph, *, use_memo: bool = True) -> IsoOutcome:
    reason = quick_reject(g, h)
    if reason is not None:
        return IsoOutcome(NON_ISOMORPHIC, None, {"rejected_by": reason})
    if g.n == 0:
        return IsoOutcome(ISOMORPHIC, [], {})

    ga = Analysis.of(g, use_memo=use_memo)
    ha = None
    target, other_graph, other_aut, swapped = ga, h, None, False
    if ga.remaining:
        ha = Analysis.of(h, use_memo=use_memo)
        other_aut = ha.aut
        if ha.remaining < ga.remaining:
            target, other_graph, other_aut, swapped = ha, g, ga.aut, True

    stats = SearchStats()
    mapping = match_sequences(target, other_graph, other_aut, use_memo=use_memo, stats=stats)
    info = {
        "target": "second" if swapped else "first",
        "target_backtracking_points": target.remaining,
        "match_nodes": stats.nodes,
        "match_backtrack_nodes": stats.backtrack_nodes,
        "match_failures": stats.failures,
        "sequence_for_second": ha is not None,
    }
    if mapping is None:
        return IsoOutcome(NON_ISOMORPHIC, None, info)
    if swapped:
        mapping = invert_permutation(mapping)
    return IsoOutcome(ISOMORPHIC, mapping, info)
