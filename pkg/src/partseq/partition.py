"""Ordered partitions of the surviving vertex set and their refinements.

A refinement splits every cell by a key (available degree with a pivot cell,
or the adjacency code from a pivot vertex), orders the sub-cells by key
descending, then drops every vertex left without links to the active set.
Dropped vertices go to the partition's ``discard_log``.

Each refined partition carries a ``trace``: for every sub-cell, the tuple
``(parent position, key, size before discards, discarded count)``. Two
refinements of compatible partitions with corresponding pivots produce equal
traces, which is what the search compares level by level.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from .graph import DegreeTriple, Graph

PIVOT = "pivot"
DISCONNECTED = "disconnected"


class PartitionError(ValueError):
    pass


@dataclass(frozen=True)
class Partition:
    cells: tuple[tuple[int, ...], ...]
    discard_log: tuple[tuple[int, str], ...] = ()
    trace: tuple = field(default=(), compare=False, repr=False)
    # disconnected discards grouped by the sub-cell they left
    discard_groups: tuple[tuple[int, ...], ...] = field(default=(), compare=False, repr=False)

    @property
    def active(self) -> frozenset[int]:
        return frozenset(v for c in self.cells for v in c)

    @property
    def discarded(self) -> tuple[int, ...]:
        return tuple(v for v, _ in self.discard_log)

    @property
    def size(self) -> int:
        return sum(len(c) for c in self.cells)

    def is_discrete(self) -> bool:
        return all(len(c) == 1 for c in self.cells)

    def cell_of(self) -> dict[int, int]:
        return {v: i for i, c in enumerate(self.cells) for v in c}

    def __len__(self):
        return len(self.cells)


class CellSignature(NamedTuple):
    size: int
    degrees: tuple[DegreeTriple, ...]


def unit_partition(g: Graph) -> Partition:
    if g.n < 1:
        raise PartitionError("graph has no vertices")
    return Partition(cells=(tuple(range(g.n)),))


def _weights(n: int) -> np.ndarray:
    # key = d3*(n+1)^2 + d2*(n+1) + d1, so integer order is lex order on (d3,d2,d1)
    b = n + 1
    return np.array([0, 1, b, b * b], dtype=np.int64)


def degree_keys(g: Graph, cell) -> np.ndarray:
    """Encoded available degree of every vertex with ``cell``.

    A vertex's own entry is skipped automatically because ``adj[v, v] == 0``.
    """
    if not len(cell):
        return np.zeros(g.n, dtype=np.int64)
    return _weights(g.n)[g.adj[:, list(cell)]].sum(axis=1)


def decode_key(key: int, n: int) -> DegreeTriple:
    b = n + 1
    return DegreeTriple(key // (b * b), (key // b) % b, key % b)


def _split(g: Graph, cells, keys, pivot: int | None) -> Partition:
    keys = keys.tolist()
    pieces = []  # (parent, key, members)
    for parent, cell in enumerate(cells):
        groups: dict[int, list[int]] = {}
        for v in cell:
            if v != pivot:
                groups.setdefault(keys[v], []).append(v)
        for key in sorted(groups, reverse=True):
            pieces.append((parent, key, groups[key]))

    active = [v for _, _, members in pieces for v in members]
    if active:
        sub = g.adj[np.ix_(active, active)]
        linked = dict(zip(active, sub.any(axis=1).tolist()))
    else:
        linked = {}

    log = [(pivot, PIVOT)] if pivot is not None else []
    new_cells, trace, groups_out = [], [], []
    for parent, key, members in pieces:
        kept = [v for v in members if linked[v]]
        lost = [v for v in members if not linked[v]]
        trace.append((parent, key, len(members), len(lost)))
        if kept:
            new_cells.append(tuple(kept))
        if lost:
            log += [(v, DISCONNECTED) for v in lost]
            groups_out.append(tuple(lost))
    return Partition(tuple(new_cells), tuple(log), tuple(trace), tuple(groups_out))


def set_refine(g: Graph, p: Partition, pivot_index: int) -> Partition:
    """Split every cell by available degree with the cell at ``pivot_index``."""
    if not 0 <= pivot_index < len(p.cells):
        raise PartitionError(f"pivot index {pivot_index} out of range")
    keys = degree_keys(g, p.cells[pivot_index])
    return _split(g, p.cells, keys, None)


def vertex_refine(g: Graph, p: Partition, pivot_index: int, pivot_vertex: int) -> Partition:
    """Individualize ``pivot_vertex``: discard it and split by its codes."""
    if not 0 <= pivot_index < len(p.cells):
        raise PartitionError(f"pivot index {pivot_index} out of range")
    if pivot_vertex not in p.cells[pivot_index]:
        raise PartitionError(f"vertex {pivot_vertex} is not in pivot cell {pivot_index}")
    keys = g.adj[pivot_vertex].astype(np.int64)
    return _split(g, p.cells, keys, pivot_vertex)


def is_equitable(g: Graph, p: Partition) -> bool:
    for cell in p.cells:
        keys = degree_keys(g, cell)
        for other in p.cells:
            if len(other) > 1 and len(set(keys[list(other)].tolist())) > 1:
                return False
    return True


def signature(g: Graph, p: Partition, cell_index: int) -> CellSignature:
    cell = p.cells[cell_index]
    v = cell[0]
    degrees = []
    for other in p.cells:
        keys = degree_keys(g, other)
        if __debug__ and len(set(keys[list(cell)].tolist())) > 1:
            raise PartitionError("signature requires an equitable partition")
        degrees.append(decode_key(int(keys[v]), g.n))
    return CellSignature(len(cell), tuple(degrees))


def signatures(g: Graph, p: Partition) -> tuple[CellSignature, ...] | None:
    """All cell signatures, or None when ``p`` is not equitable."""
    if not p.cells:
        return ()
    cols = [degree_keys(g, c) for c in p.cells]
    out = []
    for cell in p.cells:
        idx = list(cell)
        degs = []
        for keys in cols:
            vals = keys[idx]
            if vals.min() != vals.max():
                return None
            degs.append(decode_key(int(vals[0]), g.n))
        out.append(CellSignature(len(cell), tuple(degs)))
    return tuple(out)


def compatible(ga: Graph, pa: Partition, gb: Graph, pb: Partition) -> bool:
    if len(pa.cells) != len(pb.cells):
        return False
    sa, sb = signatures(ga, pa), signatures(gb, pb)
    if sa is None or sb is None:
        raise PartitionError("compatibility is defined for equitable partitions")
    return sa == sb


def is_subpartition(pl: Partition, pk: Partition) -> bool:
    """Each cell of ``pl`` lies inside a different cell of ``pk``."""
    where = pk.cell_of()
    used = set()
    for cell in pl.cells:
        owners = {where.get(v) for v in cell}
        if len(owners) != 1 or None in owners:
            return False
        owner = owners.pop()
        if owner in used:
            return False
        used.add(owner)
    return True
