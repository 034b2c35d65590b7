"""Directed graphs stored as a dense matrix of 4-valued adjacency codes.

Code ``adj[u, v]``:

    0  no arc between u and v
    1  arc v -> u only
    2  arc u -> v only
    3  arcs in both directions (an undirected edge)
"""
from __future__ import annotations

from typing import Iterable, NamedTuple, Sequence

import numpy as np

NO_ARC, IN_ARC, OUT_ARC, BOTH = 0, 1, 2, 3

_INVERSE = np.array([0, 2, 1, 3], dtype=np.uint8)


class GraphError(ValueError):
    """Invalid graph construction or permutation."""


def inverse_code(code: int) -> int:
    return int(_INVERSE[code])


class DegreeTriple(NamedTuple):
    d3: int
    d2: int
    d1: int


class Graph:
    """Immutable graph on vertices ``0..n-1``."""

    __slots__ = ("n", "adj", "_hash")

    def __init__(self, adj: np.ndarray, *, check: bool = True):
        adj = np.array(adj, dtype=np.uint8, copy=True)
        if adj.ndim != 2 or adj.shape[0] != adj.shape[1]:
            raise GraphError(f"adjacency must be square, got shape {adj.shape}")
        if check:
            if adj.size and adj.max() > 3:
                raise GraphError("adjacency codes must lie in {0,1,2,3}")
            if np.any(np.diagonal(adj)):
                raise GraphError("self-loops are not allowed")
            if not np.array_equal(adj, _INVERSE[adj.T]):
                raise GraphError("adj[u, v] must equal inverse(adj[v, u])")
        adj.setflags(write=False)
        self.n = int(adj.shape[0])
        self.adj = adj
        self._hash = None

    @classmethod
    def from_arcs(cls, n: int, arcs: Iterable[tuple[int, int]]) -> "Graph":
        if n < 0:
            raise GraphError("vertex count must be non-negative")
        out = np.zeros((n, n), dtype=bool)
        for u, v in arcs:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"arc ({u}, {v}) has an endpoint outside 0..{n - 1}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            out[u, v] = True
        adj = 2 * out.astype(np.uint8) + out.T.astype(np.uint8)
        return cls(adj, check=False)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Undirected graph: each edge becomes a pair of opposite arcs."""
        arcs = []
        for u, v in edges:
            arcs += [(u, v), (v, u)]
        return cls.from_arcs(n, arcs)

    def arcs(self) -> list[tuple[int, int]]:
        us, vs = np.nonzero((self.adj == OUT_ARC) | (self.adj == BOTH))
        return list(zip(us.tolist(), vs.tolist()))

    def is_undirected(self) -> bool:
        return not np.any((self.adj == IN_ARC) | (self.adj == OUT_ARC))

    def code_counts(self) -> tuple[int, int, int, int]:
        counts = np.bincount(self.adj.ravel(), minlength=4)
        return tuple(int(c) for c in counts)

    def degree_triples(self) -> list[DegreeTriple]:
        """Available degree of every vertex with the whole vertex set."""
        return [available_degree(self, v, range(self.n)) for v in range(self.n)]

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.adj, other.adj)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, self.adj.tobytes()))
        return self._hash

    def __repr__(self):
        kind = "undirected" if self.is_undirected() else "directed"
        return f"Graph(n={self.n}, {kind}, arcs={len(self.arcs())})"


def available_degree(g: Graph, v: int, s: Iterable[int]) -> DegreeTriple:
    """Count the code-3, code-2 and code-1 links from ``v`` into ``s``."""
    idx = [u for u in s if u != v]
    if not idx:
        return DegreeTriple(0, 0, 0)
    counts = np.bincount(g.adj[v, idx], minlength=4)
    return DegreeTriple(int(counts[3]), int(counts[2]), int(counts[1]))


def check_permutation(perm: Sequence[int], n: int) -> np.ndarray:
    arr = np.asarray(perm, dtype=np.intp)
    if arr.shape != (n,) or not np.array_equal(np.sort(arr), np.arange(n)):
        raise GraphError(f"not a permutation of 0..{n - 1}: {list(perm)}")
    return arr


def apply_permutation(g: Graph, perm: Sequence[int]) -> Graph:
    """Relabel ``g`` so that vertex ``u`` becomes ``perm[u]``."""
    p = check_permutation(perm, g.n)
    adj = np.empty_like(g.adj)
    adj[np.ix_(p, p)] = g.adj
    return Graph(adj, check=False)


def is_automorphism(g: Graph, perm: Sequence[int]) -> bool:
    p = check_permutation(perm, g.n)
    return bool(np.array_equal(g.adj[np.ix_(p, p)], g.adj))


def is_isomorphism(g: Graph, h: Graph, mapping: Sequence[int]) -> bool:
    """True iff ``mapping`` (indexed by vertices of g) carries g onto h."""
    if g.n != h.n:
        return False
    p = check_permutation(mapping, g.n)
    return bool(np.array_equal(h.adj[np.ix_(p, p)], g.adj))


def invert_permutation(perm: Sequence[int]) -> list[int]:
    inv = [0] * len(perm)
    for i, j in enumerate(perm):
        inv[j] = i
    return inv


def cycle_notation(perm: Sequence[int]) -> str:
    """Non-trivial cycles, e.g. ``(0 1 2)(3 4)``; ``()`` for the identity."""
    seen = [False] * len(perm)
    parts = []
    for start in range(len(perm)):
        if seen[start] or perm[start] == start:
            continue
        cyc = []
        v = start
        while not seen[v]:
            seen[v] = True
            cyc.append(v)
            v = perm[v]
        parts.append("(" + " ".join(map(str, cyc)) + ")")
    return "".join(parts) or "()"
