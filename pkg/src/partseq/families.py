"""Deterministic generators for benchmark graph families."""
from __future__ import annotations

import numpy as np

from .graph import Graph, GraphError, inverse_code


def _is_prime(q: int) -> bool:
    return q >= 2 and all(q % d for d in range(2, int(q**0.5) + 1))


def quadratic_residues(q: int) -> set[int]:
    return {(x * x) % q for x in range(1, q)}


def paley_tournament(q: int) -> Graph:
    """Arc u -> v iff v - u is a nonzero square mod q (q prime, q = 3 mod 4)."""
    if not _is_prime(q) or q % 4 != 3:
        raise GraphError(f"Paley tournament needs a prime q = 3 mod 4, got {q}")
    squares = quadratic_residues(q)
    return Graph.from_arcs(q, [(u, v) for u in range(q) for v in range(q) if (v - u) % q in squares])


def paley_graph(q: int) -> Graph:
    """Undirected Paley graph, strongly regular for prime q = 1 mod 4."""
    if not _is_prime(q) or q % 4 != 1:
        raise GraphError(f"Paley graph needs a prime q = 1 mod 4, got {q}")
    squares = quadratic_residues(q)
    return Graph.from_edges(q, [(u, v) for u in range(q) for v in range(u + 1, q) if (v - u) % q in squares])


def latin_square_graph(n: int) -> Graph:
    """L3(n) graph of the Cayley table of Z_n.

    Vertex ``r*n + c`` is the table cell in row r, column c, holding symbol
    (r + c) mod n; two cells are adjacent when they share a row, a column or
    a symbol.
    """
    if n < 2:
        raise GraphError("latin square order must be at least 2")
    cells = [(r, c, (r + c) % n) for r in range(n) for c in range(n)]
    edges = [
        (i, j)
        for i in range(len(cells))
        for j in range(i + 1, len(cells))
        if any(a == b for a, b in zip(cells[i], cells[j]))
    ]
    return Graph.from_edges(n * n, edges)


def component_join(component: Graph, m: int, join_code: int = 0) -> Graph:
    """``m`` copies of ``component``; pairs across copies get ``join_code``.

    For a pair (u, v) with u in an earlier copy than v, ``adj[u, v] = join_code``.
    Code 0 gives the disjoint union and 3 the complete join.
    """
    if m < 1:
        raise GraphError("need at least one copy")
    if join_code not in (0, 1, 2, 3):
        raise GraphError(f"invalid adjacency code {join_code}")
    c = component.n
    adj = np.full((c * m, c * m), join_code, dtype=np.uint8)
    adj[np.tril_indices(c * m)] = inverse_code(join_code)
    for i in range(m):
        adj[i * c:(i + 1) * c, i * c:(i + 1) * c] = component.adj
    return Graph(adj)


def random_graph(n: int, arc_probability: float, seed: int, *, symmetric: bool = False) -> Graph:
    """Each ordered pair (or each unordered pair when ``symmetric``) is an arc
    independently with the given probability."""
    if not 0.0 <= arc_probability <= 1.0:
        raise GraphError("probability must lie in [0, 1]")
    rng = np.random.default_rng(seed)
    out = rng.random((n, n)) < arc_probability
    np.fill_diagonal(out, False)
    if symmetric:
        out = np.triu(out, 1)
        out = out | out.T
    adj = 2 * out.astype(np.uint8) + out.T.astype(np.uint8)
    return Graph(adj, check=False)


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)] if n > 2 else [(0, 1)][: n - 1])


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def directed_cycle(n: int) -> Graph:
    return Graph.from_arcs(n, [(i, (i + 1) % n) for i in range(n)])


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def rook_graph(n: int) -> Graph:
    """n x n rook's graph; the 4 x 4 case is SRG(16, 6, 2, 2)."""
    return Graph.from_edges(
        n * n,
        [(i, j) for i in range(n * n) for j in range(i + 1, n * n) if i // n == j // n or i % n == j % n],
    )


def shrikhande_graph() -> Graph:
    """Cayley graph of Z4 x Z4 with connection set {±(1,0), ±(0,1), ±(1,1)}."""
    moves = {(1, 0), (3, 0), (0, 1), (0, 3), (1, 1), (3, 3)}
    edges = []
    for a in range(16):
        for b in range(a + 1, 16):
            d = ((b // 4 - a // 4) % 4, (b % 4 - a % 4) % 4)
            if d in moves:
                edges.append((a, b))
    return Graph.from_edges(16, edges)
