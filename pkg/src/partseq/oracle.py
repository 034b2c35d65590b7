"""Exhaustive ground truth for small graphs.

Both routines walk bijections in lexicographic order, assigning images to
vertices 0, 1, ... and cutting a prefix as soon as an assigned pair breaks
adjacency or an image has a different degree triple. Those cuts never remove
an extendable prefix.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .autgroup import orbits_of
from .graph import Graph


class OracleBudgetError(ValueError):
    pass


@dataclass(frozen=True)
class OracleBudget:
    max_n: int = 10
    max_perms: int = 4_000_000


@dataclass
class OracleAut:
    automorphisms: list[tuple[int, ...]]
    order: int
    orbits: list[list[int]]


def _isomorphisms(g: Graph, h: Graph) -> Iterator[tuple[int, ...]]:
    n = g.n
    ga, ha = g.adj.tolist(), h.adj.tolist()
    gdeg, hdeg = g.degree_triples(), h.degree_triples()
    image = [-1] * n
    used = [False] * n

    def rec(x):
        if x == n:
            yield tuple(image)
            return
        for y in range(n):
            if used[y] or gdeg[x] != hdeg[y]:
                continue
            if any(ga[x][z] != ha[y][image[z]] for z in range(x)):
                continue
            image[x], used[y] = y, True
            yield from rec(x + 1)
            image[x], used[y] = -1, False

    yield from rec(0)


def _check(g: Graph, budget: OracleBudget):
    if g.n > budget.max_n:
        raise OracleBudgetError(f"{g.n} vertices exceeds the oracle limit of {budget.max_n}")


def brute_force_aut(g: Graph, budget: OracleBudget = OracleBudget()) -> OracleAut:
    _check(g, budget)
    autos = []
    for perm in _isomorphisms(g, g):
        autos.append(perm)
        if len(autos) > budget.max_perms:
            raise OracleBudgetError("automorphism count exceeds the oracle budget")
    return OracleAut(autos, len(autos), orbits_of(g.n, autos))


def brute_force_iso(g: Graph, h: Graph, budget: OracleBudget = OracleBudget()) -> tuple[int, ...] | None:
    """Lexicographically first bijection carrying g onto h, or None."""
    _check(g, budget)
    if g.n != h.n:
        return None
    return next(_isomorphisms(g, h), None)
