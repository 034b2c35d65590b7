"""Command line: ``partseq aut FILE`` and ``partseq iso A B``.

Inputs are DIMACS edge files (1-based vertices; ``a u v`` adds a directed
arc) or family pseudo-paths such as ``family:paley_tournament:7``.
Exit status: 0 success / isomorphic, 1 non-isomorphic, 2 input error.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from . import families
from .autgroup import automorphism_group
from .graph import BOTH, OUT_ARC, Graph, GraphError, cycle_notation
from .isotest import are_isomorphic
from .oracle import OracleBudgetError, brute_force_aut, brute_force_iso


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def parse_dimacs(text: str) -> Graph:
    n = m = None
    header_line = None
    out = None
    count = 0
    for lineno, raw in enumerate(text.splitlines(), 1):
        parts = raw.split()
        if not parts or parts[0] == "c":
            continue
        tag = parts[0]
        if tag == "p":
            if n is not None:
                raise ParseError("duplicate 'p' header", lineno)
            if len(parts) != 4 or parts[1] != "edge":
                raise ParseError("expected 'p edge <n> <m>'", lineno)
            try:
                n, m = int(parts[2]), int(parts[3])
            except ValueError:
                raise ParseError("header counts must be integers", lineno) from None
            if n < 1 or m < 0:
                raise ParseError("header counts out of range", lineno)
            header_line = lineno
            out = np.zeros((n, n), dtype=bool)
        elif tag in ("e", "a"):
            if n is None:
                raise ParseError(f"'{tag}' line before the 'p' header", lineno)
            if len(parts) != 3:
                raise ParseError(f"expected '{tag} <u> <v>'", lineno)
            try:
                u, v = int(parts[1]) - 1, int(parts[2]) - 1
            except ValueError:
                raise ParseError("vertex labels must be integers", lineno) from None
            if not (0 <= u < n and 0 <= v < n):
                raise ParseError(f"vertex outside 1..{n}", lineno)
            if u == v:
                raise ParseError(f"self-loop at vertex {u + 1}", lineno)
            out[u, v] = True
            if tag == "e":
                out[v, u] = True
            count += 1
        else:
            raise ParseError(f"unknown line type '{tag}'", lineno)
    if n is None:
        raise ParseError("missing 'p edge <n> <m>' header")
    if count != m:
        raise ParseError(f"header declares {m} edges but {count} were given", header_line)
    return Graph(2 * out.astype(np.uint8) + out.T.astype(np.uint8), check=False)


def to_dimacs(g: Graph) -> str:
    lines = []
    for u in range(g.n):
        for v in range(g.n):
            code = g.adj[u, v]
            if code == BOTH and u < v:
                lines.append(f"e {u + 1} {v + 1}")
            elif code == OUT_ARC:
                lines.append(f"a {u + 1} {v + 1}")
    return "\n".join([f"p edge {g.n} {len(lines)}"] + lines) + "\n"


def _params(text: str) -> list:
    out = []
    for tok in filter(None, text.split(",")):
        try:
            out.append(int(tok))
        except ValueError:
            out.append(float(tok))
    return out


_FAMILIES = {
    "paley_tournament": lambda q: families.paley_tournament(q),
    "paley_graph": lambda q: families.paley_graph(q),
    "latin_square": lambda n: families.latin_square_graph(n),
    "cycle": lambda n: families.cycle_graph(n),
    "path": lambda n: families.path_graph(n),
    "complete": lambda n: families.complete_graph(n),
    "petersen": lambda: families.petersen_graph(),
    "rook": lambda n: families.rook_graph(n),
    "shrikhande": lambda: families.shrikhande_graph(),
    "cycle_join": lambda k, m, code=0: families.component_join(families.cycle_graph(k), m, code),
    "paley_join": lambda q, m, code=3: families.component_join(families.paley_graph(q), m, code),
}


def load_family(spec: str) -> Graph:
    """Build a graph from ``family:<name>[:<params>[:<seed>]]``.

    ``random`` takes ``n,p[,symmetric]`` and the seed field, e.g.
    ``family:random:8,0.5,1:42``.
    """
    fields = spec.split(":")
    if fields[0] != "family" or len(fields) < 2 or len(fields) > 4:
        raise ParseError(f"bad family spec '{spec}'")
    name = fields[1]
    try:
        params = _params(fields[2]) if len(fields) > 2 else []
        seed = int(fields[3]) if len(fields) > 3 else 0
        if name == "random":
            n, p, *rest = params
            return families.random_graph(int(n), float(p), seed, symmetric=bool(rest and rest[0]))
        if name not in _FAMILIES:
            raise ParseError(f"unknown family '{name}'")
        return _FAMILIES[name](*params)
    except (TypeError, ValueError, GraphError) as exc:
        if isinstance(exc, ParseError):
            raise
        raise ParseError(f"bad parameters for family '{name}': {exc}") from None


def load_graph(source: str) -> Graph:
    if source.startswith("family:"):
        return load_family(source)
    try:
        text = Path(source).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {source}: {exc.strerror}") from None
    return parse_dimacs(text)


def cmd_aut(source: str, *, as_json: bool = False, oracle: bool = False, out=None) -> int:
    out = out or sys.stdout
    g = load_graph(source)
    if oracle:
        res = brute_force_aut(g)
        order, orbits = res.order, res.orbits
        generators = [list(p) for p in res.automorphisms if list(p) != list(range(g.n))]
        stats = {"method": "oracle"}
    else:
        res = automorphism_group(g)
        order, orbits, generators = res.order, res.orbits, res.generators
        stats = {"method": "partition-sequence", **res.stats}
    if as_json:
        doc = {"n": g.n, "order": order, "generators": generators, "orbits": orbits, "stats": stats}
        out.write(json.dumps(doc, sort_keys=True) + "\n")
        return 0
    out.write(f"order: {order}\n")
    out.write(f"generators: {len(generators)}\n")
    for perm in generators:
        out.write(f"  {cycle_notation(perm)}\n")
    out.write(f"orbits: {len(orbits)}\n")
    for orb in orbits:
        out.write("  {" + " ".join(map(str, orb)) + "}\n")
    return 0


def cmd_iso(a: str, b: str, *, mapping: bool = False, as_json: bool = False, oracle: bool = False, out=None) -> int:
    out = out or sys.stdout
    g, h = load_graph(a), load_graph(b)
    if oracle:
        found = brute_force_iso(g, h) if g.n == h.n else None
        perm = list(found) if found is not None else None
        stats = {"method": "oracle"}
    else:
        outcome = are_isomorphic(g, h)
        perm = outcome.mapping
        stats = {"method": "partition-sequence", **outcome.stats}
    iso = perm is not None
    if as_json:
        doc = {"isomorphic": iso, "mapping": perm, "stats": stats}
        out.write(json.dumps(doc, sort_keys=True) + "\n")
    else:
        out.write("isomorphic\n" if iso else "non-isomorphic\n")
        if iso and mapping:
            for u, v in enumerate(perm):
                out.write(f"{u} -> {v}\n")
    return 0 if iso else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="partseq", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p_aut = sub.add_parser("aut", help="automorphism group: order, generators, orbits")
    p_aut.add_argument("graph", help="DIMACS file or family:<name>:<params>[:<seed>]")
    p_aut.add_argument("--json", action="store_true")
    p_aut.add_argument("--oracle", action="store_true", help="brute force (at most 10 vertices)")

    p_iso = sub.add_parser("iso", help="isomorphism test")
    p_iso.add_argument("first")
    p_iso.add_argument("second")
    p_iso.add_argument("--mapping", action="store_true", help="print 'u -> v' per vertex")
    p_iso.add_argument("--json", action="store_true")
    p_iso.add_argument("--oracle", action="store_true", help="brute force (at most 10 vertices)")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        if args.command == "aut":
            return cmd_aut(args.graph, as_json=args.json, oracle=args.oracle)
        return cmd_iso(args.first, args.second, mapping=args.mapping, as_json=args.json, oracle=args.oracle)
    except (ParseError, GraphError, OracleBudgetError) as exc:
        print(f"partseq: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
