"""Turán graphs and the coloured construction showing the degree threshold is tight."""

from __future__ import annotations

import json
from dataclasses import dataclass

from .arrowing import TwoColoring
from .cliques import find_clique
from .errors import InputError
from .graph import Graph
from .graph_io import to_graph6
from .paths import find_path
from .reports import Report
from .thresholds import GoodnessParams, degree_threshold, extremal_degree


def turan_graph(n: int, parts: int) -> Graph:
    """Complete ``parts``-partite graph on ``n`` vertices, larger parts first."""
    if parts < 1 or n < 0:
        raise InputError("need parts >= 1 and n >= 0")
    q, rem = divmod(n, parts)
    sizes = [q + 1] * rem + [q] * (parts - rem)
    return Graph.complete_multipartite(sizes)


@dataclass(frozen=True)
class ExtremalConstruction:
    params: GoodnessParams
    graph: Graph
    coloring: TwoColoring
    parts: tuple[tuple[int, ...], ...]
    cliques: tuple[tuple[int, ...], ...]

    def sidecar(self) -> dict:
        p = self.params
        return {
            "r": p.r, "t": p.t, "k": p.k, "n": p.n,
            "graph6": to_graph6(self.graph),
            "parts": [list(x) for x in self.parts],
            "cliques": [list(x) for x in self.cliques],
            "blue_edges": [list(e) for e in self.coloring.blue_edges()],
        }

    def sidecar_json(self) -> str:
        return json.dumps(self.sidecar())


def build_extremal(r: int, t: int, k: int) -> ExtremalConstruction:
    """Host on ``n = (r-1)(t-1)(k+1)`` vertices: ``r-1`` parts of ``k+1`` blue
    ``K_{t-1}`` each, red complete multipartite edges between parts, and no
    edges between different cliques of the same part."""
    if r < 2 or t < 2 or k < 1:
        raise InputError("need r >= 2, t >= 2, k >= 1")
    part_size = (t - 1) * (k + 1)
    n = (r - 1) * part_size
    params = GoodnessParams(r, t, k, n)
    parts = []
    cliques = []
    blue = []
    for p in range(r - 1):
        start = p * part_size
        parts.append(tuple(range(start, start + part_size)))
        for q in range(k + 1):
            c0 = start + q * (t - 1)
            clique = tuple(range(c0, c0 + t - 1))
            cliques.append(clique)
            blue.extend((a, b) for i, a in enumerate(clique) for b in clique[i + 1:])
    between = Graph.complete_multipartite([part_size] * (r - 1))
    host = Graph.from_edges(n, between.edges() + blue)
    return ExtremalConstruction(params, host, TwoColoring(host, frozenset(blue)), tuple(parts), tuple(cliques))


def validate_extremal(e: ExtremalConstruction) -> Report:
    p = e.params
    rep = Report(f"extremal construction r={p.r} t={p.t} k={p.k} n={p.n}")
    red = e.coloring.red_graph()
    blue = e.coloring.blue_graph()
    clique = find_clique(red, p.r)
    rep.add("red_Kr_free", clique is None,
            "no red K_r" if clique is None else f"red K_{p.r} on {clique}")
    path = find_path(blue, p.t)
    rep.add("blue_Pt_free", path is None,
            "no blue P_t" if path is None else f"blue P_{p.t} {path}")
    threshold = degree_threshold(p)
    degs = e.graph.degrees()
    want = extremal_degree(p)
    ok = want == threshold - 1 and all(d == want for d in degs)
    rep.add("min_degree", ok,
            f"delta={min(degs)} max={max(degs)} expected every degree = {want}, threshold={threshold}")
    return rep
