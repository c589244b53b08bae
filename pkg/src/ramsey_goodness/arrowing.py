"""Exact decision of ``G -> (K_r, P_t)``.

A *good* colouring has no red ``K_r`` and no blue ``P_t``. ``arrows`` looks
for one; the graph arrows exactly when the search space is exhausted
without success.

The search branches on cliques rather than on single edges. In a good
colouring every ``K_r`` of the host carries at least one blue edge, so at
each node we take an ``r``-clique of the not-yet-blue graph with the fewest
undecided edges ``e1..eq`` and branch "e1 blue", "e1 red, e2 blue", ...
This is complete: any good colouring extending the current partial one
follows exactly one branch. A blue assignment is rejected when it closes a
blue ``P_t``; a clique whose edges are all red is a dead end; when no
``r``-clique survives in the not-yet-blue graph the remaining edges are
coloured red and a good colouring has been found.
"""

from __future__ import annotations

import json
import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import product

from . import verify
from .cliques import clique_in_masks, find_clique
from .errors import InputError, ParseError, Undecided
from .graph import Graph, bits, popcount, spanning_subgraph
from .graph_io import from_graph6, to_graph6
from .paths import find_path

DEFAULT_BUDGET = 1 << 24

RED_CLIQUE = "red_clique"
BLUE_PATH = "blue_path"


def default_budget() -> int:
    env = os.environ.get("RGL_BUDGET")
    return int(env) if env else DEFAULT_BUDGET


def _norm(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class TwoColoring:
    """Red/blue split of ``host``'s edges; red is everything not listed as blue."""

    host: Graph
    blue: frozenset

    def __post_init__(self):
        blue = frozenset(_norm(u, v) for u, v in self.blue)
        for u, v in blue:
            if not (0 <= u < self.host.n and 0 <= v < self.host.n) or not self.host.has_edge(u, v):
                raise InputError(f"blue edge ({u}, {v}) is not an edge of the host")
        object.__setattr__(self, "blue", blue)

    @classmethod
    def all_red(cls, g: Graph) -> TwoColoring:
        return cls(g, frozenset())

    @classmethod
    def all_blue(cls, g: Graph) -> TwoColoring:
        return cls(g, frozenset(g.edges()))

    def blue_edges(self) -> list[tuple[int, int]]:
        return sorted(self.blue)

    def red_edges(self) -> list[tuple[int, int]]:
        return [e for e in self.host.edges() if e not in self.blue]

    def blue_graph(self) -> Graph:
        return spanning_subgraph(self.host, self.blue_edges())

    def red_graph(self) -> Graph:
        return spanning_subgraph(self.host, self.red_edges())


@dataclass(frozen=True)
class Witness:
    kind: str
    vertices: tuple[int, ...]

    def as_dict(self) -> dict:
        return {"kind": self.kind, "vertices": list(self.vertices)}

    def verify(self, coloring: TwoColoring, r: int, t: int) -> bool:
        return verify.check_witness(
            coloring.red_edges(), coloring.blue_edges(), self.kind, self.vertices, r, t
        )


def check_coloring(c: TwoColoring, r: int, t: int) -> Witness | None:
    """Least red ``K_r`` if any, else least blue ``P_t``, else ``None``."""
    if r < 2 or t < 1:
        raise InputError("need r >= 2 and t >= 1")
    q = find_clique(c.red_graph(), r)
    if q is not None:
        return Witness(RED_CLIQUE, tuple(q))
    p = find_path(c.blue_graph(), t)
    if p is not None:
        return Witness(BLUE_PATH, tuple(p))
    return None


# -- certificates -------------------------------------------------------------


@dataclass
class Certificate:
    r: int
    t: int
    graph6: str
    verdict: str
    blue_edges: list = field(default_factory=list)
    stats: dict = field(default_factory=lambda: {"nodes": 0, "prunes": 0})
    mode: str = "sequential"

    @property
    def arrows(self) -> bool:
        return self.verdict == "arrows"

    def to_dict(self) -> dict:
        return {
            "r": self.r,
            "t": self.t,
            "graph6": self.graph6,
            "verdict": self.verdict,
            "blue_edges": [list(e) for e in self.blue_edges],
            "stats": {"nodes": self.stats.get("nodes", 0), "prunes": self.stats.get("prunes", 0)},
            "mode": self.mode,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, d: dict) -> Certificate:
        try:
            return cls(
                r=int(d["r"]), t=int(d["t"]), graph6=str(d["graph6"]), verdict=str(d["verdict"]),
                blue_edges=[tuple(int(x) for x in e) for e in d.get("blue_edges", [])],
                stats=dict(d.get("stats", {})), mode=str(d.get("mode", "sequential")),
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"malformed certificate: {exc}") from None

    @classmethod
    def from_json(cls, text: str) -> Certificate:
        return cls.from_dict(json.loads(text))


# -- search kernel ---------------------------------------------------------------


class _Search:
    """Mutable search state over bitset adjacency; one instance per search.

    Besides branching, every node runs unit propagation to a fixpoint:
    an undecided edge whose endpoints share a red ``K_{r-2}`` must be blue,
    and an undecided edge that would close a blue ``P_t`` must be red.
    """

    def __init__(self, g: Graph, r: int, t: int, budget: int, rank: dict):
        self.n = g.n
        self.full = g.vertex_mask
        self.r = r
        self.t = t
        self.budget = budget
        self.rank = rank
        self.nonblue = list(g.adj)
        self.red = [0] * g.n
        self.blue = [0] * g.n
        self.nodes = 0
        self.prunes = 0

    # state updates ---------------------------------------------------------

    def set_red(self, u, v):
        self.red[u] |= 1 << v
        self.red[v] |= 1 << u

    def unset_red(self, u, v):
        self.red[u] &= ~(1 << v)
        self.red[v] &= ~(1 << u)

    def set_blue(self, u, v):
        self.blue[u] |= 1 << v
        self.blue[v] |= 1 << u
        self.nonblue[u] &= ~(1 << v)
        self.nonblue[v] &= ~(1 << u)

    def unset_blue(self, u, v):
        self.blue[u] &= ~(1 << v)
        self.blue[v] &= ~(1 << u)
        self.nonblue[u] |= 1 << v
        self.nonblue[v] |= 1 << u

    def undo(self, trail):
        for colour, u, v in reversed(trail):
            if colour:
                self.unset_blue(u, v)
            else:
                self.unset_red(u, v)
        trail.clear()

    # blue path test ----------------------------------------------------------

    def _run(self, v: int, banned: int, need: int) -> bool:
        """Is there a blue path of ``need`` vertices starting at ``v`` avoiding ``banned``?"""
        if need <= 1:
            return True
        blue = self.blue
        for w in bits(blue[v] & ~banned):
            if self._run(w, banned | (1 << w), need - 1):
                return True
        return False

    def closes_path(self, u: int, v: int) -> bool:
        """Would making ``uv`` blue create a blue ``P_t``? (``uv`` not yet blue.)

        The current blue graph is ``P_t``-free, so a new path must use ``uv``:
        a path of ``a`` vertices ending in ``u`` joined to one of ``t - a``
        vertices starting in ``v``.
        """
        t = self.t
        blue = self.blue
        comp = (1 << u) | (1 << v)
        frontier = comp
        while frontier:
            nxt = 0
            for w in bits(frontier):
                nxt |= blue[w]
            frontier = nxt & ~comp
            comp |= frontier
        if comp.bit_count() < t:
            return False

        def left(x: int, used: int, a: int) -> bool:
            if self._run(v, used, t - a):
                return True
            if a + 1 >= t:
                return False
            for w in bits(blue[x] & ~used):
                if left(w, used | (1 << w), a + 1):
                    return True
            return False

        return left(u, (1 << u) | (1 << v), 1)

    # propagation ---------------------------------------------------------------

    def propagate(self, trail) -> bool:
        r = self.r
        red = self.red
        nb = self.nonblue
        n = self.n
        if clique_in_masks(red, self.full, r) is not None:
            return False
        changed = True
        while changed:
            changed = False
            for a in range(n):
                und = nb[a] & ~red[a] & ~((2 << a) - 1)
                for b in bits(und):
                    if not (nb[a] >> b) & 1 or (red[a] >> b) & 1:
                        continue
                    common = red[a] & red[b]
                    if r == 2 or (common and (r == 3 or clique_in_masks(red, common, r - 2) is not None)):
                        if self.closes_path(a, b):
                            return False
                        self.set_blue(a, b)
                        trail.append((1, a, b))
                        changed = True
                    elif self.closes_path(a, b):
                        # red is safe here: a and b share no red K_{r-2}
                        self.set_red(a, b)
                        trail.append((0, a, b))
                        changed = True
        return True

    # clique selection ------------------------------------------------------

    def pick_clique(self):
        """Undecided edges of an ``r``-clique of the not-yet-blue graph with
        the fewest undecided edges (rank order), or ``None`` if none is left."""
        nb = self.nonblue
        red = self.red
        rank = self.rank
        best = None
        best_count = None
        stack: list[int] = []

        def rec(cand: int, need: int) -> bool:
            nonlocal best, best_count
            if need == 0:
                und = []
                for i, a in enumerate(stack):
                    free = nb[a] & ~red[a]
                    for b in stack[i + 1:]:
                        if (free >> b) & 1:
                            und.append((a, b))
                if best_count is None or len(und) < best_count:
                    best, best_count = und, len(und)
                return len(und) <= 2
            while cand:
                if cand.bit_count() < need:
                    return False
                low = cand & -cand
                v = low.bit_length() - 1
                cand ^= low
                stack.append(v)
                stop = rec(cand & nb[v], need - 1)
                stack.pop()
                if stop:
                    return True
            return False

        rec(self.full, self.r)
        if best is None:
            return None
        best.sort(key=lambda e: rank[e])
        return best

    def solve(self) -> bool:
        self.nodes += 1
        if self.nodes > self.budget:
            raise Undecided(f"node budget {self.budget} exhausted", self.nodes)
        trail: list = []
        if not self.propagate(trail):
            self.prunes += 1
            self.undo(trail)
            return False
        edges = self.pick_clique()
        if edges is None:
            return True
        # after propagation every surviving clique has at least two undecided edges
        for u, v in edges:
            if self.closes_path(u, v):
                self.prunes += 1
            else:
                self.set_blue(u, v)
                trail.append((1, u, v))
                if self.solve():
                    return True
                trail.pop()
                self.unset_blue(u, v)
            self.set_red(u, v)
            trail.append((0, u, v))
        self.undo(trail)
        return False

    def coloring_blue_edges(self) -> list[tuple[int, int]]:
        out = []
        for u in range(self.n):
            for v in bits(self.blue[u] >> (u + 1)):
                out.append((u, u + 1 + v))
        return out


def _edge_rank(g: Graph, edge_order=None) -> dict:
    edges = g.edges() if edge_order is None else [_norm(*e) for e in edge_order]
    if sorted(edges) != g.edges():
        raise InputError("edge_order must be a permutation of the host's edges")
    return {e: i for i, e in enumerate(edges)}


def find_good_coloring(g: Graph, r: int, t: int, *, budget: int | None = None,
                       edge_order=None, fixed_blue=(), fixed_red=()) -> tuple[TwoColoring | None, dict]:
    """Search for a colouring with no red ``K_r`` and no blue ``P_t``.

    ``fixed_blue``/``fixed_red`` pre-assign edges (used to split the search
    tree). Returns the colouring (or ``None``) and ``{"nodes", "prunes"}``.
    """
    if r < 2 or t < 1:
        raise InputError("need r >= 2 and t >= 1")
    budget = default_budget() if budget is None else budget
    s = _Search(g, r, t, budget, _edge_rank(g, edge_order))
    for u, v in fixed_red:
        s.set_red(*_norm(u, v))
    for u, v in fixed_blue:
        u, v = _norm(u, v)
        if s.closes_path(u, v):
            return None, {"nodes": 0, "prunes": 1}
        s.set_blue(u, v)
    if t == 1 and g.n > 0:
        # a single vertex is already a blue P_1
        return None, {"nodes": 1, "prunes": 1}
    try:
        ok = s.solve()
    except RecursionError:
        raise Undecided("search depth exceeded the interpreter recursion limit", s.nodes) from None
    stats = {"nodes": s.nodes, "prunes": s.prunes}
    if not ok:
        return None, stats
    return TwoColoring(g, frozenset(s.coloring_blue_edges())), stats


def _split_worker(args):
    g6, r, t, budget, blue, red = args
    col, stats = find_good_coloring(from_graph6(g6), r, t, budget=budget, fixed_blue=blue, fixed_red=red)
    return (None if col is None else col.blue_edges()), stats


def arrows(g: Graph, r: int, t: int, *, budget: int | None = None, edge_order=None,
           threads: int = 1) -> Certificate:
    """Decide ``g -> (K_r, P_t)`` and return a certificate.

    ``not_arrows`` certificates carry the blue edges of a good colouring;
    ``arrows`` certificates carry search statistics. Budget exhaustion raises
    :class:`Undecided` rather than guessing.
    """
    g6 = to_graph6(g)
    budget = default_budget() if budget is None else budget
    if threads <= 1:
        col, stats = find_good_coloring(g, r, t, budget=budget, edge_order=edge_order)
        verdict = "arrows" if col is None else "not_arrows"
        blue = [] if col is None else col.blue_edges()
        return Certificate(r, t, g6, verdict, blue, stats, "sequential")

    # split on the first ceil(log2(threads)) edges; verdict is split-invariant
    depth = min(max(threads - 1, 1).bit_length(), g.num_edges())
    first = list(_edge_rank(g, edge_order))[:depth]
    jobs = []
    for colours in product((0, 1), repeat=depth):
        blue = [e for e, c in zip(first, colours) if c]
        red = [e for e, c in zip(first, colours) if not c]
        jobs.append((g6, r, t, budget, blue, red))
    totals = {"nodes": 0, "prunes": 0}
    found = None
    with ProcessPoolExecutor(max_workers=threads) as pool:
        for blue, stats in pool.map(_split_worker, jobs):
            totals["nodes"] += stats["nodes"]
            totals["prunes"] += stats["prunes"]
            if blue is not None and found is None:
                found = blue
    verdict = "arrows" if found is None else "not_arrows"
    return Certificate(r, t, g6, verdict, found or [], totals, f"parallel:{threads}")


def arrows_exhaustive(g: Graph, r: int, t: int) -> tuple[bool, list[tuple[int, int]] | None]:
    """Unpruned reference decision: tries all ``2^m`` colourings.

    Uses only the plain edge-set checkers, never the search kernel. Returns
    the verdict and the blue edges of the first good colouring found.
    """
    from itertools import combinations, permutations

    edges = g.edges()
    if len(edges) > 20:
        raise InputError("exhaustive enumeration is limited to 20 edges")
    cliques = [c for c in combinations(range(g.n), r) if verify.is_clique(edges, c)]
    for mask in range(1 << len(edges)):
        blue = [e for i, e in enumerate(edges) if (mask >> i) & 1]
        red = [e for i, e in enumerate(edges) if not (mask >> i) & 1]
        if any(verify.is_clique(red, c) for c in cliques):
            continue
        bset = {frozenset(e) for e in blue}
        verts = sorted({v for e in blue for v in e})
        if t <= 1:
            if g.n:
                continue
        elif any(verify.is_path(bset, p) for p in permutations(verts, t)):
            continue
        return False, blue
    return True, None


def verify_certificate(cert: Certificate, *, mode: str = "full", samples: int = 256,
                       seed: int = 0, budget: int | None = None) -> bool:
    """Re-check a certificate.

    ``not_arrows``: the stored colouring must avoid both targets.
    ``arrows``: ``mode="full"`` re-runs the decision; ``mode="sampled"``
    only checks that ``samples`` random colourings each contain a target,
    which is evidence, not proof.
    """
    g = from_graph6(cert.graph6)
    if cert.verdict == "not_arrows":
        try:
            col = TwoColoring(g, frozenset(tuple(e) for e in cert.blue_edges))
        except InputError:
            return False
        red, blue = col.red_edges(), col.blue_edges()
        from itertools import combinations
        if any(verify.is_clique(red, c) for c in combinations(range(g.n), cert.r)):
            return False
        return check_coloring(col, cert.r, cert.t) is None
    if cert.verdict != "arrows":
        raise ParseError(f"unknown verdict {cert.verdict!r}")
    if mode == "full":
        return arrows(g, cert.r, cert.t, budget=budget).arrows
    if mode == "sampled":
        rng = random.Random(seed)
        edges = g.edges()
        for _ in range(samples):
            blue = frozenset(e for e in edges if rng.random() < 0.5)
            if check_coloring(TwoColoring(g, blue), cert.r, cert.t) is None:
                return False
        return True
    raise InputError(f"unknown verification mode {mode!r}")
