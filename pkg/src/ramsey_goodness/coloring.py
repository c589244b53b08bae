"""Vertex colourings: exact chromatic number, chromatic surplus, Brooks colouring."""

from __future__ import annotations

from dataclasses import dataclass

from .cliques import clique_number
from .errors import CapacityError, InputError
from .graph import Graph, bits, component_masks, induced, is_connected, popcount

SURPLUS_LIMIT = 12


@dataclass(frozen=True)
class ProperColoring:
    colors: tuple[int, ...]
    num_colors: int

    def __post_init__(self):
        if set(self.colors) != set(range(self.num_colors)):
            raise InputError("every colour index below num_colors must be used")

    def classes(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.num_colors)]
        for v, c in enumerate(self.colors):
            out[c].append(v)
        return out

    def is_proper(self, g: Graph) -> bool:
        return len(self.colors) == g.n and all(
            self.colors[u] != self.colors[v] for u, v in g.edges()
        )


def _normalise(colors: list[int]) -> ProperColoring:
    remap: dict[int, int] = {}
    out = []
    for c in colors:
        if c not in remap:
            remap[c] = len(remap)
        out.append(remap[c])
    return ProperColoring(tuple(out), len(remap))


def greedy_coloring(g: Graph, order: list[int] | None = None) -> list[int]:
    """First-fit colouring along ``order`` (default: ascending)."""
    colors = [-1] * g.n
    for v in order if order is not None else range(g.n):
        used = {colors[w] for w in bits(g.adj[v]) if colors[w] >= 0}
        c = 0
        while c in used:
            c += 1
        colors[v] = c
    return colors


def dsatur_coloring(g: Graph) -> list[int]:
    n = g.n
    colors = [-1] * n
    sat: list[set[int]] = [set() for _ in range(n)]
    deg = g.degrees()
    for _ in range(n):
        v = max((u for u in range(n) if colors[u] < 0), key=lambda u: (len(sat[u]), deg[u], -u))
        c = 0
        while c in sat[v]:
            c += 1
        colors[v] = c
        for w in bits(g.adj[v]):
            sat[w].add(c)
    return colors


def _k_coloring(g: Graph, k: int) -> list[int] | None:
    """Backtracking search for a proper ``k``-colouring, DSATUR branching order."""
    n = g.n
    adj = g.adj
    colors = [-1] * n
    # forbidden[v] is a bitmask of colours used by coloured neighbours
    forbidden = [0] * n
    allk = (1 << k) - 1

    def choose() -> int:
        best, best_key = -1, None
        for v in range(n):
            if colors[v] < 0:
                key = (popcount(forbidden[v]), popcount(adj[v]))
                if best_key is None or key > best_key:
                    best, best_key = v, key
        return best

    def rec(done: int, used: int) -> bool:
        if done == n:
            return True
        v = choose()
        free = allk & ~forbidden[v]
        # unused colours are interchangeable: only the first of them is tried
        for c in bits(free):
            if c > used:
                break
            colors[v] = c
            touched = [w for w in bits(adj[v]) if colors[w] < 0 and not (forbidden[w] >> c) & 1]
            for w in touched:
                forbidden[w] |= 1 << c
            if rec(done + 1, max(used, c + 1)):
                return True
            for w in touched:
                forbidden[w] &= ~(1 << c)
            colors[v] = -1
        return False

    return list(colors) if rec(0, 0) else None


def chromatic_number(g: Graph) -> tuple[int, ProperColoring]:
    """Exact chromatic number and one optimal colouring."""
    if g.n == 0:
        return 0, ProperColoring((), 0)
    upper = dsatur_coloring(g)
    hi = max(upper) + 1
    lo = clique_number(g)
    best = upper
    for k in range(lo, hi):
        found = _k_coloring(g, k)
        if found is not None:
            best = found
            break
    col = _normalise(best)
    return col.num_colors, col


def chromatic_surplus(g: Graph, limit: int = SURPLUS_LIMIT) -> int:
    """Least colour-class size over all proper colourings with exactly chi colours.

    Colourings are enumerated in canonical form (colours appear in order of
    first use along ascending vertices), which removes permutation symmetry.
    """
    n = g.n
    if n == 0:
        raise InputError("chromatic surplus needs at least one vertex")
    if n > limit:
        raise CapacityError(f"surplus enumeration is capped at {limit} vertices, got {n}")
    chi, _ = chromatic_number(g)
    adj = g.adj
    colors = [-1] * n
    sizes = [0] * chi
    best = n

    def rec(v: int, used: int):
        nonlocal best
        if chi - used > n - v:
            return
        if v == n:
            best = min(best, min(sizes))
            return
        for c in range(min(used + 1, chi)):
            if any(colors[w] == c for w in bits(adj[v] & ((1 << v) - 1))):
                continue
            colors[v] = c
            sizes[c] += 1
            rec(v + 1, max(used, c + 1))
            sizes[c] -= 1
        colors[v] = -1

    rec(0, 0)
    return best


# -- Brooks ------------------------------------------------------------------


def _bfs_order(g: Graph, root: int, allowed: int) -> list[int]:
    order = [root]
    seen = 1 << root
    i = 0
    while i < len(order):
        for w in bits(g.adj[order[i]] & allowed & ~seen):
            seen |= 1 << w
            order.append(w)
        i += 1
    return order


def _greedy_towards_root(g: Graph, root: int, allowed: int, colors: list[int]) -> None:
    # farthest vertices first: each one still has its BFS parent uncoloured
    for v in reversed(_bfs_order(g, root, allowed)):
        used = {colors[w] for w in bits(g.adj[v]) if colors[w] >= 0}
        c = 0
        while c in used:
            c += 1
        colors[v] = c


def _articulation_point(g: Graph) -> int | None:
    full = g.vertex_mask
    for v in range(g.n):
        rest = full & ~(1 << v)
        if rest and len(component_masks(g, rest)) > 1:
            return v
    return None


def brooks_coloring(g: Graph) -> ProperColoring:
    """Constructive Brooks colouring of a connected graph.

    Complete graphs get ``n`` colours and odd cycles get 3; every other
    connected graph is coloured with at most ``max(Δ, 2)`` colours (at most
    Δ whenever Δ ≥ 2).
    """
    n = g.n
    if not is_connected(g):
        raise InputError("brooks_coloring needs a connected graph")
    if n == 0:
        return ProperColoring((), 0)
    if g.is_complete():
        return ProperColoring(tuple(range(n)), n)
    if g.is_cycle():
        colors = [i % 2 for i in range(n)]
        if n % 2:
            colors[n - 1] = 2
        # the cycle need not be labelled in order; recolour along a traversal
        order = _cycle_order(g)
        out = [0] * n
        for i, v in enumerate(order):
            out[v] = colors[i]
        return _normalise(out)
    delta = g.max_degree()
    degs = g.degrees()
    colors = [-1] * n
    full = g.vertex_mask

    low = [v for v in range(n) if degs[v] < delta]
    if low:
        _greedy_towards_root(g, low[0], full, colors)
        return _normalise(colors)

    cut = _articulation_point(g)
    if cut is not None:
        pieces = component_masks(g, full & ~(1 << cut))
        for piece in pieces:
            sub, labels = induced(g, list(bits(piece)) + [cut])
            local = [-1] * sub.n
            root = labels.index(cut)
            # the cut vertex has degree < Δ inside each piece
            _greedy_towards_root(sub, root, sub.vertex_mask, local)
            shift = local[root]
            for i, v in enumerate(labels):
                if v != cut:
                    colors[v] = _swap(local[i], shift, 0)
        colors[cut] = 0
        return _normalise(colors)

    # regular and 2-connected: colour two non-adjacent neighbours a, b of some v
    # alike, keeping G - {a, b} connected, then greedy towards v
    for v in range(n):
        nb = g.neighbors(v)
        for i, a in enumerate(nb):
            for b in nb[i + 1:]:
                if g.has_edge(a, b):
                    continue
                rest = full & ~(1 << a) & ~(1 << b)
                if len(component_masks(g, rest)) != 1:
                    continue
                colors[a] = colors[b] = 0
                _greedy_towards_root(g, v, rest, colors)
                return _normalise(colors)
    raise AssertionError("no Brooks triple in a 2-connected non-complete regular graph")


def _swap(c: int, a: int, b: int) -> int:
    if c == a:
        return b
    if c == b:
        return a
    return c


def _cycle_order(g: Graph) -> list[int]:
    order = [0]
    prev, cur = -1, 0
    while len(order) < g.n:
        cur, prev = min(w for w in bits(g.adj[cur]) if w != prev), cur
        order.append(cur)
    return order
