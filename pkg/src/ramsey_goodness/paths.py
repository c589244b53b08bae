"""Exact path and Hamiltonicity searches.

Two engines are used. ``find_path`` and ``hamiltonian_cycle`` run a
depth-first search in ascending vertex order with a memo of dead
``(visited, end)`` states and a reachability cut, so the first witness found
is the lexicographically least one and absence is always proven.
``longest_path`` runs a layered subset DP per component.
"""

from __future__ import annotations

from collections.abc import Sequence

from .errors import CapacityError, InputError
from .graph import Graph, bits, component_masks, popcount

DP_LIMIT = 24


def _reach(adj: Sequence[int], v: int, allowed: int) -> int:
    """Vertices of ``allowed`` reachable from ``v`` (``v`` itself excluded)."""
    seen = 0
    frontier = adj[v] & allowed
    while frontier:
        seen |= frontier
        nxt = 0
        for w in bits(frontier):
            nxt |= adj[w]
        frontier = nxt & allowed & ~seen
    return seen


def path_in_masks(adj: Sequence[int], allowed: int, t: int, starts: int | None = None) -> list[int] | None:
    """Lexicographically least path on ``t`` vertices inside ``allowed``."""
    if t <= 0:
        return []
    if starts is None:
        starts = allowed
    dead: set[tuple[int, int]] = set()
    path: list[int] = []

    def grow(v: int, visited: int) -> bool:
        if len(path) == t:
            return True
        key = (visited, v)
        if key in dead:
            return False
        if popcount(_reach(adj, v, allowed & ~visited)) + len(path) < t:
            dead.add(key)
            return False
        for w in bits(adj[v] & allowed & ~visited):
            path.append(w)
            if grow(w, visited | (1 << w)):
                return True
            path.pop()
        dead.add(key)
        return False

    comp_of = {}
    for comp in component_masks_from(adj, allowed):
        for v in bits(comp):
            comp_of[v] = comp
    for v in bits(starts & allowed):
        if popcount(comp_of[v]) < t:
            continue
        path.append(v)
        if grow(v, 1 << v):
            return path
        path.pop()
    return None


def component_masks_from(adj: Sequence[int], allowed: int) -> list[int]:
    comps = []
    rest = allowed
    while rest:
        low = rest & -rest
        v = low.bit_length() - 1
        comp = low | _reach(adj, v, rest)
        comps.append(comp)
        rest &= ~comp
    return comps


def find_path(g: Graph, t: int) -> list[int] | None:
    """Lexicographically least path on exactly ``t`` vertices, or ``None``."""
    if t <= 0:
        return []
    if t > g.n:
        return None
    return path_in_masks(g.adj, g.vertex_mask, t)


def has_path(g: Graph, t: int) -> bool:
    if t < 1:
        raise InputError("path order must be at least 1")
    return find_path(g, t) is not None


def _path_layers(adj: Sequence[int], comp: int) -> list[dict[int, int]]:
    """``layers[i][mask]`` = endpoints of Hamiltonian paths of ``mask`` (|mask| = i+1)."""
    layer = {1 << v: 1 << v for v in bits(comp)}
    layers = [layer]
    full = comp
    while True:
        nxt: dict[int, int] = {}
        for mask, ends in layer.items():
            free = full & ~mask
            for v in bits(ends):
                for w in bits(adj[v] & free):
                    nm = mask | (1 << w)
                    nxt[nm] = nxt.get(nm, 0) | (1 << w)
        if not nxt:
            return layers
        layers.append(nxt)
        if full in nxt:
            return layers
        layer = nxt


def _reconstruct(adj: Sequence[int], layers: list[dict[int, int]]) -> list[int]:
    top = layers[-1]
    union = 0
    for ends in top.values():
        union |= ends
    v = (union & -union).bit_length() - 1
    cands = [m for m, e in top.items() if (e >> v) & 1]
    path = [v]
    for i in range(len(layers) - 2, -1, -1):
        prev = layers[i]
        best = None
        for m in cands:
            opts = prev.get(m ^ (1 << v), 0) & adj[v]
            if opts:
                w = (opts & -opts).bit_length() - 1
                if best is None or w < best:
                    best = w
        w = best
        cands = [m ^ (1 << v) for m in cands if (prev.get(m ^ (1 << v), 0) >> w) & 1 and (adj[v] >> w) & 1]
        path.append(w)
        v = w
    return path


def longest_path(g: Graph) -> list[int]:
    """A maximum path, lexicographically least among maximum paths."""
    if g.n == 0:
        return []
    best: list[int] | None = None
    for comp in component_masks(g):
        size = popcount(comp)
        if best is not None and size < len(best):
            continue
        if size > DP_LIMIT:
            raise CapacityError(
                f"component of {size} vertices exceeds the exact DP limit {DP_LIMIT}; use find_path"
            )
        # the DFS settles the common Hamiltonian case far faster than the DP
        cand = path_in_masks(g.adj, comp, size)
        if cand is None:
            cand = _reconstruct(g.adj, _path_layers(g.adj, comp))
        if best is None or len(cand) > len(best) or (len(cand) == len(best) and cand < best):
            best = cand
    return best


def hamiltonian_cycle(g: Graph) -> list[int] | None:
    """A Hamiltonian cycle as a vertex list starting at 0, or ``None``.

    Graphs with fewer than 3 vertices have no cycle.
    """
    n = g.n
    if n > DP_LIMIT:
        raise CapacityError(f"Hamiltonicity is exact only up to {DP_LIMIT} vertices")
    if n < 3 or g.min_degree() < 2 or len(component_masks(g)) != 1:
        return None
    adj = g.adj
    full = g.vertex_mask
    dead: set[tuple[int, int]] = set()
    path = [0]

    def grow(v: int, visited: int) -> bool:
        if visited == full:
            return bool(adj[v] & 1)
        key = (visited, v)
        if key in dead:
            return False
        rest = full & ~visited
        # every unvisited vertex must stay reachable, and 0 must keep a free neighbour
        if _reach(adj, v, rest) != rest or not adj[0] & rest:
            dead.add(key)
            return False
        for w in bits(adj[v] & rest):
            path.append(w)
            if grow(w, visited | (1 << w)):
                return True
            path.pop()
        dead.add(key)
        return False

    return path if grow(0, 1) else None
