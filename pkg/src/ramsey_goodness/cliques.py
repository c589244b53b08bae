"""Cliques and independent sets by bitset branch and bound."""

from __future__ import annotations

from collections.abc import Sequence

from .errors import InputError
from .graph import Graph, bits, complement, popcount


def _colour_bound(adj: Sequence[int], cand: int) -> int:
    """Number of colours a greedy sequential colouring of ``cand`` uses."""
    colours = 0
    rest = cand
    while rest:
        colours += 1
        avail = rest
        while avail:
            low = avail & -avail
            v = low.bit_length() - 1
            rest &= ~low
            avail &= ~low & ~adj[v]
    return colours


def clique_in_masks(adj: Sequence[int], cand: int, size: int) -> list[int] | None:
    """Lexicographically least clique of ``size`` vertices drawn from ``cand``.

    Vertices are tried in ascending order, so the first clique completed is
    the least one in lexicographic order of sorted vertex lists.
    """
    if size <= 0:
        return []
    chosen: list[int] = []

    def extend(cand: int, need: int) -> bool:
        if need == 0:
            return True
        if popcount(cand) < need:
            return False
        if need > 2 and _colour_bound(adj, cand) < need:
            return False
        while cand:
            if popcount(cand) < need:
                return False
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            chosen.append(v)
            if extend(cand & adj[v], need - 1):
                return True
            chosen.pop()
        return False

    return list(chosen) if extend(cand, size) else None


def find_clique(g: Graph, size: int) -> list[int] | None:
    if size < 0:
        raise InputError("clique size must be non-negative")
    return clique_in_masks(g.adj, g.vertex_mask, size)


def find_independent_set(g: Graph, size: int) -> list[int] | None:
    if size < 0:
        raise InputError("independent set size must be non-negative")
    return find_clique(complement(g), size)


def iter_cliques(g: Graph, size: int):
    """Every clique of exactly ``size`` vertices, in lexicographic order."""
    if size == 0:
        yield []
        return
    adj = g.adj
    stack: list[int] = []

    def rec(cand: int, need: int):
        if need == 0:
            yield list(stack)
            return
        while cand and popcount(cand) >= need:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            stack.append(v)
            yield from rec(cand & adj[v], need - 1)
            stack.pop()

    yield from rec(g.vertex_mask, size)


def iter_independent_sets(g: Graph, size: int):
    return iter_cliques(complement(g), size)


def clique_number(g: Graph) -> int:
    """Size of a maximum clique."""
    best = 0
    adj = g.adj

    def expand(size: int, cand: int):
        nonlocal best
        if not cand:
            best = max(best, size)
            return
        if size + _colour_bound(adj, cand) <= best:
            return
        while cand:
            if size + popcount(cand) <= best:
                return
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            expand(size + 1, cand & adj[v])

    expand(0, g.vertex_mask)
    return best


def independence_number(g: Graph) -> int:
    return clique_number(complement(g))
