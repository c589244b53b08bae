"""Witness checkers written against plain edge sets.

Nothing here touches the bitset kernels, so a bug in a search cannot be
masked by the same bug in its checker.
"""

from __future__ import annotations

from itertools import combinations


def edge_set(edges):
    return {frozenset(e) for e in edges}


def is_clique(edges, vertices) -> bool:
    es = edge_set(edges)
    vs = list(vertices)
    if len(set(vs)) != len(vs):
        return False
    return all(frozenset((a, b)) in es for a, b in combinations(vs, 2))


def is_independent(edges, vertices) -> bool:
    es = edge_set(edges)
    vs = list(vertices)
    if len(set(vs)) != len(vs):
        return False
    return not any(frozenset((a, b)) in es for a, b in combinations(vs, 2))


def is_path(edges, seq) -> bool:
    es = edge_set(edges)
    seq = list(seq)
    if len(set(seq)) != len(seq):
        return False
    return all(frozenset((seq[i], seq[i + 1])) in es for i in range(len(seq) - 1))


def is_cycle(edges, seq) -> bool:
    seq = list(seq)
    if len(seq) < 3 or not is_path(edges, seq):
        return False
    return frozenset((seq[-1], seq[0])) in edge_set(edges)


def is_proper_coloring(edges, colors) -> bool:
    return all(colors[a] != colors[b] for a, b in edges)


def check_witness(red_edges, blue_edges, kind: str, vertices, r: int, t: int) -> bool:
    """Accept a red ``K_r`` or a blue ``P_t`` given as a vertex list."""
    if kind == "red_clique":
        return len(vertices) == r and is_clique(red_edges, vertices)
    if kind == "blue_path":
        return len(vertices) == t and is_path(blue_edges, vertices)
    return False
