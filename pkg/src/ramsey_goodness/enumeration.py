"""Graph sources for sweeps: exhaustive unlabelled enumeration and seeded samplers.

Unlabelled graphs on up to 7 vertices come from the networkx graph atlas.
Order 8 is generated by vertex augmentation of the order-7 graphs: every
graph arises from some order-7 graph by adding a vertex of minimum degree,
and duplicates are removed by an invariant bucket plus an isomorphism test.
"""

from __future__ import annotations

import random
from functools import lru_cache

import networkx as nx

from .errors import CapacityError, InputError
from .graph import Graph, bits, component_masks, popcount

ATLAS_MAX = 7
ENUM_MAX = 8

# number of unlabelled graphs on n vertices, n = 0..8
KNOWN_COUNTS = (1, 1, 2, 4, 11, 34, 156, 1044, 12346)


def from_networkx(h: nx.Graph) -> Graph:
    nodes = sorted(h.nodes())
    pos = {v: i for i, v in enumerate(nodes)}
    return Graph.from_edges(len(nodes), [(pos[u], pos[v]) for u, v in h.edges()])


def to_networkx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


@lru_cache(maxsize=None)
def _atlas(n: int) -> tuple[Graph, ...]:
    return tuple(from_networkx(h) for h in nx.graph_atlas_g() if h.number_of_nodes() == n)


def _invariant(g: Graph) -> tuple:
    degs = g.degrees()
    per_vertex = []
    for v in range(g.n):
        nb = g.adj[v]
        tri = sum(popcount(g.adj[w] & nb) for w in bits(nb)) // 2
        per_vertex.append((degs[v], tri, tuple(sorted(degs[w] for w in bits(nb)))))
    return tuple(sorted(per_vertex))


@lru_cache(maxsize=None)
def _augmented(n: int, min_degree: int) -> tuple[Graph, ...]:
    buckets: dict[tuple, list[tuple[Graph, nx.Graph]]] = {}
    out = []
    for base in graphs(n - 1, max(min_degree - 1, 0)):
        for s in range(1 << (n - 1)):
            d = popcount(s)
            if d < min_degree:
                continue
            adj = [a | (((s >> v) & 1) << (n - 1)) for v, a in enumerate(base.adj)]
            adj.append(s)
            if min(popcount(a) for a in adj) < d:
                # the new vertex must have minimum degree
                continue
            g = Graph(n, adj)
            key = _invariant(g)
            bucket = buckets.setdefault(key, [])
            h = to_networkx(g)
            if any(nx.vf2pp_is_isomorphic(h, other) for _, other in bucket):
                continue
            bucket.append((g, h))
            out.append(g)
    return tuple(out)


def graphs(n: int, min_degree: int = 0) -> tuple[Graph, ...]:
    """All unlabelled graphs on ``n`` vertices with minimum degree at least ``min_degree``."""
    if n < 0:
        raise InputError("n must be non-negative")
    if n > ENUM_MAX:
        raise CapacityError(f"exhaustive enumeration is limited to n <= {ENUM_MAX}")
    if n <= ATLAS_MAX:
        return tuple(g for g in _atlas(n) if n == 0 or g.min_degree() >= min_degree)
    if min_degree <= 1:
        # low degree bounds keep almost everything; filter one shared list
        return tuple(g for g in _augmented(n, 0) if g.min_degree() >= min_degree)
    return _augmented(n, min_degree)


def connected_graphs(n: int, min_degree: int = 0) -> list[Graph]:
    return [g for g in graphs(n, min_degree) if n <= 1 or len(component_masks(g)) == 1]


# -- samplers -------------------------------------------------------------------


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def sample_er_min_degree(n: int, min_degree: int, rng: random.Random, max_tries: int = 100000) -> Graph:
    """Erdős–Rényi graph conditioned on ``delta >= min_degree`` by rejection.

    The edge probability is drawn per attempt from a range that keeps the
    expected degree just above the target.
    """
    if min_degree > n - 1:
        raise InputError("min_degree exceeds n - 1")
    if n <= 1:
        return Graph.empty(n)
    lo = min(1.0, (min_degree + 0.5) / (n - 1))
    for _ in range(max_tries):
        p = rng.uniform(lo, 1.0)
        g = random_graph(n, p, rng)
        if g.min_degree() >= min_degree:
            return g
    raise RuntimeError("rejection sampler did not converge")


def sample_near_threshold(n: int, min_degree: int, rng: random.Random) -> Graph:
    """Delete edges of ``K_n`` in random order while ``delta >= min_degree`` survives.

    The result is edge-minimal for the degree condition, so many vertices sit
    exactly at ``min_degree``.
    """
    if min_degree > n - 1:
        raise InputError("min_degree exceeds n - 1")
    edges = [(u, v) for u in range(n) for v in range(u + 1, n)]
    rng.shuffle(edges)
    keep = set(edges)
    deg = [n - 1] * n
    for u, v in edges:
        if deg[u] > min_degree and deg[v] > min_degree and rng.random() < 0.9:
            keep.discard((u, v))
            deg[u] -= 1
            deg[v] -= 1
    return Graph.from_edges(n, sorted(keep))


def sample_min_degree(n: int, min_degree: int, rng: random.Random, index: int) -> Graph:
    """Alternate the two samplers so sweeps see both easy and adversarial hosts."""
    if index % 2:
        return sample_near_threshold(n, min_degree, rng)
    return sample_er_min_degree(n, min_degree, rng)


def random_connected_graph(n: int, rng: random.Random, p: float | None = None) -> Graph:
    """Random spanning tree plus independent extra edges."""
    if n <= 1:
        return Graph.empty(n)
    p = rng.uniform(0.05, 0.6) if p is None else p
    order = list(range(n))
    rng.shuffle(order)
    edges = {tuple(sorted((order[i], order[rng.randrange(i)]))) for i in range(1, n)}
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                edges.add((u, v))
    return Graph.from_edges(n, sorted(edges))
