"""Immutable simple graphs on vertices ``0..n-1`` backed by integer bitsets.

Neighbourhoods are stored as Python ints: bit ``w`` of ``adj[v]`` is set iff
``v`` and ``w`` are adjacent. Every search kernel in the package works on
these masks directly.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator

from .errors import CapacityError, InputError

MAX_VERTICES = 64


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def popcount(mask: int) -> int:
    return mask.bit_count()


class Graph:
    """Undirected simple graph; instances are never mutated after creation."""

    __slots__ = ("n", "adj", "_m")

    def __init__(self, n: int, adj: Iterable[int]):
        adj = tuple(adj)
        if n < 0 or len(adj) != n:
            raise InputError("adjacency must list one mask per vertex")
        if n > MAX_VERTICES:
            raise CapacityError(f"graphs are limited to {MAX_VERTICES} vertices, got {n}")
        full = (1 << n) - 1
        for v, a in enumerate(adj):
            if a & ~full or (a >> v) & 1:
                raise InputError(f"bad neighbourhood for vertex {v}")
            for w in bits(a):
                if not (adj[w] >> v) & 1:
                    raise InputError(f"adjacency not symmetric at ({v}, {w})")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", adj)
        object.__setattr__(self, "_m", None)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    # -- constructors -------------------------------------------------------

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise InputError(f"self-loop at {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, adj)

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, [0] * n)

    @classmethod
    def complete(cls, n: int) -> Graph:
        full = (1 << n) - 1
        return cls(n, [full ^ (1 << v) for v in range(n)])

    @classmethod
    def cycle(cls, n: int) -> Graph:
        if n < 3:
            raise InputError("a cycle needs at least 3 vertices")
        return cls.from_edges(n, [(i, (i + 1) % n) for i in range(n)])

    @classmethod
    def path(cls, n: int) -> Graph:
        return cls.from_edges(n, [(i, i + 1) for i in range(n - 1)])

    @classmethod
    def complete_multipartite(cls, sizes: Iterable[int]) -> Graph:
        sizes = list(sizes)
        n = sum(sizes)
        full = (1 << n) - 1
        adj = []
        start = 0
        for s in sizes:
            block = ((1 << s) - 1) << start
            adj.extend([full & ~block] * s)
            start += s
        return cls(n, adj)

    @classmethod
    def petersen(cls) -> Graph:
        outer = [(i, (i + 1) % 5) for i in range(5)]
        spokes = [(i, i + 5) for i in range(5)]
        inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
        return cls.from_edges(10, outer + spokes + inner)

    @classmethod
    def disjoint_union(cls, *graphs: Graph) -> Graph:
        adj = []
        shift = 0
        for g in graphs:
            adj.extend(a << shift for a in g.adj)
            shift += g.n
        return cls(shift, adj)

    # -- basic queries ------------------------------------------------------

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def degrees(self) -> list[int]:
        return [popcount(a) for a in self.adj]

    def min_degree(self) -> int:
        return min(self.degrees(), default=0)

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def num_edges(self) -> int:
        if self._m is None:
            object.__setattr__(self, "_m", sum(self.degrees()) // 2)
        return self._m

    def edges(self) -> list[tuple[int, int]]:
        """All edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        out = []
        for u, a in enumerate(self.adj):
            for v in bits(a >> (u + 1)):
                out.append((u, u + 1 + v))
        return out

    def is_complete(self) -> bool:
        return all(popcount(a) == self.n - 1 for a in self.adj)

    def is_cycle(self) -> bool:
        if self.n < 3 or any(popcount(a) != 2 for a in self.adj):
            return False
        return len(connected_components(self)) == 1

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return hash((self.n, self.adj))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.num_edges()})"


def complement(g: Graph) -> Graph:
    full = g.vertex_mask
    return Graph(g.n, [full & ~a & ~(1 << v) for v, a in enumerate(g.adj)])


def induced(g: Graph, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
    """Subgraph induced on ``vertices``, relabelled by ascending original index.

    Returns the new graph and ``labels`` with ``labels[i]`` the original
    vertex that became ``i``.
    """
    labels = sorted(set(vertices))
    for v in labels:
        if not 0 <= v < g.n:
            raise InputError(f"vertex {v} out of range for n={g.n}")
    pos = {v: i for i, v in enumerate(labels)}
    adj = []
    for v in labels:
        adj.append(mask_of(pos[w] for w in bits(g.adj[v]) if w in pos))
    return Graph(len(labels), adj), labels


def subgraph_mask(g: Graph, mask: int) -> tuple[Graph, list[int]]:
    return induced(g, bits(mask))


def spanning_subgraph(g: Graph, edges: Iterable[tuple[int, int]]) -> Graph:
    """Graph on the same vertex set keeping only ``edges`` (all must be in ``g``)."""
    h = Graph.from_edges(g.n, edges)
    for u, a in enumerate(h.adj):
        if a & ~g.adj[u]:
            raise InputError("edge set is not contained in the host graph")
    return h


def component_masks(g: Graph, within: int | None = None) -> list[int]:
    """Connected components as bitmasks, ordered by smallest member."""
    remaining = g.vertex_mask if within is None else within
    comps = []
    while remaining:
        start = remaining & -remaining
        comp = start
        frontier = start
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= g.adj[v]
            nxt &= remaining & ~comp
            comp |= nxt
            frontier = nxt
        comps.append(comp)
        remaining &= ~comp
    return comps


def connected_components(g: Graph) -> list[list[int]]:
    return [list(bits(c)) for c in component_masks(g)]


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(component_masks(g)) == 1
