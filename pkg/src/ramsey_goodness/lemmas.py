"""Executable forms of the path lemmas used by the proof engine.

Each function checks its hypotheses, produces the promised object by exact
search, and raises :class:`InvariantFailure` if the promised conclusion does
not hold for the instance at hand.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InputError, InvariantFailure
from .graph import Graph, bits, component_masks, induced, is_connected, popcount
from .graph_io import to_graph6
from .paths import DP_LIMIT, find_path, hamiltonian_cycle, longest_path


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def _long_path(g: Graph, target: int) -> list[int] | None:
    if all(popcount(c) <= DP_LIMIT for c in component_masks(g)):
        p = longest_path(g)
        return p if len(p) >= target else None
    return find_path(g, target)


def min_degree_long_path(g: Graph, k: int) -> list[int]:
    """Path on at least ceil(n/k) vertices in a graph with min degree >= floor(n/(k+1))."""
    n = g.n
    if k < 1:
        raise InputError("k must be at least 1")
    if n and g.min_degree() < n // (k + 1):
        raise InputError(f"min degree {g.min_degree()} is below floor(n/(k+1)) = {n // (k + 1)}")
    target = _ceil_div(n, k)
    p = _long_path(g, target)
    if p is None:
        raise InvariantFailure(
            f"no path on {target} vertices despite the degree condition",
            {"graph6": to_graph6(g), "k": k},
        )
    return p


def erdos_gallai_path(g: Graph) -> list[int]:
    """Path on at least 2*delta+1 vertices in a connected graph with n >= 2*delta+1."""
    if not is_connected(g) or g.n == 0:
        raise InputError("graph must be connected and non-empty")
    delta = g.min_degree()
    target = 2 * delta + 1
    if g.n < target:
        raise InputError(f"need n >= 2*delta+1 = {target}, got n = {g.n}")
    p = _long_path(g, target)
    if p is None:
        raise InvariantFailure(
            f"connected graph with delta={delta} has no path on {target} vertices",
            {"graph6": to_graph6(g)},
        )
    return p


@dataclass(frozen=True)
class PartitionPart:
    vertices: tuple[int, ...]
    cycle: tuple[int, ...]


def path_free_partition(g: Graph, d: int) -> list[PartitionPart]:
    """Split a P_d-free graph with min degree >= floor(d/2) into its components.

    Every component is checked to have between floor(d/2)+1 and d-1 vertices
    and to carry a Hamiltonian cycle, which is returned in original labels.
    A two-vertex component (possible only for d <= 3) is accepted with its
    single edge as degenerate cycle evidence.
    """
    half = d // 2
    if d < 2:
        raise InputError("d must be at least 2")
    if g.n and g.min_degree() < half:
        raise InputError(f"min degree {g.min_degree()} is below floor(d/2) = {half}")
    if find_path(g, d) is not None:
        raise InputError(f"graph contains a path on {d} vertices")
    parts = []
    for comp in component_masks(g):
        size = popcount(comp)
        members = list(bits(comp))
        if not half + 1 <= size <= d - 1:
            raise InvariantFailure(
                f"component of size {size} outside [{half + 1}, {d - 1}]",
                {"graph6": to_graph6(g), "d": d, "component": members},
            )
        sub, labels = induced(g, members)
        if size == 2:
            cyc = labels
        else:
            local = hamiltonian_cycle(sub)
            if local is None:
                raise InvariantFailure(
                    "component has no Hamiltonian cycle",
                    {"graph6": to_graph6(g), "d": d, "component": members},
                )
            cyc = [labels[i] for i in local]
        parts.append(PartitionPart(tuple(members), tuple(cyc)))
    return parts
