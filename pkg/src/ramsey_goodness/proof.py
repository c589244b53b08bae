"""Witness extraction that follows the induction on the clique order.

Given a coloured host meeting the degree threshold, :func:`extract` walks
down the induction:

* clique order 2: a red edge closes the clique, otherwise the host is all
  blue and the minimum-degree path lemma yields a blue ``P_t``;
* some vertex ``u`` has red degree at least ``n - x + 1``: recurse on its
  red neighbourhood with clique order one lower, carrying ``u`` as a seed;
* otherwise every red-independent set of size ``x`` carries a blue path on
  ``t`` vertices, so one is searched for directly.

If none of these fires, the remaining argument is a contradiction rather
than a construction; the engine then searches exhaustively for a red clique
or blue path and records which link of the argument the colouring breaks.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .arrowing import BLUE_PATH, RED_CLIQUE, TwoColoring, Witness
from .cliques import clique_in_masks, find_clique, iter_independent_sets
from .coloring import chromatic_number
from .errors import InputError, InvariantFailure, WindowError
from .graph import Graph, bits, complement, component_masks, induced
from .graph_io import to_graph6
from .lemmas import min_degree_long_path, path_free_partition
from .paths import find_path
from .reports import Report
from .thresholds import GoodnessParams, ceil_div, degree_threshold, k_of

INDEPENDENT_SET_CAP = 10_000


@dataclass
class Frame:
    """One level of the induction, in original vertex labels."""

    clique_order: int
    n: int
    x: int
    k: int
    M: int
    seed: tuple[int, ...]
    case: str = ""
    u: int | None = None
    N: int | None = None
    x_next: int | None = None
    k_next: int | None = None
    j: int | None = None

    def as_dict(self) -> dict:
        return {k: v for k, v in self.__dict__.items() if v is not None}


@dataclass
class Extraction:
    witness: Witness
    step: str
    frames: list[Frame] = field(default_factory=list)
    broken_link: str | None = None

    @property
    def depth(self) -> int:
        """Number of Case 1 descents taken."""
        return sum(f.case == "case1" for f in self.frames)

    def as_dict(self) -> dict:
        return {
            "witness": self.witness.as_dict(),
            "step": self.step,
            "depth": self.depth,
            "broken_link": self.broken_link,
            "frames": [f.as_dict() for f in self.frames],
        }


def _falsified(message: str, g: Graph, c: TwoColoring, r: int, t: int, **extra) -> InvariantFailure:
    instance = {"graph6": to_graph6(g), "blue_edges": c.blue_edges(), "r": r, "t": t}
    instance.update(extra)
    return InvariantFailure("theorem falsified: " + message, instance)


def check_preconditions(g: Graph, c: TwoColoring, r: int, t: int) -> GoodnessParams:
    if c.host != g:
        raise InputError("colouring does not belong to this host graph")
    if r < 2 or t < 2:
        raise InputError("need r >= 2 and t >= 2")
    p = GoodnessParams.for_order(r, t, g.n)
    if p.k < max(1, t - 3):
        raise InputError(f"k={p.k} is outside the proven regime k >= max(1, t-3) = {max(1, t - 3)}")
    thr = degree_threshold(p)
    if g.min_degree() < thr:
        raise InputError(
            f"min degree {g.min_degree()} is below the threshold {thr} "
            f"(n={p.n}, x={p.x}, k={p.k}, M={p.M})"
        )
    return p


def extract(g: Graph, c: TwoColoring, r: int, t: int) -> Extraction:
    """Find a red ``K_r`` or blue ``P_t`` by following the inductive proof."""
    check_preconditions(g, c, r, t)
    red = c.red_graph()
    blue = c.blue_graph()
    frames: list[Frame] = []
    labels = list(range(g.n))
    seed: list[int] = []
    level = r

    while True:
        host, _ = induced(g, labels)
        red_h, _ = induced(red, labels)
        blue_h, _ = induced(blue, labels)
        p = GoodnessParams.for_order(level, t, host.n)
        x, k, M, n = p.x, p.k, p.M, p.n
        frame = Frame(level, n, x, k, M, tuple(seed))
        frames.append(frame)
        if host.min_degree() < degree_threshold(p):
            raise _falsified("induction hypothesis not applicable at this level", g, c, r, t,
                             frame=frame.as_dict())

        if level == 2:
            frame.case = "base"
            edges = red_h.edges()
            if edges:
                a, b = edges[0]
                vs = tuple(sorted(seed + [labels[a], labels[b]]))
                return Extraction(Witness(RED_CLIQUE, vs), "base_red_edge", frames)
            # all host edges are blue here
            path = min_degree_long_path(blue_h, k)
            if len(path) < t:
                raise _falsified("base case produced a short path", g, c, r, t)
            return Extraction(Witness(BLUE_PATH, tuple(labels[v] for v in path[:t])), "base_blue_path", frames)

        red_deg = red_h.degrees()
        u = next((v for v in range(n) if red_deg[v] >= n - x + 1), None)
        if u is not None:
            frame.case = "case1"
            nbhd = list(bits(red_h.adj[u]))
            N = len(nbhd)
            frame.u = labels[u]
            frame.N = N
            frame.j = (level - 1) * x - n
            x_next = ceil_div(N, level - 2)
            try:
                k_next = k_of(level - 1, t, N)
            except WindowError:
                raise _falsified("red neighbourhood fell below the window", g, c, r, t, frame=frame.as_dict())
            frame.x_next, frame.k_next = x_next, k_next
            sub, _ = induced(host, nbhd)
            if x_next < x or k_next < k:
                raise _falsified("parameter transfer x' >= x, k' >= k failed", g, c, r, t, frame=frame.as_dict())
            need = N - ceil_div(k * x, k + 1)
            if sub.min_degree() < need or need < N - ceil_div(k_next * x_next, k_next + 1):
                raise _falsified("degree transfer to the red neighbourhood failed", g, c, r, t,
                                 frame=frame.as_dict())
            seed.append(labels[u])
            labels = [labels[v] for v in nbhd]
            level -= 1
            continue

        frame.case = "case2"
        if blue_h.min_degree() < M or M < t - 2:
            raise _falsified(f"Case 2 entry bounds delta(B) >= M={M} >= t-2 failed", g, c, r, t,
                             frame=frame.as_dict())
        # every red-independent x-set should contain a blue P_t
        tried = 0
        for w in iter_independent_sets(red_h, x):
            tried += 1
            sub, sub_labels = induced(blue_h, w)
            path = find_path(sub, t)
            if path is not None:
                vs = tuple(labels[sub_labels[v]] for v in path)
                return Extraction(Witness(BLUE_PATH, vs), "case2_independent_set", frames)
            if tried >= INDEPENDENT_SET_CAP:
                break
        broken = None
        if tried:
            # a red-independent x-set without a blue P_t contradicts the path lemma
            broken = "claim_blue_path_in_W"
        diag = case2_diagnostics(host, TwoColoring(host, frozenset(blue_h.edges())), p)
        broken = broken or (diag.failed()[0] if diag.failed() else None)
        q = find_clique(red_h, level)
        if q is not None:
            vs = tuple(sorted(seed + [labels[v] for v in q]))
            return Extraction(Witness(RED_CLIQUE, vs), "case2_fallback_red_clique", frames, broken)
        path = find_path(blue_h, t)
        if path is not None:
            return Extraction(Witness(BLUE_PATH, tuple(labels[v] for v in path)),
                              "case2_fallback_blue_path", frames, broken)
        raise _falsified("no witness at the end of Case 2", g, c, r, t, diagnostics=diag.as_dict())


def extract_witness(g: Graph, c: TwoColoring, r: int, t: int) -> Witness:
    return extract(g, c, r, t).witness


def case2_diagnostics(g: Graph, c: TwoColoring, p: GoodnessParams) -> Report:
    """Evaluate every link of the Case 2 argument on a concrete colouring.

    Each check is one inequality the argument derives from "no red ``K_r``,
    no blue ``P_t``, degree at least the threshold"; the first failing one
    is where this colouring escapes. If every check passes the argument
    closes, which on a genuinely good colouring would contradict the theorem.
    """
    if c.host != g or g.n != p.n:
        raise InputError("colouring, host and parameters disagree")
    n, x, k, M, r, t = p.n, p.x, p.k, p.M, p.r, p.t
    red = c.red_graph()
    blue = c.blue_graph()
    if red.max_degree() > n - x:
        raise InputError(f"some red degree exceeds n - x = {n - x}; Case 2 does not apply")
    missing = complement(g)
    rep = Report(f"case 2 chain r={r} t={t} k={k} n={n}")
    d = rep.data
    d.update(n=n, x=x, k=k, M=M, threshold=degree_threshold(p), delta_G=g.min_degree(),
             max_red_degree=red.max_degree(), delta_B=blue.min_degree(), Delta_B=blue.max_degree(),
             Delta_missing=missing.max_degree())

    rep.add("delta_G_ge_threshold", g.min_degree() >= d["threshold"],
            f"delta(G)={g.min_degree()} vs threshold {d['threshold']}")
    rep.add("delta_B_ge_M", d["delta_B"] >= M, f"delta(B)={d['delta_B']} vs M={M}")
    if k >= t - 3:
        rep.add("M_ge_t_minus_2", M >= t - 2, f"M={M} vs t-2={t - 2}")
    if t == 2:
        rep.add("blue_edgeless", blue.num_edges() == 0, f"{blue.num_edges()} blue edges")
        return rep
    rep.add("Delta_missing_le_x_minus_M_minus_1", d["Delta_missing"] <= x - M - 1,
            f"Delta(missing)={d['Delta_missing']} vs x-M-1={x - M - 1}")

    blue_path = find_path(blue, t)
    rep.add("blue_Pt_free", blue_path is None,
            "no blue P_t" if blue_path is None else f"blue P_{t} {blue_path}")
    if blue_path is None and blue.min_degree() >= t // 2:
        parts = path_free_partition(blue, t)
        d["partition_sizes"] = [len(q.vertices) for q in parts]
    rep.add("Delta_B_le_t_minus_2", d["Delta_B"] <= t - 2, f"Delta(B)={d['Delta_B']} vs t-2={t - 2}")

    big_independent = next(iter_independent_sets(red, x), None)
    rep.add("claim_alpha_R", big_independent is None,
            "alpha(R) <= x-1" if big_independent is None else f"red-independent x-set {big_independent}")

    h = complement(red)
    d["Delta_H"] = h.max_degree()
    rep.add("Delta_H_le_bound", h.max_degree() <= x - M + t - 3,
            f"Delta(H)={h.max_degree()} vs x-M+t-3={x - M + t - 3}")
    red_clique = clique_in_masks(red.adj, red.vertex_mask, r)
    rep.add("red_Kr_free", red_clique is None,
            "omega(R) <= r-1" if red_clique is None else f"red K_{r} {red_clique}")

    chi, _ = chromatic_number(h)
    alpha_h = _clique_number(red)
    d.update(chi_H=chi, alpha_H=alpha_h, n_over_alpha_H=ceil_div(n, alpha_h) if alpha_h else None)
    rep.add("chi_H_ge_x", chi >= x, f"chi(H)={chi} vs x={x}")

    comp = _critical_component(h, chi)
    cg, _ = induced(h, list(bits(comp)))
    kind = "complete" if cg.is_complete() else "odd_cycle" if cg.is_cycle() and cg.n % 2 else "neither"
    d.update(brooks_component=kind, brooks_component_size=cg.n, Delta_C=cg.max_degree())
    if kind == "complete":
        rep.add("brooks_not_complete", False, f"component is K_{cg.n}, so omega(H) >= chi(H)")
    elif kind == "odd_cycle":
        # the bounds force blue to be 1-regular on C, impossible on an odd cycle
        sub_blue, _ = induced(blue, list(bits(comp)))
        rep.add("odd_cycle_excluded", False,
                f"blue degrees on the {cg.n}-cycle {sub_blue.degrees()}; "
                "an odd cycle has no perfect matching")
    else:
        rep.add("brooks_bound", chi <= cg.max_degree(), f"chi(C)={chi} vs Delta(C)={cg.max_degree()}")
    # if every link above held, x <= chi(H) <= Delta(H) <= x-M+t-3 would force M <= t-3
    d["forced_bound"] = f"M <= t-3 = {t - 3}"
    return rep


def _clique_number(g: Graph) -> int:
    size = 0
    while clique_in_masks(g.adj, g.vertex_mask, size + 1) is not None:
        size += 1
    return size


def _critical_component(h: Graph, chi: int) -> int:
    for comp in component_masks(h):
        sub, _ = induced(h, list(bits(comp)))
        if chromatic_number(sub)[0] == chi:
            return comp
    return 0


def chain_closes(report: Report) -> bool:
    """True when no link of the Case 2 argument is broken (never expected)."""
    return report.passed
