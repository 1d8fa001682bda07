"""Color-preserving automorphism search by partition refinement.

The engine answers one question two ways: does a colored graph admit a
nontrivial color-preserving automorphism (find one as a certificate), and
what are all automorphisms of a small graph (collect every leaf).

The search keeps two colorings of the same graph, a source and a target,
refined in lockstep to equitable fixpoints.  Branching individualizes the
least vertex of the smallest non-singleton cell on the source side against
each candidate in the matching target cell, in (cell, vertex) order, so the
first certificate found is deterministic.  Every leaf is re-verified by a
naive adjacency-and-color check before being reported.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional, Sequence

from .graph import Graph
from .permgroup import CapExceededError, Perm

DEFAULT_AUT_CAP = 1_000_000


@dataclass(frozen=True)
class ColoredGraph:
    """A graph plus one positive integer color per vertex."""

    graph: Graph
    colors: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.colors) != self.graph.n:
            raise ValueError(
                f"{len(self.colors)} colors for {self.graph.n} vertices"
            )


class SearchStats:
    """Counters for one search run."""

    __slots__ = ("nodes", "refinements", "found")

    def __init__(self) -> None:
        self.nodes = 0
        self.refinements = 0
        self.found = False

    def __repr__(self) -> str:
        return (
            f"SearchStats(nodes={self.nodes}, refinements={self.refinements},"
            f" found={self.found})"
        )


def _signatures(adj: Sequence[int], n: int, c: list[int], ncolors: int) -> list[int]:
    """Pack each vertex's (color, neighbor counts per class) into one integer.

    Colors must be dense 0..ncolors-1; all signatures of one round have the
    same digit count, so integer order equals lexicographic order.
    """
    base = n + 1
    masks = [0] * ncolors
    for v in range(n):
        masks[c[v]] |= 1 << v
    out = []
    append = out.append
    for v in range(n):
        row = adj[v]
        s = c[v]
        for m in masks:
            s = s * base + (row & m).bit_count()
        append(s)
    return out


def _refine_trace(
    adj: Sequence[int], n: int, c: list[int], ncolors: int, stats: SearchStats
) -> tuple[list[int], int, list[tuple[list[int], dict[int, int]]]]:
    """Refine one coloring to its equitable fixpoint, recording each round.

    Every round recolors vertices by sorted-signature rank.  The recorded
    (sorted signatures, rank map) rounds let the target side of a search
    node replay the identical renumbering, or prune on mismatch.
    """
    trace: list[tuple[list[int], dict[int, int]]] = []
    while True:
        stats.refinements += 1
        sig = _signatures(adj, n, c, ncolors)
        srt = sorted(sig)
        rank: dict[int, int] = {}
        idx = -1
        prev = None
        for s in srt:
            if s != prev:
                idx += 1
                rank[s] = idx
                prev = s
        trace.append((srt, rank))
        c = [rank[s] for s in sig]
        if idx + 1 == ncolors or idx + 1 == n:
            return c, idx + 1, trace
        ncolors = idx + 1


def _replay_trace(
    adj: Sequence[int],
    n: int,
    c: list[int],
    ncolors: int,
    trace: list[tuple[list[int], dict[int, int]]],
    stats: SearchStats,
) -> Optional[list[int]]:
    """Refine a coloring along a recorded trace; None when signatures diverge,
    which certifies no automorphism maps the traced coloring onto this one.
    """
    for srt, rank in trace:
        stats.refinements += 1
        sig = _signatures(adj, n, c, ncolors)
        if sorted(sig) != srt:
            return None
        c = [rank[s] for s in sig]
        ncolors = len(rank)
    return c


def _verify(adj: Sequence[int], n: int, colors: Sequence[int], sigma: Sequence[int]) -> bool:
    """Naive check: sigma preserves both adjacency and the given colors."""
    for v in range(n):
        if colors[sigma[v]] != colors[v]:
            return False
    for v in range(n):
        row = adj[v]
        mapped = 0
        while row:
            lsb = row & -row
            row ^= lsb
            mapped |= 1 << sigma[lsb.bit_length() - 1]
        if mapped != adj[sigma[v]]:
            return False
    return True


def _search(
    adj: Sequence[int],
    n: int,
    colors: Sequence[int],
    accept: Optional[Callable[[tuple[int, ...]], bool]],
    collect: bool,
    cap: int,
    stats: SearchStats,
) -> Optional[Perm] | list[Perm]:
    results: list[Perm] = []
    base = list(colors)

    def node(c1: list[int], c2: list[int], ncolors: int) -> Optional[Perm]:
        """Handle one search node whose colorings are already refined."""
        stats.nodes += 1
        if ncolors == n:
            sigma = [0] * n
            pos2 = [0] * n
            for v in range(n):
                pos2[c2[v]] = v
            for v in range(n):
                sigma[v] = pos2[c1[v]]
            st = tuple(sigma)
            if not _verify(adj, n, base, st):
                return None
            if accept is not None and not accept(st):
                return None
            p = Perm(st)
            if collect:
                results.append(p)
                if len(results) > cap:
                    raise CapExceededError(len(results))
                return None
            return p
        cells1: list[list[int]] = [[] for _ in range(ncolors)]
        cells2: list[list[int]] = [[] for _ in range(ncolors)]
        for v in range(n):
            cells1[c1[v]].append(v)
            cells2[c2[v]].append(v)
        target = min(
            (k for k in range(ncolors) if len(cells1[k]) > 1),
            key=lambda k: (len(cells1[k]), k),
        )
        # individualize the least source vertex once; replay per target choice
        v = cells1[target][0]
        nc1 = list(c1)
        nc1[v] = ncolors
        rc1, rk, trace = _refine_trace(adj, n, nc1, ncolors + 1, stats)
        for w in cells2[target]:
            nc2 = list(c2)
            nc2[w] = ncolors
            rc2 = _replay_trace(adj, n, nc2, ncolors + 1, trace, stats)
            if rc2 is None:
                continue
            got = node(rc1, rc2, rk)
            if got is not None:
                return got
        return None

    if n == 0:
        ident: tuple[int, ...] = ()
        if collect:
            return [Perm(ident)]
        if accept is None or accept(ident):
            return Perm(ident)
        return None
    # normalize the starting colors to dense values 0..k-1
    order = sorted(set(base))
    dense = {val: i for i, val in enumerate(order)}
    start = [dense[val] for val in base]
    rc, rk, _trace = _refine_trace(adj, n, start, len(order), stats)
    found = node(rc, list(rc), rk)
    if collect:
        return results
    return found


def find_preserving(
    colored: ColoredGraph, exclude_identity: bool = True
) -> tuple[Optional[Perm], SearchStats]:
    """Search for an automorphism preserving every vertex color.

    With ``exclude_identity`` the returned permutation, if any, is a
    nontrivial certificate that the coloring is not distinguishing; absence
    means the coloring is distinguishing.
    """
    g = colored.graph
    stats = SearchStats()
    accept = None
    if exclude_identity:
        ident = tuple(range(g.n))
        accept = lambda s: s != ident  # noqa: E731
    got = _search(g.adjacency_bits, g.n, colored.colors, accept, False, 0, stats)
    stats.found = got is not None
    return got, stats


def enumerate_automorphisms(g: Graph, cap: int = DEFAULT_AUT_CAP) -> list[Perm]:
    """All automorphisms of g, identity first, in deterministic search order.

    Raises CapExceededError when the group has more than ``cap`` elements.
    """
    if cap < 1:
        raise ValueError("cap must be positive")
    stats = SearchStats()
    out = _search(g.adjacency_bits, g.n, [0] * g.n, None, True, cap, stats)
    assert isinstance(out, list)
    return out


def is_color_preserving_automorphism(g: Graph, colors: Sequence[int], p: Perm) -> bool:
    """Independent naive re-check of a certificate."""
    if p.degree != g.n or len(colors) != g.n:
        return False
    return _verify(g.adjacency_bits, g.n, colors, p.image)


# -- edge labelings via the subdivision reduction --------------------------


def _subdivision(g: Graph, labels: dict[tuple[int, int], int]):
    """Bicolored subdivision: one new vertex per edge, colored by its label.

    Original vertices keep one shared marker color, so the two marker classes
    can never mix and automorphisms of the subdivision restrict exactly to
    label-preserving automorphisms of g.
    """
    edges = g.edge_list()
    if set(labels) != set(edges):
        raise ValueError("labeling domain must equal the edge set exactly")
    n, m = g.n, len(edges)
    bits = list(g.adjacency_bits) + [0] * m
    for k, (u, v) in enumerate(edges):
        w = n + k
        bits[u] &= ~(1 << v)
        bits[v] &= ~(1 << u)
        bits[u] |= 1 << w
        bits[v] |= 1 << w
        bits[w] = (1 << u) | (1 << v)
    values = sorted(set(labels.values()))
    rank = {val: i + 1 for i, val in enumerate(values)}
    colors = [0] * n + [rank[labels[e]] for e in edges]
    return bits, n + m, colors


def preserves_edge_labels(g: Graph, labels: dict[tuple[int, int], int], p: Perm) -> bool:
    """Whether p is an automorphism of g preserving every edge label."""
    if p.degree != g.n:
        return False
    for (u, v), val in labels.items():
        a, b = p(u), p(v)
        e = (a, b) if a < b else (b, a)
        if labels.get(e) != val:
            return False
    return is_color_preserving_automorphism(g, [0] * g.n, p)


def edge_action_is_trivial(g: Graph, p: Perm) -> bool:
    """Whether p fixes every edge of g as a set."""
    for u, v in g.edges:
        a, b = p(u), p(v)
        if (a, b) != (u, v) and (a, b) != (v, u):
            return False
    return True


def find_preserving_edges(
    g: Graph, labels: dict[tuple[int, int], int], exclude_identity: bool = True
) -> Optional[Perm]:
    """Search for an automorphism preserving every edge label.

    An automorphism whose action on the edge set is the identity counts as
    trivial here (such maps exist only on single-edge components and can
    never be broken by edge labels), so with ``exclude_identity`` the search
    looks for a certificate that moves at least one edge.
    """
    bits, total, colors = _subdivision(g, labels)
    n = g.n
    stats = SearchStats()
    accept = None
    if exclude_identity:
        rng = range(n, total)
        accept = lambda s: any(s[i] != i for i in rng)  # noqa: E731
    got = _search(bits, total, colors, accept, False, 0, stats)
    if got is None:
        return None
    vertex_part = Perm(got.image[:n])
    if not preserves_edge_labels(g, labels, vertex_part):
        raise AssertionError("internal error: certificate failed re-verification")
    return vertex_part
