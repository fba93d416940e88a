"""Graph constructions: clique-sum concatenation and the extremal families.

Concatenation glues two convex graphs along a hull edge: the second graph's
vertices are relabeled so that they occupy the arc outside the chosen hull
edge of the first graph, and the two hull edges are identified endpoint to
endpoint (lower index to lower index).  Because each input ends up on a
contiguous arc and the arcs meet only at the identified endpoints, no edge
of one input can interleave with an edge of the other, so every surviving
edge keeps exactly the crossing count it had in its source graph.

The families built on top of it:

* ``kx_chain(x, blocks)``: complete graphs K_x glued in a chain.  For even
  x the middle diagonal of each block is the worst edge and is crossed
  ((x-2)/2)^2 times, so the chain is outer ((x-2)/2)^2-planar.
* ``kxx_alternating(x)``: complete bipartite K_{x,x} with the two classes
  interleaved around the polygon (vertex parity = class).  Its maximum
  crossing count is 2*floor((x-1)/2)*ceil((x-1)/2).
* ``kxx_chain(x, blocks)``: copies of the alternating K_{x,x} glued in a
  chain along bichromatic hull edges, which keeps the union coloring
  proper (and in fact alternating).

``outercopy`` produces the two-page doubling used by the counting
arguments: every edge stays inside the polygon and every diagonal gains a
twin drawn outside the hull, giving 2m - h edges total where h is the
number of hull edges present.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .geometry import (
    ConvexGraph,
    _normalize_edge,
    chord_length,
    chords_cross,
    hull_edges,
)

__all__ = [
    "complete_graph",
    "cycle_graph",
    "concatenate",
    "kx_chain",
    "kxx_alternating",
    "kxx_chain",
    "OuterCopyGraph",
    "outercopy",
    "outercopy_crossing_counts",
]


def complete_graph(x: int) -> ConvexGraph:
    """K_x on x points in convex position."""
    if x < 2:
        raise ValueError("complete_graph needs x >= 2")
    return ConvexGraph(x, combinations(range(x), 2))


def cycle_graph(n: int) -> ConvexGraph:
    """The polygon itself: n hull edges, nothing else."""
    if n < 3:
        raise ValueError("cycle_graph needs n >= 3")
    return ConvexGraph(n, [(i, (i + 1) % n) for i in range(n)])


def _check_hull_edge(g: ConvexGraph, edge, which: str) -> tuple[int, int]:
    e = _normalize_edge(g.n, edge)
    if e not in g.edges:
        raise ValueError(f"{which} {e} is not an edge of the graph")
    if chord_length(g.n, e) != 0:
        raise ValueError(f"{which} {e} is not a hull edge")
    return e


def _merge_colorings(g1, a, b, g2, p, q, map1, map2, n):
    """Union coloring when both inputs are colored compatibly, else None.

    The second coloring may be flipped globally; the identified endpoints
    (a=p and b=q after relabeling) must agree.
    """
    if g1.coloring is None or g2.coloring is None:
        return None
    for flip in (0, 1):
        c2 = [c ^ flip for c in g2.coloring]
        if c2[p] == g1.coloring[a] and c2[q] == g1.coloring[b]:
            merged = [0] * n
            for v in range(g1.n):
                merged[map1[v]] = g1.coloring[v]
            for v in range(g2.n):
                merged[map2[v]] = c2[v]
            return merged
    return None


def concatenate(g1: ConvexGraph, e1, g2: ConvexGraph, e2) -> ConvexGraph:
    """Glue g2 onto g1 by identifying hull edge e2 of g2 with e1 of g1.

    The result has g1.n + g2.n - 2 vertices and m1 + m2 - 1 edges (the
    identified edge is kept once).  Crossing counts of all surviving edges
    are unchanged; in particular the maximum crossing count of the result
    is the larger of the two inputs' maxima.
    """
    a, b = _check_hull_edge(g1, e1, "e1")
    p, q = _check_hull_edge(g2, e2, "e2")
    n1, n2 = g1.n, g2.n
    n = n1 + n2 - 2

    # Walk g2's boundary from p to q on the side avoiding the edge (p, q);
    # these interior vertices are the ones inserted into g1's hull gap.
    if (p, q) == (0, n2 - 1):
        interior = list(range(1, n2 - 1))
    else:  # hull adjacency means q == p + 1 here
        interior = [(p - t) % n2 for t in range(1, n2 - 1)]

    if (a, b) == (0, n1 - 1):
        # Insert between n1-1 and 0 (the wrap gap), walking from q back to p.
        map1 = {v: v for v in range(n1)}
        map2 = {p: 0, q: n1 - 1}
        for i, v in enumerate(reversed(interior)):
            map2[v] = n1 + i
    else:  # b == a + 1, insert between a and b
        map1 = {v: v if v <= a else v + n2 - 2 for v in range(n1)}
        map2 = {p: map1[a], q: map1[b]}
        for i, v in enumerate(interior):
            map2[v] = a + 1 + i

    edges = {tuple(sorted((map1[u], map1[v]))) for u, v in g1.edges}
    edges |= {tuple(sorted((map2[u], map2[v]))) for u, v in g2.edges}
    coloring = _merge_colorings(g1, a, b, g2, p, q, map1, map2, n)
    return ConvexGraph(n, edges, coloring)


def kx_chain(x: int, blocks: int) -> ConvexGraph:
    """Chain of `blocks` copies of K_x, consecutive copies sharing one hull edge.

    The result has blocks*(x-2) + 2 vertices and blocks*C(x,2) - (blocks-1)
    edges.  Each new block is attached to the hull edge between the two
    highest-labeled vertices of the graph built so far.
    """
    if x < 3:
        raise ValueError("kx_chain needs x >= 3")
    if blocks < 1:
        raise ValueError("kx_chain needs at least one block")
    g = complete_graph(x)
    for _ in range(blocks - 1):
        g = concatenate(g, (g.n - 2, g.n - 1), complete_graph(x), (0, 1))
    return g


def kxx_alternating(x: int) -> ConvexGraph:
    """K_{x,x} with the two classes alternating around the polygon.

    Vertex i belongs to class i mod 2 and all x^2 bichromatic pairs are
    edges.  The worst edge is crossed 2*floor((x-1)/2)*ceil((x-1)/2) times.
    """
    if x < 1:
        raise ValueError("kxx_alternating needs x >= 1")
    n = 2 * x
    edges = [
        (i, j)
        for i in range(n)
        for j in range(i + 1, n)
        if (i + j) % 2 == 1
    ]
    return ConvexGraph(n, edges, coloring=[i % 2 for i in range(n)])


def kxx_chain(x: int, blocks: int) -> ConvexGraph:
    """Chain of `blocks` alternating K_{x,x} blocks glued on hull edges.

    Every hull edge of the alternating block is bichromatic, so the glued
    coloring stays proper; the result has blocks*(2x-2) + 2 vertices and
    blocks*x^2 - (blocks-1) edges, and the same maximum crossing count as
    a single block.
    """
    if x < 1:
        raise ValueError("kxx_chain needs x >= 1")
    if blocks < 1:
        raise ValueError("kxx_chain needs at least one block")
    g = kxx_alternating(x)
    for _ in range(blocks - 1):
        g = concatenate(g, (g.n - 2, g.n - 1), kxx_alternating(x), (0, 1))
    if g.coloring is None:
        raise AssertionError("kxx_chain lost its coloring while gluing")
    return g


@dataclass(frozen=True)
class OuterCopyGraph:
    """Two-page multigraph: base edges inside the hull, diagonal copies outside.

    ``inside_edges`` is every edge of the base graph; ``outside_edges``
    holds one copy of each diagonal, drawn in the outer page.  Two inside
    edges cross iff their chords interleave, two outside edges cross iff
    their chords interleave, and an inside edge never crosses an outside
    one.  Edge multiplicity is therefore at most 2.
    """

    base: ConvexGraph
    inside_edges: tuple[tuple[int, int], ...]
    outside_edges: tuple[tuple[int, int], ...]

    @property
    def total_edges(self) -> int:
        return len(self.inside_edges) + len(self.outside_edges)

    def multiplicity(self, edge) -> int:
        e = _normalize_edge(self.base.n, edge)
        return (e in self.inside_edges) + (e in self.outside_edges)


def outercopy(g: ConvexGraph) -> OuterCopyGraph:
    """Double every diagonal of g into the outer page.

    The total edge count is 2m - h where h is the number of hull edges
    present in g, hence always at least 2m - n.
    """
    inside = tuple(g.sorted_edges())
    outside = tuple(e for e in inside if chord_length(g.n, e) > 0)
    return OuterCopyGraph(base=g, inside_edges=inside, outside_edges=outside)


def outercopy_crossing_counts(oc: OuterCopyGraph) -> dict:
    """Crossing counts keyed by ("in" | "out", edge).

    Same-page pairs cross iff their chords interleave; cross-page pairs
    never do.
    """
    n = oc.base.n
    counts = {}
    for page, page_edges in (("in", oc.inside_edges), ("out", oc.outside_edges)):
        for e in page_edges:
            counts[(page, e)] = sum(
                1 for f in page_edges if chords_cross(n, e, f)
            )
    return counts
