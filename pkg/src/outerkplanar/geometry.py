"""Graphs on points in convex position, encoded purely combinatorially.

Vertices are the integers 0..n-1, read clockwise around a convex polygon.
Every edge is a straight chord, so whether two edges cross depends only on
the cyclic order of their four endpoints: {a, b} and {c, d} cross exactly
when one of c, d lies strictly between a and b along the circle and the
other does not.  No coordinates are ever computed.

Conventions used throughout the package:

* edges are stored as pairs (a, b) with a < b;
* the *length* of a chord is the number of vertices strictly between its
  endpoints on the smaller side, so hull edges are the chords of length 0
  and every other chord is a diagonal;
* a graph is outer k-planar when no edge is crossed more than k times.

The degeneracy helpers at the bottom exist because several of the density
arguments elsewhere in the package reduce to "every induced subgraph has a
low-degree vertex"; they are deliberately plain greedy implementations.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

__all__ = [
    "Chord",
    "ConvexGraph",
    "chord_length",
    "chords_cross",
    "crossing_counts",
    "max_crossing",
    "is_outer_k_planar",
    "hull_edges",
    "diagonals",
    "degeneracy_order",
    "greedy_color",
    "bipartition",
    "is_bipartite",
    "graph_to_json",
    "graph_from_json",
]


def _normalize_edge(n: int, edge) -> tuple[int, int]:
    """Return edge as (a, b) with 0 <= a < b < n, rejecting loops."""
    a, b = edge
    a, b = int(a), int(b)
    if a == b:
        raise ValueError(f"loop edge ({a}, {b}) is not allowed")
    if not (0 <= a < n and 0 <= b < n):
        raise ValueError(f"edge ({a}, {b}) has an endpoint outside 0..{n - 1}")
    return (a, b) if a < b else (b, a)


def chord_length(n: int, edge) -> int:
    """Number of vertices strictly between the endpoints, on the smaller side.

    The two endpoints split the remaining n-2 vertices into arcs of sizes
    g-1 and n-g-1 where g is the index gap; the length is the smaller of
    the two, so it ranges from 0 (hull edge) to floor((n-2)/2).
    """
    a, b = _normalize_edge(n, edge)
    gap = b - a
    return min(gap - 1, n - gap - 1)


@dataclass(frozen=True, order=True)
class Chord:
    """A chord of the convex polygon, normalized so that a < b."""

    a: int
    b: int

    def __post_init__(self):
        if self.a == self.b:
            raise ValueError("chord endpoints must differ")
        if self.a < 0 or self.b < 0:
            raise ValueError("chord endpoints must be non-negative")
        if self.a > self.b:
            a, b = self.b, self.a
            object.__setattr__(self, "a", a)
            object.__setattr__(self, "b", b)

    def length(self, n: int) -> int:
        return chord_length(n, (self.a, self.b))

    def is_hull(self, n: int) -> bool:
        return self.length(n) == 0

    def as_pair(self) -> tuple[int, int]:
        return (self.a, self.b)


def chords_cross(n: int, e1, e2) -> bool:
    """True iff the two chords cross in the convex drawing.

    Chords sharing an endpoint never cross.  Otherwise the endpoints of e2
    must strictly interleave with those of e1 around the circle, which for
    normalized pairs (a, b) and (c, d) means exactly one of c, d falls in
    the open interval (a, b).
    """
    a, b = _normalize_edge(n, e1)
    c, d = _normalize_edge(n, e2)
    if a in (c, d) or b in (c, d):
        return False
    return (a < c < b) != (a < d < b)


class ConvexGraph:
    """Immutable graph on n points in convex position.

    Parameters
    ----------
    n : int
        Vertex count, at least 2.
    edges : iterable of pairs
        Chords; stored normalized and deduplicated.
    coloring : sequence of {0, 1}, optional
        A two-sided vertex coloring (used by the bipartite constructions
        and searches).  Attaching a coloring does not by itself assert
        that every edge is bichromatic; callers that claim bipartiteness
        check that separately.
    """

    __slots__ = ("n", "edges", "coloring")

    def __init__(self, n: int, edges=(), coloring=None):
        n = int(n)
        if n < 2:
            raise ValueError("a convex graph needs at least 2 vertices")
        normalized = frozenset(_normalize_edge(n, e) for e in edges)
        if coloring is not None:
            coloring = tuple(int(c) for c in coloring)
            if len(coloring) != n:
                raise ValueError("coloring length must equal the vertex count")
            if any(c not in (0, 1) for c in coloring):
                raise ValueError("coloring values must be 0 or 1")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", normalized)
        object.__setattr__(self, "coloring", coloring)

    def __setattr__(self, name, value):
        raise AttributeError("ConvexGraph is immutable")

    @property
    def m(self) -> int:
        return len(self.edges)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for a, b in self.edges:
            deg[a] += 1
            deg[b] += 1
        return deg

    def adjacency(self) -> list[set[int]]:
        adj = [set() for _ in range(self.n)]
        for a, b in self.edges:
            adj[a].add(b)
            adj[b].add(a)
        return adj

    def with_coloring(self, coloring) -> "ConvexGraph":
        return ConvexGraph(self.n, self.edges, coloring)

    def __eq__(self, other):
        if not isinstance(other, ConvexGraph):
            return NotImplemented
        return (
            self.n == other.n
            and self.edges == other.edges
            and self.coloring == other.coloring
        )

    def __hash__(self):
        return hash((self.n, self.edges, self.coloring))

    def __repr__(self):
        extra = ", colored" if self.coloring is not None else ""
        return f"ConvexGraph(n={self.n}, m={self.m}{extra})"


def crossing_counts(g: ConvexGraph) -> dict[tuple[int, int], int]:
    """Per-edge crossing counts under the convex drawing.

    Plain O(m^2) pairwise test; the package only ever needs this at desk
    scale (the exact searches keep their own incremental counters).
    """
    edges = g.sorted_edges()
    counts = {e: 0 for e in edges}
    for i, e in enumerate(edges):
        for f in edges[i + 1 :]:
            if chords_cross(g.n, e, f):
                counts[e] += 1
                counts[f] += 1
    return counts


def max_crossing(g: ConvexGraph) -> int:
    counts = crossing_counts(g)
    return max(counts.values(), default=0)


def is_outer_k_planar(g: ConvexGraph, k: int) -> bool:
    """True iff every edge is crossed at most k times."""
    if k < 0:
        raise ValueError("k must be non-negative")
    return max_crossing(g) <= k


def hull_edges(g: ConvexGraph) -> list[tuple[int, int]]:
    """Edges of g that lie on the polygon boundary (chord length 0)."""
    return [e for e in g.sorted_edges() if chord_length(g.n, e) == 0]


def diagonals(g: ConvexGraph) -> list[tuple[int, int]]:
    """Edges of g that are not hull edges."""
    return [e for e in g.sorted_edges() if chord_length(g.n, e) > 0]


def degeneracy_order(g: ConvexGraph) -> tuple[list[int], int]:
    """Repeated minimum-degree removal, ties broken by smallest index.

    Returns
    -------
    order : list of int
        Vertices in removal order.
    degeneracy : int
        The largest degree observed at removal time.
    """
    adj = g.adjacency()
    alive = set(range(g.n))
    order = []
    degeneracy = 0
    while alive:
        v = min(alive, key=lambda u: (len(adj[u]), u))
        degeneracy = max(degeneracy, len(adj[v]))
        order.append(v)
        alive.discard(v)
        for u in adj[v]:
            adj[u].discard(v)
        adj[v] = set()
    return order, degeneracy


def greedy_color(g: ConvexGraph) -> tuple[dict[int, int], int]:
    """Greedy coloring along the reverse degeneracy order.

    Each vertex gets the smallest color absent from its already-colored
    neighbors, so the color count never exceeds degeneracy + 1.
    """
    order, _ = degeneracy_order(g)
    adj = g.adjacency()
    colors: dict[int, int] = {}
    for v in reversed(order):
        taken = {colors[u] for u in adj[v] if u in colors}
        c = 0
        while c in taken:
            c += 1
        colors[v] = c
    ncolors = 1 + max(colors.values(), default=0) if colors else 0
    return colors, ncolors


def bipartition(g: ConvexGraph):
    """A proper 2-coloring of g found by BFS, or None if none exists."""
    adj = g.adjacency()
    side = [-1] * g.n
    for start in range(g.n):
        if side[start] != -1:
            continue
        side[start] = 0
        queue = [start]
        while queue:
            v = queue.pop()
            for u in adj[v]:
                if side[u] == -1:
                    side[u] = 1 - side[v]
                    queue.append(u)
                elif side[u] == side[v]:
                    return None
    return tuple(side)


def is_bipartite(g: ConvexGraph) -> bool:
    return bipartition(g) is not None


# ---------------------------------------------------------------------------
# JSON interchange format
#
# {"n": <int>, "edges": [[a, b], ...], "coloring": [0, 1, ...]}
#
# Edges are serialized with a < b and sorted lexicographically; "coloring"
# is optional.  This is the format consumed and produced by the CLI.
# ---------------------------------------------------------------------------


def to_json_dict(g: ConvexGraph) -> dict:
    doc: dict = {"n": g.n, "edges": [[a, b] for a, b in g.sorted_edges()]}
    if g.coloring is not None:
        doc["coloring"] = list(g.coloring)
    return doc


def from_json_dict(doc) -> ConvexGraph:
    if not isinstance(doc, dict):
        raise ValueError("graph document must be a JSON object")
    if "n" not in doc:
        raise ValueError("graph document is missing 'n'")
    n = doc["n"]
    if not isinstance(n, int) or isinstance(n, bool):
        raise ValueError("'n' must be an integer")
    edges = doc.get("edges", [])
    if not isinstance(edges, list):
        raise ValueError("'edges' must be a list of pairs")
    pairs = []
    for e in edges:
        if not isinstance(e, (list, tuple)) or len(e) != 2:
            raise ValueError(f"edge entry {e!r} is not a pair")
        pairs.append(e)
    coloring = doc.get("coloring")
    unknown = set(doc) - {"n", "edges", "coloring"}
    if unknown:
        raise ValueError(f"unknown graph fields: {sorted(unknown)}")
    return ConvexGraph(n, pairs, coloring)


def graph_to_json(g: ConvexGraph) -> str:
    return json.dumps(to_json_dict(g))


def graph_from_json(text: str) -> ConvexGraph:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"malformed JSON: {exc}") from None
    return from_json_dict(doc)
