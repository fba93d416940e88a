"""Exact maximum edge counts on few convex points, by branch and bound.

The optimization problem: among graphs on n points in convex position
whose every edge is crossed at most k times, how many edges can there be?
Four modes are supported.  "general" has no further constraint; the three
bipartite modes additionally require every edge to be bichromatic under a
two-coloring that is respectively fixed alternating (vertex parity),
consecutive (the two color classes are contiguous arcs, with the split
point part of the search), or free (all two-colorings, iterated up to
rotation, reflection, and color swap).

The solver enumerates candidate chords in a fixed order (increasing chord
length, then lexicographic) and branches include/exclude on the first
still-addable candidate.  Feasibility is monotone (an edge that cannot be
added now can never be added later), so each node filters its parent's
candidate list.  Pruning uses ``upper_prune``, an admissible optimistic
bound; in general mode the very first included edge is additionally
restricted to the lexicographically least chord of its length class,
which is safe because rotations act transitively on chords of any fixed
length.

Everything is deterministic: the incumbent only updates on strict
improvement, so repeated runs return byte-identical results, including
the witness.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .bounds import bipartite_upper, general_upper
from .errors import BudgetExceededError, NotApplicableError
from .geometry import (
    ConvexGraph,
    _normalize_edge,
    bipartition,
    chord_length,
    chords_cross,
    crossing_counts,
    is_outer_k_planar,
)

__all__ = [
    "MAX_SEARCH_N",
    "SEARCH_MODES",
    "SearchResult",
    "max_edges",
    "upper_prune",
    "canonical_form",
]

MAX_SEARCH_N = 12
SEARCH_MODES = (
    "general",
    "bipartite_free",
    "bipartite_alternating",
    "bipartite_consecutive",
)


@dataclass(frozen=True)
class SearchResult:
    max_edges: int
    witness: ConvexGraph
    nodes_explored: int
    proven_optimal: bool
    settings: dict


def canonical_form(g: ConvexGraph) -> tuple[tuple[int, int], ...]:
    """Lexicographically least edge list over all 2n dihedral relabelings."""
    n = g.n
    edges = g.sorted_edges()
    best = None
    for sign in (1, -1):
        for t in range(n):
            relabeled = sorted(
                tuple(sorted(((sign * a + t) % n, (sign * b + t) % n)))
                for a, b in edges
            )
            if best is None or relabeled < best:
                best = relabeled
    return tuple(best) if best is not None else ()


def _static_upper(n: int, k: int, bipartite: bool) -> int:
    """Floor of the smallest unconditionally valid closed-form upper bound.

    The conditional k = 4 table value is deliberately not used, and the
    closed forms are only consulted for n >= 3 (below that they can dip
    under the true optimum, which would make pruning unsound).  The
    bipartite table is taken in its weaker -(2k+5) form for the same
    reason.
    """
    vals = [float(math.comb(n, 2))]
    if n >= 3:
        for variant in ("small_k", "lazy", "common", "local"):
            if variant == "small_k" and k > 3:
                continue
            try:
                vals.append(general_upper(n, k, variant))
            except NotApplicableError:
                pass
        if bipartite:
            for variant in ("small_k", "lazy", "common", "local"):
                try:
                    if variant == "small_k":
                        vals.append(
                            bipartite_upper(n, k, variant, strict_statement=True)
                        )
                    else:
                        vals.append(bipartite_upper(n, k, variant))
                except NotApplicableError:
                    pass
    return math.floor(min(vals))


def _candidate_list(n: int, coloring) -> list[tuple[int, int]]:
    cands = [
        (a, b)
        for a in range(n)
        for b in range(a + 1, n)
        if coloring is None or coloring[a] != coloring[b]
    ]
    cands.sort(key=lambda e: (chord_length(n, e), e))
    return cands


def upper_prune(n: int, k: int, state, remaining, *, bipartite: bool = False) -> int:
    """Admissible optimistic bound on the best completion of a partial graph.

    ``state`` holds the edges already chosen (must itself be outer
    k-planar) and ``remaining`` the undecided candidates.  The bound is
    the minimum of three quantities: state plus the count of candidates
    that are still individually addable, the floored closed-form bound
    for (n, k), and a crossing-budget bound |state| + floor(capacity /
    c_min), where capacity is the total crossing headroom of the state
    edges and c_min > 0 the fewest crossings any addable candidate must
    pay against the state.  None of the three can undercut the true
    optimum of the subtree.
    """
    state_edges = sorted({_normalize_edge(n, e) for e in state})
    counts = crossing_counts(ConvexGraph(max(n, 2), state_edges))
    if any(c > k for c in counts.values()):
        raise ValueError("state is not outer k-planar")
    state_set = set(state_edges)
    feas_costs = []
    for f in {_normalize_edge(n, e) for e in remaining}:
        if f in state_set:
            continue
        crossed = [e for e in state_edges if chords_cross(n, f, e)]
        cost = len(crossed)
        if cost <= k and all(counts[e] < k for e in crossed):
            feas_costs.append(cost)
    bound = min(len(state_edges) + len(feas_costs), _static_upper(n, k, bipartite))
    if feas_costs:
        c_min = min(feas_costs)
        if c_min > 0:
            capacity = sum(k - c for c in counts.values())
            bound = min(bound, len(state_edges) + capacity // c_min)
    return bound


class _Incumbent:
    __slots__ = ("nodes", "budget", "best", "best_edges", "best_coloring")

    def __init__(self, budget):
        self.nodes = 0
        self.budget = budget
        self.best = -1
        self.best_edges: list[tuple[int, int]] = []
        self.best_coloring = None


def _solve(inc: _Incumbent, n: int, k: int, coloring, static_ub: int,
           use_root_symmetry: bool) -> None:
    """Branch and bound over one fixed coloring (None = unconstrained)."""
    cands = _candidate_list(n, coloring)
    m_cand = len(cands)
    cross = [0] * m_cand
    for i in range(m_cand):
        for j in range(i + 1, m_cand):
            if chords_cross(n, cands[i], cands[j]):
                cross[i] |= 1 << j
                cross[j] |= 1 << i

    root_reps = None
    if use_root_symmetry:
        root_reps = set()
        seen = set()
        for i, e in enumerate(cands):
            length = chord_length(n, e)
            if length not in seen:
                seen.add(length)
                root_reps.add(i)

    counts = [0] * m_cand
    included = 0
    sat = 0  # included edges whose crossing count has reached k
    cap = 0  # total crossing headroom sum(k - counts[e]) over included edges
    m_inc = 0

    def dfs(feas):
        nonlocal included, sat, cap, m_inc
        inc.nodes += 1
        if m_inc > inc.best:
            inc.best = m_inc
            inc.best_edges = [cands[i] for i in range(m_cand) if included >> i & 1]
            inc.best_coloring = coloring
        if inc.budget is not None and inc.nodes > inc.budget:
            raise BudgetExceededError("search node budget exceeded")
        if not feas:
            return
        ub = m_inc + len(feas)
        if static_ub < ub:
            ub = static_ub
        if included:
            c_min = min(c for _, c in feas)
            if c_min > 0:
                cap_bound = m_inc + cap // c_min
                if cap_bound < ub:
                    ub = cap_bound
        if ub <= inc.best:
            return
        (i0, c0) = feas[0]
        rest = feas[1:]
        if not (root_reps is not None and included == 0 and i0 not in root_reps):
            # include branch
            touched = cross[i0] & included
            included |= 1 << i0
            m_inc += 1
            cap += k - 2 * c0
            counts[i0] = c0
            newly_sat = (1 << i0) if c0 == k else 0
            t = touched
            while t:
                low = t & -t
                j = low.bit_length() - 1
                counts[j] += 1
                if counts[j] == k:
                    newly_sat |= low
                t ^= low
            sat |= newly_sat
            bit0 = 1 << i0
            new_feas = []
            for (i, c) in rest:
                ci = cross[i]
                c2 = c + 1 if ci & bit0 else c
                if c2 > k or ci & sat:
                    continue
                new_feas.append((i, c2))
            dfs(new_feas)
            # undo
            sat &= ~newly_sat
            t = touched
            while t:
                low = t & -t
                counts[low.bit_length() - 1] -= 1
                t ^= low
            counts[i0] = 0
            cap -= k - 2 * c0
            m_inc -= 1
            included &= ~(1 << i0)
        # exclude branch
        dfs(rest)

    dfs([(i, 0) for i in range(m_cand)])


def _canonical_colorings(n: int) -> list[tuple[int, ...]]:
    """All 2-colorings with vertex 0 on side 0, one per dihedral/swap orbit."""
    reps = []
    for bits in range(1 << (n - 1)):
        c = tuple(0 if i == 0 else (bits >> (i - 1)) & 1 for i in range(n))
        smallest = c
        for sign in (1, -1):
            for t in range(n):
                img = tuple(c[(sign * i + t) % n] for i in range(n))
                for flip in (0, 1):
                    cand = tuple(v ^ flip for v in img) if flip else img
                    if cand < smallest:
                        smallest = cand
        if c == smallest:
            reps.append(c)
    return reps


def _mode_colorings(n: int, mode: str):
    if mode == "general":
        return [None]
    if mode == "bipartite_alternating":
        return [tuple(i % 2 for i in range(n))]
    if mode == "bipartite_consecutive":
        return [(0,) * t + (1,) * (n - t) for t in range(1, n // 2 + 1)]
    if mode == "bipartite_free":
        return _canonical_colorings(n)
    raise ValueError(f"unknown mode {mode!r}; choose one of {SEARCH_MODES}")


def _validate_warm_start(warm: ConvexGraph, n: int, k: int, mode: str) -> ConvexGraph:
    if warm.n != n:
        raise ValueError(f"warm start has n={warm.n}, search wants n={n}")
    if not is_outer_k_planar(warm, k):
        raise ValueError("warm start is not outer k-planar for this k")
    if mode == "general":
        return warm
    if mode == "bipartite_alternating":
        if any((a + b) % 2 == 0 for a, b in warm.edges):
            raise ValueError("warm start has an edge inside a parity class")
        return warm.with_coloring([i % 2 for i in range(n)])
    if mode == "bipartite_consecutive":
        # Accept any rotation of a two-arc coloring: the anchored search
        # reaches the same maximum, so the edge count is a valid seed.
        for t in range(1, n):
            for s in range(n):
                coloring = tuple(0 if (i - s) % n < t else 1 for i in range(n))
                if all(coloring[a] != coloring[b] for a, b in warm.edges):
                    return warm.with_coloring(coloring)
        raise ValueError("warm start fits no consecutive two-coloring")
    if warm.coloring and all(warm.coloring[a] != warm.coloring[b] for a, b in warm.edges):
        return warm
    side = bipartition(warm)
    if side is None:
        raise ValueError("warm start is not bipartite")
    return warm.with_coloring(side)


def max_edges(n: int, k: int, mode: str = "general", *,
              node_budget: int | None = None,
              warm_start: ConvexGraph | None = None) -> SearchResult:
    """Exact maximum edge count over the mode's graphs on n convex points.

    Supported up to n = 12.  Raises BudgetExceededError (with the best
    incumbent attached as ``result``) if ``node_budget`` search nodes are
    exhausted first; otherwise the result is proven optimal.
    """
    n, k = int(n), int(k)
    if not 2 <= n <= MAX_SEARCH_N:
        raise ValueError(f"search supports 2 <= n <= {MAX_SEARCH_N} (got n={n})")
    if k < 0:
        raise ValueError("k must be non-negative")
    if mode not in SEARCH_MODES:
        raise ValueError(f"unknown mode {mode!r}; choose one of {SEARCH_MODES}")
    if mode == "bipartite_alternating" and n % 2:
        raise ValueError("alternating mode needs even n")
    settings = {"n": n, "k": k, "mode": mode}
    bipartite = mode != "general"
    static_ub = _static_upper(n, k, bipartite)
    inc = _Incumbent(node_budget)
    if warm_start is not None:
        warm = _validate_warm_start(warm_start, n, k, mode)
        inc.best = warm.m
        inc.best_edges = warm.sorted_edges()
        inc.best_coloring = warm.coloring
    try:
        for coloring in _mode_colorings(n, mode):
            _solve(inc, n, k, coloring, static_ub, use_root_symmetry=not bipartite)
    except BudgetExceededError as exc:
        witness = ConvexGraph(n, inc.best_edges, inc.best_coloring)
        partial = SearchResult(
            max_edges=inc.best,
            witness=witness,
            nodes_explored=inc.nodes,
            proven_optimal=False,
            settings=settings,
        )
        raise BudgetExceededError(
            f"node budget {node_budget} exceeded (best incumbent {inc.best})",
            result=partial,
        ) from exc
    witness = ConvexGraph(n, inc.best_edges, inc.best_coloring)
    return SearchResult(
        max_edges=inc.best,
        witness=witness,
        nodes_explored=inc.nodes,
        proven_optimal=True,
        settings=settings,
    )
