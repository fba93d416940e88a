"""Exact extremal edge counts by branch and bound, with certificates."""

from outerkplanar import (
    BudgetExceededError,
    canonical_form,
    crossing_counts,
    kxx_alternating,
    max_edges,
)

# maximum edges of an outer k-planar graph on n convex points
print("max edges, general mode (rows n=4..9, cols k=0..3):")
for n in range(4, 10):
    row = [max_edges(n, k).max_edges for k in range(4)]
    print(f"  n={n}: {row}")

res = max_edges(8, 2)
print(f"\nwitness for (n=8, k=2): {res.max_edges} edges, "
      f"{res.nodes_explored} nodes explored")
print("  edges:", res.witness.sorted_edges())
print("  worst crossing:", max(crossing_counts(res.witness).values()))

# bipartite flavors restrict where the two color classes may sit
print("\n(n=6, k=2) by vertex-coloring regime:")
for mode in ("general", "bipartite_free", "bipartite_alternating",
             "bipartite_consecutive"):
    r = max_edges(6, 2, mode)
    print(f"  {mode:<24} {r.max_edges}")

# the alternating optimum at (6, 2) is exactly the alternating K_{3,3}
res = max_edges(6, 2, "bipartite_alternating")
print("\nalternating witness == K_3,3?",
      canonical_form(res.witness) == canonical_form(kxx_alternating(3)))

# budgets cut the search off but still hand back the incumbent
try:
    max_edges(8, 2, node_budget=20)
except BudgetExceededError as exc:
    partial = exc.result
    print(f"\nbudget 20 on (8,2): stopped at {partial.nodes_explored} nodes "
          f"with incumbent {partial.max_edges} "
          f"(true optimum {max_edges(8, 2).max_edges})")

# a known-good graph seeds the incumbent and shrinks the tree
seed = max_edges(6, 2).witness
warm = max_edges(6, 2, warm_start=seed)
cold = max_edges(6, 2)
print(f"warm start: {warm.nodes_explored} nodes vs cold "
      f"{cold.nodes_explored}")
