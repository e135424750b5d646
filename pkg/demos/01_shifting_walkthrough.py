#!/usr/bin/env python3
"""Walk through the shift operation on a small graph.

Shows a single edge shift, a whole-graph shift, compression to a shifted
fixpoint, and the three quantities the operation is guaranteed to respect:
edge count (equal), matching number (never larger), clique counts (never
smaller).
"""

from turanmatch import (
    Graph,
    compress,
    count_cliques,
    count_star,
    is_shifted,
    matching_number,
    serialize_graph,
    shift_edge,
    shift_graph,
)

g = Graph.from_edges(6, [(2, 3), (3, 5), (4, 5), (5, 6), (2, 6)])
print("start graph (a 5-cycle on labels 2..6):")
print(serialize_graph(g))

print("single edge images under the (1, 5) shift:")
for e in g.edges():
    print(f"  {tuple(e)} -> {tuple(shift_edge(g, 1, 5, e))}")

h = shift_graph(g, 1, 5)
print("\nafter shifting the whole graph with (1, 5):")
print(serialize_graph(h))
print(f"edges   {g.m} -> {h.m}   (always equal)")
print(f"nu      {matching_number(g)} -> {matching_number(h)}   (never grows)")
print(f"K_3     {count_cliques(g, 3)} -> {count_cliques(h, 3)}   (never shrinks)")
print(f"star(1,2) {count_star(g, 1, 2)} -> {count_star(h, 1, 2)}   (never shrinks)")

c = compress(g)
print("\ncompressed to a fixpoint (lexicographic sweeps):")
print(serialize_graph(c))
print(f"is_shifted: {is_shifted(c)}, edges {c.m}, nu {matching_number(c)}")
print(f"compress is idempotent: {compress(c) == c}")
