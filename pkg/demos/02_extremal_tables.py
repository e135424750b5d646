#!/usr/bin/env python3
"""Tables of the closed-form extremal values and the convexity mechanism.

For fixed k the maximum clique/star counts switch, as the host grows, from
the "one big clique" construction (ell = 2k+1) to the "small dominating
clique" construction (ell = k+1).  The sweep over ell is discretely convex,
so the maximum always sits at an endpoint; endpoint_max makes that visible.
"""

from turanmatch import (
    endpoint_max,
    ex_bip,
    ex_clique,
    ex_edges,
    ex_star,
    extremal_clique_count,
    extremal_star_count,
)

K = 3
print(f"k = {K}: extremal counts as the host grows")
print(f"{'n':>4} {'edges':>7} {'K_3':>7} {'star(1,2)':>10} {'bip(1,2)':>9}")
for n in range(2 * K + 1, 26, 3):
    print(
        f"{n:>4} {ex_edges(n, K):>7} {ex_clique(n, K, 3):>7}"
        f" {ex_star(n, K, 1, 2):>10} {ex_bip(n, K, 1, 2):>9}"
    )

print(f"\nclique-count sweep over ell for n = 12, k = {K}, s = 3:")
for ell in range(K + 1, 2 * K + 2):
    print(f"  ell = {ell}: {extremal_clique_count(12, K, ell, 3)}")
r = endpoint_max(lambda ell: extremal_clique_count(12, K, ell, 3), K + 1, 2 * K + 1)
print(f"endpoint_max -> argmax {r.argmax}, value {r.value}, convex {r.is_convex}")

print(f"\nstar(2,2) sweep over ell for n = 9, k = {K}:")
for ell in range(K + 1, 2 * K + 2):
    print(f"  ell = {ell}: {extremal_star_count(9, K, ell, 2, 2)}")
r = endpoint_max(lambda ell: extremal_star_count(9, K, ell, 2, 2), K + 1, 2 * K + 1)
print(f"endpoint_max -> argmax {r.argmax}, value {r.value}, convex {r.is_convex}")
