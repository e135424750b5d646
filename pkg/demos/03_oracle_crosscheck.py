#!/usr/bin/env python3
"""Cross-check the closed forms against exhaustive search, with witnesses.

The oracle never trusts a formula: it enumerates every labeled graph whose
matching number stays within the bound and maximizes the pattern count
directly.  It also re-derives the structural laws (shift monotonicity, the
degree closure, the shifted-graph classification) on small instances.
"""

from turanmatch import (
    ex_clique,
    ex_star,
    max_over_free,
    verify_bondy_chvatal,
    verify_shift_lemmas,
    verify_shifted_structure,
)

print("exhaustive maxima vs closed forms (general hosts):")
for n, k, s, t in [(6, 1, 2, None), (6, 2, 2, None), (6, 2, 3, None), (6, 2, 1, 2), (6, 1, 2, 2)]:
    w = max_over_free(n, k, s, t)
    formula = ex_clique(n, k, s) if t is None else ex_star(n, k, s, t)
    pattern = f"K_{s}" if t is None else f"star({s},{t})"
    tag = "OK " if w.value == formula else "BAD"
    print(f"  {tag} n={n} k={k} {pattern:>9}: oracle={w.value} formula={formula}"
          f"  witness edges={[tuple(e) for e in w.graph.edges()]}")

print("\nshift laws, exhaustive over all graphs on 5 vertices:")
for check in verify_shift_lemmas(5):
    print(f"  {check.name}: {check.cases} cases, {len(check.violations)} violations")

print("\nshift laws, 2000 random instances on 12 vertices (seed 1):")
for check in verify_shift_lemmas(12, samples=2000, seed=1):
    print(f"  {check.name}: {check.cases} cases, {len(check.violations)} violations")

print("\nevery shifted graph with matching number k fits an extremal host:")
for n, k in [(6, 1), (6, 2), (7, 3)]:
    (check,) = verify_shifted_structure(n, k)
    print(f"  n={n} k={k}: {check.cases} shifted graphs checked, {len(check.violations)} violations")

print("\ndegree closure, exhaustive on 5 vertices:")
(check,) = verify_bondy_chvatal(5)
print(f"  {check.name}: {check.cases} cases, {len(check.violations)} violations")
