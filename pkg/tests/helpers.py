"""Shared test utilities: mask-indexed graph enumeration and naive counters.

The naive counters enumerate vertex subsets directly with itertools and touch
only Graph.has_edge / BipartiteGraph.has_edge, so they are an independent
code path from the bitmask kernels they are used to check.
"""

from itertools import combinations

from hypothesis import strategies as st

from turanmatch import BipartiteGraph, Graph


def edge_slots(n):
    return [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)]


def graph_from_mask(n, mask):
    slots = edge_slots(n)
    return Graph.from_edges(n, [slots[i] for i in range(len(slots)) if mask >> i & 1])


def all_graphs(n):
    for mask in range(1 << (n * (n - 1) // 2)):
        yield graph_from_mask(n, mask)


def bip_from_mask(nx, ny, mask):
    edges = []
    for x in range(nx):
        for y in range(ny):
            if mask >> (x * ny + y) & 1:
                edges.append((x + 1, y + 1))
    return BipartiteGraph.from_edges(nx, ny, edges)


def naive_count_cliques(g, s):
    return sum(
        1
        for sub in combinations(range(1, g.n + 1), s)
        if all(g.has_edge(u, v) for u, v in combinations(sub, 2))
    )


def naive_count_star(g, s, t):
    total = 0
    for c1 in combinations(range(1, g.n + 1), s):
        if not all(g.has_edge(u, v) for u, v in combinations(c1, 2)):
            continue
        rest = [v for v in range(1, g.n + 1) if v not in c1]
        for c2 in combinations(rest, t):
            if all(g.has_edge(u, v) for u in c1 for v in c2):
                total += 1
    return total


def naive_count_bip(bg, s, t):
    def oriented(a, b):
        total = 0
        for xs in combinations(range(1, bg.nx + 1), a):
            for ys in combinations(range(1, bg.ny + 1), b):
                if all(bg.has_edge(x, y) for x in xs for y in ys):
                    total += 1
        return total

    if s == t:
        return oriented(s, s)
    return oriented(s, t) + oriented(t, s)


@st.composite
def graphs(draw, min_n=1, max_n=7):
    n = draw(st.integers(min_n, max_n))
    mask = draw(st.integers(0, (1 << (n * (n - 1) // 2)) - 1))
    return graph_from_mask(n, mask)


@st.composite
def graphs_with_pair(draw, min_n=2, max_n=7):
    g = draw(graphs(min_n=min_n, max_n=max_n))
    i = draw(st.integers(1, g.n - 1))
    j = draw(st.integers(i + 1, g.n))
    return g, i, j


@st.composite
def bip_graphs(draw, max_nx=4, max_ny=5):
    nx = draw(st.integers(1, max_nx))
    ny = draw(st.integers(1, max_ny))
    mask = draw(st.integers(0, (1 << (nx * ny)) - 1))
    return bip_from_mask(nx, ny, mask)
