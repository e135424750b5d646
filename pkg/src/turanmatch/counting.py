"""Exact subgraph-copy counters for cliques, clique-star patterns, and bipartite bicliques.

All counts are of subgraph copies, not induced copies: the independent side of
a pattern may carry extra host edges.  Counts are plain Python integers, so
they never overflow.
"""

from __future__ import annotations

from itertools import combinations
from math import comb
from typing import Iterator, NamedTuple

from .graph import BipartiteGraph, Graph


class StarCliquePair(NamedTuple):
    """One copy of the star pattern: clique side c1, fully-joined side c2.

    Valid in a host when c1 induces a clique, c1 and c2 are disjoint, and
    every c1-c2 pair is an edge; c2 may carry extra host edges.
    """

    c1: tuple[int, ...]
    c2: tuple[int, ...]


def _clique_top_sum(adj, n: int, s: int, t: int) -> int:
    """Sum of C(|common neighborhood|, t) over all s-cliques.

    Cliques are grown by ascending vertex index with adjacency-mask
    intersections; the t-side is closed in O(1) per clique via a binomial of
    the common neighborhood's popcount.
    """
    if s < 0 or t < 0:
        return 0
    if s == 0:
        return comb(n, t)
    total = 0

    def rec(cand: int, common: int, left: int) -> None:
        nonlocal total
        if left == 0:
            total += comb(common.bit_count(), t)
            return
        m = cand
        while m:
            if m.bit_count() < left:
                return
            b = m & -m
            m ^= b
            nc = common & adj[b.bit_length() - 1]
            rec(nc & m, nc, left - 1)

    full = (1 << n) - 1
    rec(full, full, s)
    return total


def count_cliques(g: Graph, s: int) -> int:
    """Number of s-subsets of vertices inducing a clique (0 when s > n)."""
    if s < 0:
        return 0
    return _clique_top_sum(g.adj, g.n, s, 0)


def star_pairs(g: Graph, s: int, t: int) -> Iterator[StarCliquePair]:
    """Yield every StarCliquePair of g with |c1| = s, |c2| = t (sorted labels).

    Materializes what count_star only tallies; the yield count always equals
    count_star(g, s, t).
    """
    if s < 1 or t < 1:
        raise ValueError(f"need s >= 1 and t >= 1, got s={s}, t={t}")
    adj = g.adj

    def labels(mask: int) -> list[int]:
        out = []
        while mask:
            b = mask & -mask
            mask ^= b
            out.append(b.bit_length())
        return out

    def rec(cand: int, common: int, chosen: tuple[int, ...]) -> Iterator[StarCliquePair]:
        if len(chosen) == s:
            for c2 in combinations(labels(common), t):
                yield StarCliquePair(chosen, c2)
            return
        m = cand
        while m:
            b = m & -m
            m ^= b
            nc = common & adj[b.bit_length() - 1]
            yield from rec(nc & m, nc, chosen + (b.bit_length(),))

    full = (1 << g.n) - 1
    yield from rec(full, full, ())


def count_star(g: Graph, s: int, t: int) -> int:
    """Number of ordered pairs (C1, C2): C1 an s-clique, C2 a disjoint t-set
    completely joined to C1.

    For t >= 2 this equals the number of subgraph copies of the pattern
    "s-clique fully joined to a t-independent-set", because the two sides are
    distinguishable by degree.  For t = 1 each (s+1)-clique is counted s+1
    times (once per choice of the single outside vertex).
    """
    if s < 1 or t < 1:
        raise ValueError(f"need s >= 1 and t >= 1, got s={s}, t={t}")
    return _clique_top_sum(g.adj, g.n, s, t)


def _oriented_bip(rows, ny: int, a: int, b: int) -> int:
    """Sum of C(|common Y-neighborhood|, b) over a-subsets of X."""
    if a == 0:
        return comb(ny, b)
    nx = len(rows)
    total = 0

    def rec(start: int, common: int, left: int) -> None:
        nonlocal total
        if left == 0:
            total += comb(common.bit_count(), b)
            return
        if not common and b:
            return
        for x in range(start, nx - left + 1):
            rec(x + 1, common & rows[x], left - 1)

    rec(0, (1 << ny) - 1, a)
    return total


def count_bip(bg: BipartiteGraph, s: int, t: int) -> int:
    """Number of complete-bipartite (s, t) copies.

    For s != t both orientations are summed (an s-set in either part paired
    with a t-set in the other); for s = t a single term avoids double
    counting the same unlabeled copy.
    """
    if s < 1 or t < 1:
        raise ValueError(f"need s >= 1 and t >= 1, got s={s}, t={t}")
    first = _oriented_bip(bg.biadj, bg.ny, s, t)
    if s == t:
        return first
    return first + _oriented_bip(bg.biadj, bg.ny, t, s)
