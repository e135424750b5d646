"""Exact matching numbers, bipartite maximum matching, and minimum vertex covers.

General graphs use memoized branch-and-bound over the bitmask of unused
vertices (exact for any input, practical to roughly 28 vertices).  Bipartite
graphs use augmenting paths; the minimum cover comes from the standard
alternating-reachability construction, so its size always equals the maximum
matching size.
"""

from __future__ import annotations

from .errors import CapacityError
from .graph import BipartiteGraph, Graph

MAX_MATCHING_VERTICES = 28


def _nu_masks(adj, free: int) -> int:
    """Maximum matching size among the vertices in ``free`` (0-based rows)."""
    memo: dict[int, int] = {}

    def rec(free: int) -> int:
        while free:
            b = free & -free
            if adj[b.bit_length() - 1] & free:
                break
            free ^= b  # vertex with no remaining neighbor never matters
        if not free:
            return 0
        cached = memo.get(free)
        if cached is not None:
            return cached
        b = free & -free
        v = b.bit_length() - 1
        fb = free ^ b
        best = rec(fb)
        nb = adj[v] & fb
        while nb:
            c = nb & -nb
            nb ^= c
            r = 1 + rec(fb ^ c)
            if r > best:
                best = r
        memo[free] = best
        return best

    return rec(free)


def _exists_matching(adj, free: int, r: int) -> bool:
    """True iff ``free`` spans a matching of size r."""
    if r <= 0:
        return True
    while free:
        b = free & -free
        if adj[b.bit_length() - 1] & free:
            break
        free ^= b
    else:
        return False
    if free.bit_count() < 2 * r:
        return False
    b = free & -free
    v = b.bit_length() - 1
    fb = free ^ b
    nb = adj[v] & fb
    while nb:
        c = nb & -nb
        nb ^= c
        if _exists_matching(adj, fb ^ c, r - 1):
            return True
    return _exists_matching(adj, fb, r)


def matching_number(g: Graph) -> int:
    """Exact maximum matching size of g."""
    if g.n > MAX_MATCHING_VERTICES:
        raise CapacityError(
            f"exact matching supported up to {MAX_MATCHING_VERTICES} vertices, got {g.n}"
        )
    return _nu_masks(g.adj, (1 << g.n) - 1)


# ---------------------------------------------------------------------------
# Bipartite matching and covers
# ---------------------------------------------------------------------------

def _bip_nu(rows, nx: int, ny: int, banned_x: int = 0, banned_y: int = 0):
    """Kuhn's augmenting paths.  Returns (size, match_y) where match_y[y]
    is the matched X-index or -1."""
    match_y = [-1] * ny
    visited = 0

    def augment(x: int) -> bool:
        nonlocal visited
        avail = rows[x] & ~visited
        while avail:
            b = avail & -avail
            avail ^= b
            visited |= b
            y = b.bit_length() - 1
            if match_y[y] < 0 or augment(match_y[y]):
                match_y[y] = x
                return True
            avail &= ~visited
        return False

    size = 0
    for x in range(nx):
        if banned_x >> x & 1:
            continue
        visited = banned_y
        if augment(x):
            size += 1
    return size, match_y


def bip_max_matching(bg: BipartiteGraph) -> list[tuple[int, int]]:
    """A maximum matching as sorted (x, y) label pairs.

    Among all maximum matchings, returns the lexicographically least edge
    sequence under (x, y) order, so output is reproducible.
    """
    rows = bg.biadj
    nx, ny = bg.nx, bg.ny
    size, _ = _bip_nu(rows, nx, ny)
    chosen: list[tuple[int, int]] = []
    used_x = used_y = 0
    for x in range(nx):
        if len(chosen) == size:
            break
        avail = rows[x] & ~used_y
        while avail:
            b = avail & -avail
            avail ^= b
            y = b.bit_length() - 1
            rest, _ = _bip_nu(rows, nx, ny, used_x | (1 << x), used_y | b)
            if rest == size - len(chosen) - 1:
                chosen.append((x + 1, y + 1))
                used_x |= 1 << x
                used_y |= b
                break
    return chosen


def koenig_cover(bg: BipartiteGraph) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Minimum vertex cover as (x_labels, y_labels), both sorted.

    Built from a maximum matching by alternating reachability from the
    unmatched X-vertices: cover = (X \\ reachable) + (Y & reachable).  Its
    size equals the maximum matching size and every edge touches it.
    """
    rows = bg.biadj
    nx, ny = bg.nx, bg.ny
    _, match_y = _bip_nu(rows, nx, ny)
    match_x = [-1] * nx
    for y, x in enumerate(match_y):
        if x >= 0:
            match_x[x] = y
    reach_x = 0
    for x in range(nx):
        if match_x[x] < 0:
            reach_x |= 1 << x
    reach_y = 0
    queue = [x for x in range(nx) if match_x[x] < 0]
    while queue:
        x = queue.pop()
        new_y = rows[x] & ~reach_y
        reach_y |= new_y
        while new_y:
            b = new_y & -new_y
            new_y ^= b
            x2 = match_y[b.bit_length() - 1]
            if x2 >= 0 and not reach_x >> x2 & 1:
                reach_x |= 1 << x2
                queue.append(x2)
    xs = tuple(x + 1 for x in range(nx) if not reach_x >> x & 1)
    ys = tuple(y + 1 for y in range(ny) if reach_y >> y & 1)
    return xs, ys


def bondy_chvatal_holds(g: Graph, u: int, v: int, k: int) -> bool:
    """Check one instance of the degree closure law for matchings.

    With {u, v} a non-edge: if the graph plus uv has matching number k+1 and
    d(u) + d(v) >= 2k+1 (degrees in g), then g itself must already have
    matching number k+1.  Returns True when that implication holds.
    """
    if u == v or not (1 <= u <= g.n and 1 <= v <= g.n):
        raise ValueError(f"labels ({u}, {v}) invalid for n={g.n}")
    if g.has_edge(u, v):
        raise ValueError(f"({u}, {v}) must be a non-edge")
    nu_plus = matching_number(g.add_edge(u, v))
    if nu_plus != k + 1:
        return True
    if g.degree(u) + g.degree(v) < 2 * k + 1:
        return True
    return matching_number(g) == k + 1
