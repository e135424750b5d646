"""Brute-force ground truth: exhaustive search over small labeled graphs.

Everything here is independent of the closed-form evaluators: maxima come
from enumerating all labeled graphs (bitmasks over the C(n,2) edge slots)
with matching number at most k, and the structural laws are checked instance
by instance, reporting any counterexample in full.

Enumeration prunes a branch as soon as the partial graph's matching number
exceeds k, which discards only graphs whose every completion is also over
the bound.  Witness ties break on the smallest edge mask under the canonical
lexicographic slot order, so merges are order independent.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from multiprocessing import get_context

from .counting import _clique_top_sum, _oriented_bip, count_bip
from .errors import CapacityError, ParameterRangeError
from .extremal import ExtremalParams, binom, bip_split_count, bip_split_count_sym
from .graph import BipartiteGraph, Graph, extremal_graph
from .matching import _bip_nu, _exists_matching, _nu_masks, koenig_cover
from .shifting import _shift_adj, shifted_graphs

MAX_ORACLE_VERTICES = 7
MAX_ORACLE_BIP_SLOTS = 20


@dataclass(frozen=True)
class Witness:
    """An extremal graph found by exhaustive search, for auditability."""

    graph: Graph | BipartiteGraph
    value: int
    params: ExtremalParams


@dataclass(frozen=True)
class Check:
    """Outcome of one verified law: case count plus full counterexamples."""

    name: str
    cases: int
    violations: tuple[str, ...] = ()
    seed: int | None = None

    @property
    def ok(self) -> bool:
        return not self.violations


def _edge_slots(n: int) -> list[tuple[int, int]]:
    return [(u, v) for u in range(n) for v in range(u + 1, n)]


def _rows_from_mask(n: int, mask: int, slots) -> list[int]:
    rows = [0] * n
    while mask:
        b = mask & -mask
        mask ^= b
        u, v = slots[b.bit_length() - 1]
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return rows


def _edge_text(rows) -> str:
    pairs = []
    for u in range(len(rows)):
        m = rows[u] >> (u + 1) << (u + 1)
        while m:
            b = m & -m
            m ^= b
            pairs.append(f"({u + 1},{b.bit_length()})")
    return "{" + " ".join(pairs) + "}"


# ---------------------------------------------------------------------------
# Exhaustive maxima over matching-bounded graphs
# ---------------------------------------------------------------------------

def iter_free_graphs(n: int, k: int):
    """Yield every labeled graph on 1..n with matching number <= k.

    Depth-first over the edge slots; a branch dies as soon as the partial
    graph already has matching number k+1.
    """
    if n > MAX_ORACLE_VERTICES:
        raise CapacityError(f"exhaustive enumeration capped at n <= {MAX_ORACLE_VERTICES}")
    if n < 0 or k < 0:
        raise ValueError(f"need n, k >= 0, got n={n}, k={k}")
    slots = _edge_slots(n)
    adj = [0] * n
    full = (1 << n) - 1

    def rec(idx: int, nu: int):
        if idx == len(slots):
            yield Graph(n, adj)
            return
        yield from rec(idx + 1, nu)
        u, v = slots[idx]
        inc = _exists_matching(adj, full ^ (1 << u) ^ (1 << v), nu)
        if not (nu == k and inc):
            adj[u] |= 1 << v
            adj[v] |= 1 << u
            yield from rec(idx + 1, nu + (1 if inc else 0))
            adj[u] &= ~(1 << v)
            adj[v] &= ~(1 << u)

    yield from rec(0, 0)


def _scan_free_max(n, k, s, t, prefix_mask, prefix_len):
    """Best (value, mask) over free graphs extending a fixed slot prefix."""
    slots = _edge_slots(n)
    adj = [0] * n
    full = (1 << n) - 1
    nu = 0
    for idx in range(prefix_len):
        if prefix_mask >> idx & 1:
            u, v = slots[idx]
            inc = _exists_matching(adj, full ^ (1 << u) ^ (1 << v), nu)
            if nu == k and inc:
                return None
            adj[u] |= 1 << v
            adj[v] |= 1 << u
            nu += 1 if inc else 0
    best_value = -1
    best_mask = 0

    def rec(idx: int, mask: int, nu: int) -> None:
        nonlocal best_value, best_mask
        if idx == len(slots):
            value = _clique_top_sum(adj, n, s, t)
            if value > best_value or (value == best_value and mask < best_mask):
                best_value = value
                best_mask = mask
            return
        rec(idx + 1, mask, nu)
        u, v = slots[idx]
        inc = _exists_matching(adj, full ^ (1 << u) ^ (1 << v), nu)
        if not (nu == k and inc):
            adj[u] |= 1 << v
            adj[v] |= 1 << u
            rec(idx + 1, mask | (1 << idx), nu + (1 if inc else 0))
            adj[u] &= ~(1 << v)
            adj[v] &= ~(1 << u)

    rec(prefix_len, prefix_mask, nu)
    return best_value, best_mask


def _merge_best(results):
    best = None
    for r in results:
        if r is None:
            continue
        if best is None or r[0] > best[0] or (r[0] == best[0] and r[1] < best[1]):
            best = r
    return best


def max_over_free(n: int, k: int, s: int, t: int | None = None, jobs: int = 1) -> Witness:
    """Exact maximum of a pattern count over all n-vertex graphs with
    matching number <= k, plus a witness graph.

    ``t is None`` counts s-cliques; otherwise (s-clique joined to t-set)
    pairs.  ``jobs`` partitions the slot prefixes across worker processes;
    the merged result is identical for any job count.
    """
    if n > MAX_ORACLE_VERTICES:
        raise CapacityError(f"exhaustive search capped at n <= {MAX_ORACLE_VERTICES}")
    if n < 0 or k < 0 or s < 1 or (t is not None and t < 1) or jobs < 1:
        raise ValueError(f"bad arguments n={n}, k={k}, s={s}, t={t}, jobs={jobs}")
    tt = 0 if t is None else t
    slots = _edge_slots(n)
    if jobs > 1 and slots:
        plen = min(len(slots), (4 * jobs - 1).bit_length())
        tasks = [(n, k, s, tt, pm, plen) for pm in range(1 << plen)]
        with get_context("fork").Pool(jobs) as pool:
            results = pool.starmap(_scan_free_max, tasks)
    else:
        results = [_scan_free_max(n, k, s, tt, 0, 0)]
    value, mask = _merge_best(results)
    graph = Graph(n, _rows_from_mask(n, mask, slots))
    return Witness(graph, value, ExtremalParams(n=n, k=k, s=s, t=t))


def _scan_bip_max(nx, ny, k, s, t, lo, hi):
    """Best (value, mask) over biadjacency masks in [lo, hi) with nu <= k."""
    best_value = -1
    best_mask = 0
    row_bits = (1 << ny) - 1
    for mask in range(lo, hi):
        rows = [(mask >> (x * ny)) & row_bits for x in range(nx)]
        size, _ = _bip_nu(rows, nx, ny)
        if size > k:
            continue
        value = _oriented_bip(rows, ny, s, t)
        if s != t:
            value += _oriented_bip(rows, ny, t, s)
        if value > best_value or (value == best_value and mask < best_mask):
            best_value = value
            best_mask = mask
    return (best_value, best_mask) if best_value >= 0 else None


def max_over_free_bip(nx: int, ny: int, k: int, s: int, t: int, jobs: int = 1) -> Witness:
    """Exact maximum of the (s, t)-biclique count over bipartite graphs with
    parts of sizes nx, ny and matching number <= k, plus a witness."""
    if nx * ny > MAX_ORACLE_BIP_SLOTS:
        raise CapacityError(f"exhaustive bipartite search capped at nx*ny <= {MAX_ORACLE_BIP_SLOTS}")
    if nx < 0 or ny < 0 or k < 0 or s < 1 or t < 1 or jobs < 1:
        raise ValueError(f"bad arguments nx={nx}, ny={ny}, k={k}, s={s}, t={t}, jobs={jobs}")
    total = 1 << (nx * ny)
    if jobs > 1 and total >= 4 * jobs:
        chunk = total // (4 * jobs)
        bounds = list(range(0, total, chunk)) + [total]
        tasks = [(nx, ny, k, s, t, bounds[i], bounds[i + 1]) for i in range(len(bounds) - 1)]
        with get_context("fork").Pool(jobs) as pool:
            results = pool.starmap(_scan_bip_max, tasks)
    else:
        results = [_scan_bip_max(nx, ny, k, s, t, 0, total)]
    value, mask = _merge_best(results)
    row_bits = (1 << ny) - 1
    rows = [(mask >> (x * ny)) & row_bits for x in range(nx)]
    return Witness(BipartiteGraph(nx, ny, rows), value, ExtremalParams(n=nx, k=k, s=s, t=t))


# ---------------------------------------------------------------------------
# Law verification with counterexample reports
# ---------------------------------------------------------------------------

def verify_shift_lemmas(
    n: int,
    samples: int | None = None,
    edge_prob: float = 0.5,
    seed: int = 0,
    max_s: int = 3,
    max_t: int = 3,
    include: tuple[str, ...] = ("edges", "matching", "cliques", "stars"),
) -> list[Check]:
    """Check the shift laws on every sampled (graph, i < j) instance.

    Exhaustive mode (samples is None) covers all labeled graphs on 1..n and
    all pairs; random mode draws ``samples`` (graph, pair) instances with the
    given edge probability from a seeded Mersenne Twister generator.

    Laws: edge-count conservation; matching number never grows; clique counts
    (sizes 2..max_s) and star-pair counts (sides up to max_s, max_t) never
    shrink.
    """
    slots = _edge_slots(n)
    full = (1 << n) - 1
    rng_seed = None
    if samples is None:
        if n > 6:
            raise CapacityError("exhaustive shift verification capped at n <= 6")
        if n < 0:
            raise ValueError(f"need n >= 0, got n={n}")

        def instances():
            for mask in range(1 << len(slots)):
                rows = _rows_from_mask(n, mask, slots)
                for i, j in slots:
                    yield rows, i, j
    else:
        if n < 2:
            raise ValueError("random mode needs n >= 2")
        if n > 28:
            raise CapacityError("random shift verification capped at n <= 28")
        if not 0.0 <= edge_prob <= 1.0:
            raise ValueError(f"edge probability must be in [0, 1], got {edge_prob}")
        rng_seed = seed
        rng = random.Random(seed)

        def instances():
            for _ in range(samples):
                mask = 0
                for idx in range(len(slots)):
                    if rng.random() < edge_prob:
                        mask |= 1 << idx
                i = rng.randrange(n - 1)
                j = rng.randrange(i + 1, n)
                yield _rows_from_mask(n, mask, slots), i, j

    bad: dict[str, list[str]] = {name: [] for name in include}
    cases = 0
    for rows, i, j in instances():
        cases += 1
        image = _shift_adj(rows, i, j)
        where = f"G={_edge_text(rows)} i={i + 1} j={j + 1}"
        if "edges" in bad:
            e0 = sum(r.bit_count() for r in rows)
            e1 = sum(r.bit_count() for r in image)
            if e0 != e1:
                bad["edges"].append(f"{where}: edges {e0 // 2} -> {e1 // 2}")
        if "matching" in bad:
            nu0 = _nu_masks(rows, full)
            nu1 = _nu_masks(image, full)
            if nu1 > nu0:
                bad["matching"].append(f"{where}: matching {nu0} -> {nu1}")
        if "cliques" in bad:
            for s in range(2, max_s + 1):
                c0 = _clique_top_sum(rows, n, s, 0)
                c1 = _clique_top_sum(image, n, s, 0)
                if c1 < c0:
                    bad["cliques"].append(f"{where}: {s}-cliques {c0} -> {c1}")
        if "stars" in bad:
            for s in range(1, max_s + 1):
                for t in range(1, max_t + 1):
                    c0 = _clique_top_sum(rows, n, s, t)
                    c1 = _clique_top_sum(image, n, s, t)
                    if c1 < c0:
                        bad["stars"].append(f"{where}: star({s},{t}) {c0} -> {c1}")

    titles = {
        "edges": "edge-conservation",
        "matching": "matching-monotone",
        "cliques": "clique-monotone",
        "stars": "star-monotone",
    }
    return [Check(titles[name], cases, tuple(bad[name]), rng_seed) for name in include]


def verify_shifted_structure(n: int, k: int) -> list[Check]:
    """Every shifted graph on 1..n with matching number exactly k must be a
    subgraph of the canonical extremal graph for some ell in [k+1, 2k+1]."""
    if n > MAX_ORACLE_VERTICES:
        raise CapacityError(f"capped at n <= {MAX_ORACLE_VERTICES}")
    if k < 0:
        raise ValueError(f"need k >= 0, got k={k}")
    if n < 2 * k + 1:
        raise ParameterRangeError(
            f"only the n >= 2k+1 regime is verified, got n={n}, k={k}"
        )
    hosts = [extremal_graph(n, k, ell).adj for ell in range(k + 1, 2 * k + 2)]
    full = (1 << n) - 1
    cases = 0
    violations = []
    for g in shifted_graphs(n):
        if _nu_masks(g.adj, full) != k:
            continue
        cases += 1
        if not any(all(row & ~h[a] == 0 for a, row in enumerate(g.adj)) for h in hosts):
            violations.append(f"G={_edge_text(g.adj)} fits no host, k={k}")
    return [Check("shifted-subgraph-cover", cases, tuple(violations))]


def verify_bondy_chvatal(n: int) -> list[Check]:
    """Degree-closure law on every (graph, non-edge) pair on 1..n.

    For each instance let k+1 be the matching number after adding the edge;
    if both endpoint degrees sum to at least 2k+1 the matching number must
    not have grown.
    """
    if n > MAX_ORACLE_VERTICES:
        raise CapacityError(f"capped at n <= {MAX_ORACLE_VERTICES}")
    if n < 0:
        raise ValueError(f"need n >= 0, got n={n}")
    slots = _edge_slots(n)
    full = (1 << n) - 1
    cases = 0
    violations = []
    for mask in range(1 << len(slots)):
        rows = _rows_from_mask(n, mask, slots)
        nu = _nu_masks(rows, full)
        for idx, (u, v) in enumerate(slots):
            if mask >> idx & 1:
                continue
            cases += 1
            grew = _exists_matching(rows, full ^ (1 << u) ^ (1 << v), nu)
            if grew and rows[u].bit_count() + rows[v].bit_count() >= 2 * nu + 1:
                violations.append(
                    f"G={_edge_text(rows)} uv=({u + 1},{v + 1}) k={nu}: "
                    f"degrees reach 2k+1 yet adding uv raises the matching number"
                )
    return [Check("degree-closure", cases, tuple(violations))]


def verify_koenig_gstar(
    nx: int,
    ny: int,
    k: int,
    pairs: tuple[tuple[int, int], ...] = ((1, 1), (1, 2), (2, 2)),
) -> list[Check]:
    """For every bipartite graph with matching number exactly k: the minimum
    cover has size k and covers everything; saturating the cover sides yields
    a supergraph whose biclique counts dominate the original and match the
    closed-form split count at x = |X-side of the cover|."""
    if nx * ny > MAX_ORACLE_BIP_SLOTS:
        raise CapacityError(f"capped at nx*ny <= {MAX_ORACLE_BIP_SLOTS}")
    if nx < 0 or ny < 0 or k < 0:
        raise ValueError(f"need nx, ny, k >= 0, got nx={nx}, ny={ny}, k={k}")
    row_bits = (1 << ny) - 1
    full_y = row_bits
    cases = 0
    dual_bad: list[str] = []
    contain_bad: list[str] = []
    mono_bad: list[str] = []
    formula_bad: list[str] = []
    for mask in range(1 << (nx * ny)):
        rows = [(mask >> (x * ny)) & row_bits for x in range(nx)]
        size, _ = _bip_nu(rows, nx, ny)
        if size != k:
            continue
        cases += 1
        bg = BipartiteGraph(nx, ny, rows)
        xs, ys = koenig_cover(bg)
        where = f"G(X={nx},Y={ny})={bg.edges()}"
        xs_mask = 0
        for x in xs:
            xs_mask |= 1 << (x - 1)
        ys_mask = 0
        for y in ys:
            ys_mask |= 1 << (y - 1)
        covered = all(
            rows[x] & ~ys_mask == 0 for x in range(nx) if not xs_mask >> x & 1
        )
        if len(xs) + len(ys) != k or not covered:
            dual_bad.append(f"{where}: cover ({xs}, {ys}) vs matching {k}")
            continue
        star_rows = [full_y if xs_mask >> x & 1 else ys_mask for x in range(nx)]
        if any(rows[x] & ~star_rows[x] for x in range(nx)):
            contain_bad.append(f"{where}: not contained in its saturated host")
            continue
        gstar = BipartiteGraph(nx, ny, star_rows)
        x_count = len(xs)
        for s, t in pairs:
            c_g = count_bip(bg, s, t)
            c_star = count_bip(gstar, s, t)
            if c_g > c_star:
                mono_bad.append(f"{where} (s,t)=({s},{t}): {c_g} > {c_star}")
            expected = _gstar_expected(nx, ny, k, x_count, s, t)
            if nx == ny:
                closed = (
                    bip_split_count(nx, k, x_count, s, s)
                    if s == t
                    else bip_split_count_sym(nx, k, x_count, s, t)
                )
                if closed != expected:
                    formula_bad.append(
                        f"{where} (s,t)=({s},{t}): split-count {closed} != {expected}"
                    )
            if c_star != expected:
                formula_bad.append(
                    f"{where} (s,t)=({s},{t}): host count {c_star} != formula {expected}"
                )
    return [
        Check("koenig-duality", cases, tuple(dual_bad)),
        Check("gstar-contains", cases, tuple(contain_bad)),
        Check("gstar-monotone", cases, tuple(mono_bad)),
        Check("gstar-formula", cases, tuple(formula_bad)),
    ]


def _gstar_expected(nx: int, ny: int, k: int, x: int, s: int, t: int) -> int:
    def orient(a: int, b: int) -> int:
        return (
            binom(x, a) * binom(ny, b)
            + binom(nx, a) * binom(k - x, b)
            - binom(x, a) * binom(k - x, b)
        )

    if s == t:
        return orient(s, s)
    return orient(s, t) + orient(t, s)
