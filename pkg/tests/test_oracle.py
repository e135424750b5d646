import pytest

from helpers import all_graphs
from turanmatch import (
    CapacityError,
    ParameterRangeError,
    complete_graph,
    count_bip,
    count_cliques,
    count_star,
    ex_bip,
    ex_clique,
    iter_free_graphs,
    matching_number,
    max_over_free,
    max_over_free_bip,
    verify_bondy_chvatal,
    verify_koenig_gstar,
    verify_shift_lemmas,
    verify_shifted_structure,
)


def test_iter_free_graphs_matches_filtered_enumeration():
    for n in (3, 4, 5):
        for k in (0, 1, 2):
            direct = set(iter_free_graphs(n, k))
            filtered = {g for g in all_graphs(n) if matching_number(g) <= k}
            assert direct == filtered


def test_max_over_free_spot_values():
    w = max_over_free(5, 2, 2)
    assert w.value == 10 and w.graph == complete_graph(5)
    assert max_over_free(5, 1, 2).value == 4
    assert max_over_free(7, 1, 2).value == 6
    assert max_over_free(5, 2, 1, 2).value == 30


def test_witnesses_are_valid():
    for n, k, s, t in ((5, 1, 2, None), (5, 2, 3, None), (5, 1, 1, 2)):
        w = max_over_free(n, k, s, t)
        assert matching_number(w.graph) <= k
        recount = count_cliques(w.graph, s) if t is None else count_star(w.graph, s, t)
        assert recount == w.value


def test_max_over_free_capacity_and_arguments():
    with pytest.raises(CapacityError):
        max_over_free(8, 1, 2)
    with pytest.raises(ValueError):
        max_over_free(5, 1, 0)
    with pytest.raises(ValueError):
        max_over_free(5, -1, 2)


def test_max_over_free_jobs_merge_is_identical():
    seq = max_over_free(5, 2, 2, jobs=1)
    par = max_over_free(5, 2, 2, jobs=2)
    assert (seq.value, seq.graph) == (par.value, par.graph)
    seq = max_over_free(6, 1, 1, 2, jobs=1)
    par = max_over_free(6, 1, 1, 2, jobs=3)
    assert (seq.value, seq.graph) == (par.value, par.graph)


def test_max_over_free_bip_spot_values():
    assert max_over_free_bip(3, 3, 3, 1, 1).value == 9
    assert max_over_free_bip(3, 3, 1, 1, 1).value == ex_bip(3, 1, 1, 1) == 3
    w = max_over_free_bip(4, 4, 2, 1, 1)
    assert w.value == 8
    assert len(w.graph.edges()) == 8 and count_bip(w.graph, 1, 1) == 8


def test_max_over_free_bip_capacity_and_jobs():
    with pytest.raises(CapacityError):
        max_over_free_bip(5, 5, 2, 1, 1)
    seq = max_over_free_bip(3, 3, 1, 1, 2, jobs=1)
    par = max_over_free_bip(3, 3, 1, 1, 2, jobs=2)
    assert (seq.value, seq.graph) == (par.value, par.graph)


def test_verify_shift_lemmas_exhaustive():
    for checks in (verify_shift_lemmas(4), verify_shift_lemmas(1)):
        assert all(ch.ok for ch in checks)
    names = [ch.name for ch in verify_shift_lemmas(3)]
    assert names == ["edge-conservation", "matching-monotone", "clique-monotone", "star-monotone"]


def test_verify_shift_lemmas_random_embeds_seed():
    checks = verify_shift_lemmas(8, samples=200, seed=123)
    assert all(ch.ok for ch in checks)
    assert all(ch.seed == 123 for ch in checks)
    assert all(ch.cases == 200 for ch in checks)


def test_verify_shift_lemmas_validation():
    with pytest.raises(CapacityError):
        verify_shift_lemmas(7)
    with pytest.raises(ValueError):
        verify_shift_lemmas(1, samples=10)
    with pytest.raises(ValueError):
        verify_shift_lemmas(5, samples=10, edge_prob=1.5)


def test_verify_shifted_structure_small():
    for n, k in ((5, 1), (5, 2), (6, 1)):
        (check,) = verify_shifted_structure(n, k)
        assert check.ok
        assert check.cases > 0


def test_verify_shifted_structure_rejects_unverified_regime():
    with pytest.raises(ParameterRangeError):
        verify_shifted_structure(4, 2)
    with pytest.raises(CapacityError):
        verify_shifted_structure(8, 2)


def test_verify_bondy_chvatal_small():
    for n in (1, 3, 4):
        (check,) = verify_bondy_chvatal(n)
        assert check.ok


def test_clique_agreement_full_grid_small_hosts():
    for n in range(1, 7):
        for k in range((n - 1) // 2 + 1):
            for s in (2, 3, 4):
                assert max_over_free(n, k, s).value == ex_clique(n, k, s), (n, k, s)


def test_clique_agreement_seven_vertices():
    for k in range(4):
        jobs = 4 if k == 3 else 1  # k=3 admits no pruning: 2^21 leaves
        for s in (2, 3, 4):
            assert max_over_free(7, k, s, jobs=jobs).value == ex_clique(7, k, s), (k, s)


def test_star_agreement_grid():
    from turanmatch import ex_star

    for n in (5, 6):
        for k in (1, 2):
            if n < 2 * k + 1:
                continue
            for s, t in ((1, 2), (2, 2)):
                assert max_over_free(n, k, s, t).value == ex_star(n, k, s, t), (n, k, s, t)


def test_bip_agreement_grid_tiny_hosts():
    for n in (1, 2):
        for k in range(n + 1):
            for s, t in ((1, 1), (1, 2), (2, 2)):
                assert max_over_free_bip(n, n, k, s, t).value == ex_bip(n, k, s, t), (n, k, s, t)
    for n in (3, 4):
        for s, t in ((1, 1), (1, 2), (2, 2)):
            assert max_over_free_bip(n, n, 0, s, t).value == ex_bip(n, 0, s, t) == 0


def test_verify_koenig_gstar_4x4():
    checks = verify_koenig_gstar(4, 4, 2, pairs=((1, 2),))
    assert all(ch.ok for ch in checks)


def test_verify_koenig_gstar_small():
    for checks in (verify_koenig_gstar(3, 3, 1), verify_koenig_gstar(2, 3, 2)):
        assert all(ch.ok for ch in checks)
        assert [ch.name for ch in checks] == [
            "koenig-duality",
            "gstar-contains",
            "gstar-monotone",
            "gstar-formula",
        ]
        assert checks[0].cases > 0
