import pytest

from thetala import _kernels
from thetala.constructor import construct
from thetala.core import make_theta
from thetala.feasibility import classify_family, enumerate_family_members
from thetala.search import (
    TooLarge, all_theta_graphs, brute_force_min_colors, cross_check, even_theta_graphs,
    exists_two_coloring,
)
from thetala.verifier import verify


@pytest.mark.parametrize("lengths, found, reason", [
    ((2, 2, 4), False, "NoCover"),
    ((2, 4, 4, 4), True, None),
    ((4, 6), False, "Cycle"),
    ((2, 2, 2, 2), True, None),
    ((3, 3, 3), False, "OddLength"),
    ((2, 2, 2), False, "NonIntegralColors"),
])
def test_decide_examples(lengths, found, reason):
    res = exists_two_coloring(make_theta(lengths))
    assert res.found is found and res.reason == reason


def test_witness_k24_palette():
    g = make_theta([2, 2, 2, 2])
    res = exists_two_coloring(g)
    assert verify(g, res.witness).palette == [9, 18]
    f, _ = construct(g)
    assert verify(g, f).palette == [9, 18]


def test_witness_deterministic():
    g = make_theta([2, 6, 6, 6, 6, 6])
    assert exists_two_coloring(g).witness == exists_two_coloring(g).witness


@pytest.mark.parametrize("max_m", [8, 14, 18])
def test_pruning_never_changes_verdict(max_m):
    pruned = plain = 0
    for g in even_theta_graphs(max_m):
        a = exists_two_coloring(g, prune=True, count_all=True)
        b = exists_two_coloring(g, prune=False, count_all=True)
        assert (a.found, a.count) == (b.found, b.count)
        assert exists_two_coloring(g, prune=False).found == a.found
        pruned += a.nodes
        plain += b.nodes
    assert pruned <= plain


def test_count_mode():
    # K_{2,4}: the pairs {i, 9-i} are forced; u needs a pick summing to 18
    res = exists_two_coloring(make_theta([2, 2, 2, 2]), count_all=True)
    assert res.count == 2
    assert exists_two_coloring(make_theta([2, 2, 4]), count_all=True).count == 0


def test_search_matches_families_up_to_30():
    fam = {g for g, _ in enumerate_family_members(30)}
    for g in even_theta_graphs(30):
        assert exists_two_coloring(g).found == (g in fam)


def test_search_finds_large_members():
    for lengths in [(4,) * 5 + (6,), (4,) + (10,) * 8, (6,) + (12,) * 7 + (14,) * 3]:
        g = make_theta(lengths)
        res = exists_two_coloring(g)
        assert res.found and verify(g, res.witness).color_count == 2


@pytest.mark.parametrize("lengths, best", [((2, 2, 2), 3), ((1, 2), 3), ((2, 2, 2, 2), 2), ((2, 2, 4), 3)])
def test_brute_force_examples(lengths, best):
    assert brute_force_min_colors(make_theta(lengths)) == best


def test_brute_force_too_large():
    with pytest.raises(TooLarge):
        brute_force_min_colors(make_theta([4, 6]), max_m=9)


def _naive_min_colors(g):
    import itertools
    from thetala.core import EdgeLabeling
    best = -1
    for perm in itertools.permutations(range(1, g.m + 1)):
        paths, i = [], 0
        for a in g.lengths:
            paths.append(perm[i:i + a])
            i += a
        rep = verify(g, EdgeLabeling.from_paths(paths))
        if rep.valid and (best < 0 or rep.color_count < best):
            best = rep.color_count
    return best


@pytest.mark.parametrize("g", all_theta_graphs(6), ids=str)
def test_brute_force_matches_naive(g):
    assert brute_force_min_colors(g) == _naive_min_colors(g)


def test_enumerators():
    gs = all_theta_graphs(5)
    assert [g.lengths for g in gs] == [(1, 2), (1, 3), (2, 2), (1, 4), (2, 3), (1, 2, 2)]
    assert [g.lengths for g in even_theta_graphs(8)] == [(2, 2), (2, 4), (2, 2, 2), (2, 6), (4, 4),
                                                         (2, 2, 4), (2, 2, 2, 2)]


def test_cross_check_small():
    rep = cross_check(14)
    assert rep.ok
    assert [g.lengths for g in rep.positives] == [(2, 2, 2, 2), (2, 2, 2, 2, 2, 2), (2, 2, 4, 6), (2, 4, 4, 4)]
    assert [g.lengths for g in cross_check(8).positives] == [(2, 2, 2, 2)]


def test_python_kernel_same_answer():
    py = _kernels.python_impl(_kernels.cover_search)
    for lengths in [(2, 4, 4, 4), (2, 2, 4), (2, 2, 4, 6)]:
        g = make_theta(lengths)
        a = exists_two_coloring(g, count_all=True)
        b = exists_two_coloring(g, count_all=True, kernel=py)
        assert (a.found, a.count, a.witness) == (b.found, b.count, b.witness)
