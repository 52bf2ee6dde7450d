from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from thetala.core import make_theta
from thetala.feasibility import (
    FAMILIES, Infeasible, ParityFailed, classify_family, closed_form_targets,
    diophantine_candidates, enumerate_family_members, f4_t_range, family_lengths,
    parity_check, two_color_targets,
)
from thetala.search import even_theta_graphs


@pytest.mark.parametrize("lengths, ok", [((2, 2, 4), True), ((3, 3, 3), False), ((4, 6), False)])
def test_parity_check(lengths, ok):
    assert parity_check(make_theta(lengths)) is ok


@pytest.mark.parametrize("lengths, m, x, y", [
    ((2, 2, 4), 8, 9, 12),
    ((2, 6, 6, 6, 6, 6), 32, 33, 44),
    ((4, 8, 8, 8, 8, 8, 10, 10), 64, 65, 80),
    ((2, 2, 2, 2), 8, 9, 18),
])
def test_two_color_targets(lengths, m, x, y):
    t = two_color_targets(make_theta(lengths))
    assert (t.m, t.x, t.y) == (m, x, y)
    assert t.x * t.size_X == t.y * t.size_Y == m * (m + 1) // 2
    assert t.size_X > t.size_Y


def test_two_color_targets_errors():
    with pytest.raises(ParityFailed):
        two_color_targets(make_theta([3, 3, 3]))
    with pytest.raises(Infeasible):
        two_color_targets(make_theta([2, 2, 2]))  # 6*7/4 is not an integer


def _cands(s):
    return {(c.a, c.m, c.x, c.y, c.case_tag) for c in diophantine_candidates(s)}


def test_diophantine_examples():
    assert (8, 26, 27, 39, 1) in _cands(6)
    assert (4, 230, 231, 253, 3) in _cands(12)
    assert (2, 120, 121, 132, 4) in _cands(7)
    assert _cands(3) == {(2, 8, 9, 12, 4)}


@pytest.mark.parametrize("s", range(3, 60))
def test_diophantine_identity(s):
    for c in diophantine_candidates(s):
        assert c.a * c.b == 8 * (s - 2) * (2 * s - 3)
        assert (c.y + 7 - 4 * s - c.t) * (c.y + 7 - 4 * s + c.t) == 8 * (s - 2) * (2 * s - 3)
        assert c.m * (c.m + 1) == c.y * (c.m - 2 * s + 4)
        assert 2 * c.y >= 2 * s * s + s or c.a == 8


@pytest.mark.parametrize("lengths, family, params", [
    ((2, 4, 4, 4), "F3A", {"l": 2, "t": 2}),
    ((4, 4, 4, 4, 4, 6), "F1", {"l": 1}),
    ((2, 6, 6, 6, 6, 6), "F2A", {"l": 2}),
    ((2, 4, 4, 4, 6), "F2B", {"s": 5}),
    ((2, 2, 2, 2), "K2S", {"s": 4}),
    ((4, 6, 10, 14, 14), "F4", {"s": 5, "t": 2}),
    ((2, 2, 4, 6), "F3B", {"l": 2, "t": 2}),
])
def test_classify_positive(lengths, family, params):
    cls = classify_family(make_theta(lengths))
    assert cls.is_two and cls.family == family and cls.params == params


@pytest.mark.parametrize("lengths, reason", [
    ((2, 2, 2, 2, 2), "K23OddS"),
    ((2, 2, 2), "K23OddS"),
    ((2, 2, 4), "NoFamily"),
    ((3, 3, 3), "OddLength"),
    ((4, 6), "Cycle"),
])
def test_classify_negative(lengths, reason):
    cls = classify_family(make_theta(lengths))
    assert not cls.is_two and cls.reason == reason
    assert cls.to_dict()["verdict"] == "NotTwo"


def test_no_graph_matches_two_families():
    # the secondary match list stays empty across the whole range
    assert [g for g, cls in enumerate_family_members(3000) if cls.also] == []


def _scan(max_m):
    return [g for g in even_theta_graphs(max_m) if classify_family(g).is_two]


@pytest.mark.parametrize("max_m", [7, 8, 14, 40])
def test_enumeration_matches_exhaustive_scan(max_m):
    got = [g for g, _ in enumerate_family_members(max_m)]
    assert got == _scan(max_m)


def test_enumeration_small_examples():
    assert [g.lengths for g, _ in enumerate_family_members(14)] == [
        (2, 2, 2, 2), (2, 2, 2, 2, 2, 2), (2, 2, 4, 6), (2, 4, 4, 4)]
    assert [g.lengths for g, _ in enumerate_family_members(8)] == [(2, 2, 2, 2)]
    assert list(enumerate_family_members(7)) == []


def test_enumeration_sorted_and_unique():
    gs = [g for g, _ in enumerate_family_members(600)]
    keys = [(g.m, g.s, g.lengths) for g in gs]
    assert keys == sorted(set(keys))


@given(st.lists(st.integers(1, 12).map(lambda v: 2 * v), min_size=3, max_size=9))
def test_classifier_invariants(lengths):
    g = make_theta(lengths)
    cls = classify_family(g)
    if not cls.is_two:
        return
    assert cls.family in FAMILIES
    assert family_lengths(cls.family, **cls.params) == list(g.lengths)
    if cls.family != "K2S":
        assert g.m > 2 * g.s + 2
        assert any((c.m, c.x, c.y) == (g.m, cls.targets.x, cls.targets.y)
                   for c in diophantine_candidates(g.s))


def test_closed_forms_against_targets():
    for g, cls in enumerate_family_members(2000):
        t = two_color_targets(g)
        assert closed_form_targets(cls.family, **cls.params) == (t.m, t.x, t.y)


@pytest.mark.parametrize("s", range(4, 300))
def test_f4_closed_and_strict_bounds_agree(s):
    closed = {t for t in range(0, s) if Fraction(2 * s - 3, 8) <= t <= Fraction(6 * s - 5, 8)}
    strict = {t for t in range(0, s) if Fraction(2 * s - 3, 8) < t < Fraction(6 * s - 5, 8)}
    assert closed == strict == set(f4_t_range(s))


def test_f4_integer_table():
    # t in [k, 3k-1] when s = 4k, spot-checked
    for k in range(1, 30):
        assert list(f4_t_range(4 * k)) == list(range(k, 3 * k))
