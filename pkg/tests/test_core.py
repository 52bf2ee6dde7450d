import json

import pytest
from hypothesis import given, strategies as st

from thetala.core import (
    U, V, EdgeLabeling, EmptyInput, MultiEdge, ShapeMismatch, ThetaError, TooSmall,
    align_paths, dumps_labeling, format_lengths, induced_coloring, labeling_from_dict,
    labeling_to_dict, make_theta, parse_lengths, to_dot,
)


def test_basic_counts():
    g = make_theta([6, 2, 4, 4, 4])
    assert g.lengths == (2, 4, 4, 4, 6)
    assert (g.s, g.m, g.order) == (5, 20, 17)
    assert len(g.vertices()) == g.order
    assert len(g.edges()) == g.m


@pytest.mark.parametrize("lengths, exc", [
    ([], EmptyInput),
    ([1, 1], TooSmall),
    ([1, 1, 2], MultiEdge),
    ([5], TooSmall),
    ([0, 3], ThetaError),
])
def test_make_theta_rejects(lengths, exc):
    with pytest.raises(exc):
        make_theta(lengths)


def test_single_short_path_allowed():
    g = make_theta([1, 2])
    assert g.order == 3
    assert (U, V) in g.edges()


@pytest.mark.parametrize("text, expected", [
    ("2,4,4,4,6", [2, 4, 4, 4, 6]),
    ("4^5,6", [4, 4, 4, 4, 4, 6]),
    ("2, 6^[5]", [2, 6, 6, 6, 6, 6]),
    ("4 8^5 10^2", [4] + [8] * 5 + [10] * 2),
])
def test_parse_lengths(text, expected):
    assert parse_lengths(text) == expected


def test_parse_lengths_garbage():
    with pytest.raises(ThetaError):
        parse_lengths("2,x")


@given(st.lists(st.integers(1, 30), min_size=1, max_size=25))
def test_format_parse_roundtrip(lengths):
    lengths = sorted(lengths)
    assert parse_lengths(format_lengths(lengths)) == lengths


def test_induced_coloring_k23():
    g = make_theta([2, 2, 2])
    f = EdgeLabeling.from_paths([(1, 2), (3, 4), (5, 6)])
    col = induced_coloring(g, f)
    assert col.color_of[U] == 9 and col.color_of[V] == 12
    assert sorted(col.palette) == [3, 7, 9, 11, 12]


def test_shape_mismatch():
    g = make_theta([2, 2, 2])
    with pytest.raises(ShapeMismatch):
        induced_coloring(g, EdgeLabeling.from_paths([(1, 2), (3, 4), (5,)]))


def test_align_paths_stable_by_length():
    f = align_paths([(1, 20, 10, 11, 19, 2), (15, 6), (3, 18, 12, 9)])
    assert [len(p) for p in f.per_path] == [2, 4, 6]


def test_json_roundtrip():
    g = make_theta([2, 4, 4, 4, 6])
    f = align_paths([(15, 6), (3, 18, 12, 9), (4, 17, 13, 8), (7, 14, 16, 5), (1, 20, 10, 11, 19, 2)])
    data = json.loads(dumps_labeling(g, f))
    assert data == labeling_to_dict(g, f)
    g2, f2 = labeling_from_dict(data)
    assert (g2, f2) == (g, f)
    # file order only affects the order among equal-length paths
    data["paths"].reverse()
    g3, f3 = labeling_from_dict(data)
    assert g3 == g and sorted(f3.per_path) == sorted(f.per_path)


def test_reversal_swaps_hub_sums():
    g = make_theta([2, 4])
    f = EdgeLabeling.from_paths([(1, 2), (3, 4, 5, 6)])
    r = f.reversed_path(1)
    assert r.per_path[1] == (6, 5, 4, 3)
    assert induced_coloring(g, r).color_of[U] == 1 + 6


def test_dot_mentions_every_edge():
    g = make_theta([2, 2, 2, 2])
    f = EdgeLabeling.from_paths([(1, 8), (7, 2), (6, 3), (4, 5)])
    dot = to_dot(g, f)
    assert dot.startswith("graph theta {")
    assert dot.count(" -- ") == g.m
    assert '"u" [label="u:18"]' in dot
