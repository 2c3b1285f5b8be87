import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hopfbraid.braids import BraidWord, parse_braid, torus_braid
from hopfbraid.errors import EnumerationTooLarge, LengthMismatch
from hopfbraid.oracle import fy_apply, fy_fixed_points
from hopfbraid.zoo import group_stats, make_group


def test_single_crossing_by_hand():
    G = make_group("S3")
    w = parse_braid("2: 1")
    for g in range(G.order):
        for h in range(G.order):
            assert fy_apply(G, w, (g, h)) == (h, G.mul(G.mul(G.inv(h), g), h))
            assert fy_apply(G, w.inverse(), fy_apply(G, w, (g, h))) == (g, h)


@pytest.mark.parametrize(
    "group, text, value",
    [
        ("S3", "1:", 6),
        ("S3", "2:", 36),
        # fixed points of one crossing: h = g, so |G|
        ("S3", "2: 1", 6),
        # commuting pairs
        ("S3", "2: 1 1", 18),
        ("C2", "3: 1 -2", 2),
        ("S3", "2: 1 1 1", 12),
    ],
)
def test_examples(group, text, value):
    assert fy_fixed_points(make_group(group), parse_braid(text)) == value


@pytest.mark.parametrize("name", ["C2", "C3", "C4", "C2xC2", "S3", "D4", "Q8"])
def test_t22_counts_commuting_pairs(name):
    G = make_group(name)
    assert fy_fixed_points(G, torus_braid(2, 2)) == G.order * group_stats(G)["conjClassCount"]


def test_length_mismatch():
    with pytest.raises(LengthMismatch):
        fy_apply(make_group("C2"), parse_braid("3: 1"), (0, 1))


def test_enumeration_guard():
    with pytest.raises(EnumerationTooLarge):
        fy_fixed_points(make_group("S4"), BraidWord(6))
    with pytest.raises(EnumerationTooLarge):
        fy_fixed_points(make_group("C2"), BraidWord(4), limit=15)


letters = st.sampled_from((1, -1, 2, -2))


@settings(max_examples=40, deadline=None)
@given(st.lists(letters, max_size=4), st.lists(letters, max_size=4))
def test_invariant_under_braid_relations(pre, post):
    G = make_group("S3")
    left = BraidWord(3, tuple(pre) + (1, 2, 1) + tuple(post))
    right = BraidWord(3, tuple(pre) + (2, 1, 2) + tuple(post))
    assert fy_fixed_points(G, left) == fy_fixed_points(G, right)
    cancel = BraidWord(3, tuple(pre) + (2, -2) + tuple(post))
    plain = BraidWord(3, tuple(pre) + tuple(post))
    assert fy_fixed_points(G, cancel) == fy_fixed_points(G, plain)


@settings(max_examples=30, deadline=None)
@given(st.lists(letters, max_size=6))
def test_invariant_under_conjugation(word):
    G = make_group("S3")
    w = BraidWord(3, tuple(word))
    conj = BraidWord(3, (2,) + w.letters + (-2,))
    assert fy_fixed_points(G, w) == fy_fixed_points(G, conj)
