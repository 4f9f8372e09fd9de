import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from clutterkit.bitset import iter_bits, members
from clutterkit.clutter import build_clutter, from_masks, normalize_antichain
from clutterkit.constructions import example1
from clutterkit.errors import EdgeTooLarge, EmptyTarget, IndexOutOfRange
from clutterkit.hardness import (
    brute_force_min_recognizing,
    clutter_hardness,
    difference_targets,
    edge_hardness,
    is_recognizing,
    min_hitting_set,
    min_recognizing_subset,
    report_to_dict,
)
from conftest import s

TRIPLE = build_clutter([1, 2, 3, 4], [[1, 2, 3], [2, 3, 4], [1, 3, 4]])
L5 = example1(5)
SINGLE = build_clutter([1, 2], [[1, 2]])


def test_difference_targets():
    assert difference_targets(TRIPLE, 0) == [s(0), s(1)]
    assert difference_targets(L5, 0) == [s(0)]
    assert difference_targets(SINGLE, 0) == []
    with pytest.raises(IndexOutOfRange):
        difference_targets(L5, 2)


def test_difference_targets_dominance():
    c = build_clutter("abcd", [["a", "b", "c"], ["c", "d"], ["b", "d"]])
    # {a,b} from the first difference contains nothing smaller; {a,c} neither
    assert difference_targets(c, 0) == [s(0, 1), s(0, 2)]
    # {a,b} = e0 - {c,e} contains {a} = e0 - {b,c,d} and is dropped
    c = build_clutter("abcde", [["a", "b", "c"], ["b", "c", "d"], ["c", "e"]])
    assert difference_targets(c, 0) == [s(0)]


@pytest.mark.parametrize(
    "targets, expected",
    [
        ([s(1), s(2)], s(1, 2)),
        ([], 0),
        ([s(1, 2), s(2, 3), s(1, 3)], s(1, 2)),
    ],
)
def test_min_hitting_set_examples(targets, expected):
    assert min_hitting_set(targets) == expected


def test_min_hitting_set_empty_target():
    with pytest.raises(EmptyTarget):
        min_hitting_set([s(1), 0])


@settings(max_examples=300, deadline=None)
@given(st.lists(st.sets(st.integers(0, 9), min_size=1, max_size=5), max_size=8))
def test_min_hitting_set_matches_oracle(targets):
    got = min_hitting_set([sum(1 << v for v in t) for t in targets])
    assert set(iter_bits(got)) == set(oracles.min_hitting_set([frozenset(t) for t in targets]))


@settings(max_examples=100, deadline=None)
@given(
    st.lists(st.sets(st.integers(0, 9), min_size=1, max_size=5), max_size=8),
    st.sets(st.integers(0, 9), min_size=1, max_size=5),
)
def test_adding_target_never_shrinks_optimum(targets, extra):
    masks = [sum(1 << v for v in t) for t in targets]
    before = min_hitting_set(masks).bit_count()
    after = min_hitting_set(masks + [sum(1 << v for v in extra)]).bit_count()
    assert after >= before


def test_reduction_lemma_exhaustive():
    """s is recognizing for e iff s meets e - e' for every other edge e'."""
    rng = random.Random(5)
    for _ in range(300):
        n = rng.randint(2, 7)
        edges = normalize_antichain([rng.randrange(1, 1 << n) for _ in range(rng.randint(2, 5))])
        c = from_masks(range(n), edges)
        for i, e in enumerate(c.edges):
            ids = members(e)
            for r in range(len(ids) + 1):
                for combo in itertools.combinations(ids, r):
                    sub = sum(1 << v for v in combo)
                    hits = all(sub & (e & ~f) for j, f in enumerate(c.edges) if j != i)
                    assert hits == is_recognizing(c, i, sub)


def test_min_recognizing_subset_examples():
    assert min_recognizing_subset(L5, 0).subset == s(0)
    assert min_recognizing_subset(SINGLE, 0).subset == 0
    assert min_recognizing_subset(TRIPLE, 0).subset == s(0, 1)


@pytest.mark.parametrize("n", range(3, 11))
def test_brute_force_agrees_on_example1(n):
    c = example1(n)
    for i in range(c.m):
        assert brute_force_min_recognizing(c, i) == min_recognizing_subset(c, i)


def test_brute_force_examples():
    assert brute_force_min_recognizing(TRIPLE, 0).subset == s(0, 1)
    assert brute_force_min_recognizing(SINGLE, 0).subset == 0


def test_brute_force_guard():
    c = from_masks(range(22), [(1 << 21) - 1, 1 << 21])
    with pytest.raises(EdgeTooLarge):
        brute_force_min_recognizing(c, 0)


def test_edge_hardness():
    assert edge_hardness(L5, 0) == Fraction(1, 4)
    assert edge_hardness(SINGLE, 0) == Fraction(0)
    assert edge_hardness(TRIPLE, 0) == Fraction(2, 3)


def test_clutter_hardness():
    assert clutter_hardness(L5).overall == Fraction(1, 4)
    empty = clutter_hardness(build_clutter(["a"], []))
    assert empty.overall == 0 and empty.argmax_edge is None
    r = clutter_hardness(TRIPLE)
    assert r.overall == Fraction(2, 3)
    assert [v for v, _ in r.per_edge] == [Fraction(2, 3)] * 3
    assert r.argmax_edge == 0
    assert clutter_hardness(TRIPLE, oracle=True) == r


def test_argmax_is_first_maximum():
    c = build_clutter("abcde", [["a"], ["b", "c"], ["c", "d", "e"]])
    r = clutter_hardness(c)
    assert [v for v, _ in r.per_edge] == [1, Fraction(1, 2), Fraction(1, 3)]
    assert r.argmax_edge == 0


def test_hardness_range_and_oracle_random():
    rng = random.Random(2024)
    for _ in range(300):
        n = rng.randint(2, 10)
        edges = normalize_antichain([rng.randrange(1, 1 << n) for _ in range(rng.randint(2, 7))])
        c = from_masks(range(n), edges)
        r = clutter_hardness(c)
        sets = [set(iter_bits(e)) for e in c.edges]
        assert r.overall == oracles.hardness(sets)
        if c.m >= 2:
            assert Fraction(1, n - 1) <= r.overall <= 1
            assert all(0 < v <= 1 for v, _ in r.per_edge)


def test_report_json():
    d = report_to_dict(L5, clutter_hardness(L5))
    assert d["overall"] == {"num": 1, "den": 4}
    assert d["argmax_edge"] == 0
    assert d["edges"][0] == {"index": 0, "c": {"num": 1, "den": 4}, "witness": ["1"]}
    assert "witness" not in report_to_dict(L5, clutter_hardness(L5), witness=False)["edges"][1]
