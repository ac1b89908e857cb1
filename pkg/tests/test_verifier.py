import itertools

import numpy as np
import pytest
from hypothesis import given, strategies as st

from epistring.verifier import (
    CoverageIndex,
    SuffixAutomaton,
    crossing_occurrence,
    is_attractor,
    is_attractor_naive,
    naive_passing_masks,
)
from epistring.words import distinct_factors

from conftest import brute_is_attractor


@st.composite
def word_and_positions(draw, alphabet="012", max_size=14):
    w = draw(st.text(alphabet=alphabet, min_size=1, max_size=max_size))
    ps = draw(st.sets(st.integers(0, len(w) - 1), max_size=len(w)))
    return w, sorted(ps)


def test_paper_example_passes():
    assert is_attractor("010010", [1, 3]).passed
    assert is_attractor("0", [0]).passed


def test_failure_witness_is_shortest_then_least():
    out = is_attractor("010010", [1])
    assert not out.passed
    # "0" is never at position 1, so it is the shortest uncovered factor
    assert out.witness == "0"
    assert [list(o.positions) for o in out.witness_occurrences] == [[0], [2], [3], [5]]
    assert is_attractor_naive("010010", [1]) == out


def test_failure_witness_two_letters():
    out = is_attractor("010010", [0, 1])
    assert out.witness == "00"
    assert [list(o.positions) for o in out.witness_occurrences] == [[2, 3]]


def test_out_of_range_and_empty():
    with pytest.raises(ValueError):
        is_attractor("010", [3])
    with pytest.raises(ValueError):
        is_attractor("", [])


def test_crossing_occurrence():
    occ = crossing_occurrence("010010", "010", [3])
    assert occ.start == 3 and list(occ.positions) == [3, 4, 5]
    assert crossing_occurrence("010010", "00", [1]) is None
    assert crossing_occurrence("0", "0", [0]).start == 0


def test_suffix_automaton_counts_distinct_factors():
    for w in ["", "a", "010010", "abcabc", "0102010010201"]:
        if w:
            assert SuffixAutomaton(w).distinct_factor_count() == len(distinct_factors(w))


@given(word_and_positions())
def test_fast_and_naive_agree(case):
    w, ps = case
    fast, naive = is_attractor(w, ps), is_attractor_naive(w, ps)
    assert fast == naive
    assert fast.passed == brute_is_attractor(w, ps)


@given(word_and_positions())
def test_monotone_under_supersets(case):
    w, ps = case
    if is_attractor(w, ps).passed:
        for extra in range(len(w)):
            assert is_attractor(w, ps + [extra]).passed


@given(st.text(alphabet="01234", min_size=1, max_size=25))
def test_full_position_set_passes(w):
    assert is_attractor(w, range(len(w))).passed


@given(word_and_positions())
def test_passing_sets_hold_every_letter(case):
    w, ps = case
    if is_attractor(w, ps).passed:
        assert {w[p] for p in ps} == set(w)


@pytest.mark.slow
def test_exhaustive_cross_validation_binary_up_to_12():
    """Suffix-automaton route vs occurrence-union route, every subset of every word."""
    for n in range(1, 13):
        masks = np.arange(1 << n, dtype=np.int64)
        for tup in itertools.product("01", repeat=n):
            w = "".join(tup)
            fast = CoverageIndex(w).passes_masks(masks)
            ref = naive_passing_masks(w, masks)
            assert np.array_equal(fast, ref), w


def test_batch_matches_scalar():
    w = "0100101001001"
    index = CoverageIndex(w)
    masks = np.arange(1 << len(w), dtype=np.int64)[::37]
    batch = index.passes_masks(masks)
    for m, ok in zip(masks, batch):
        ps = [i for i in range(len(w)) if m >> i & 1]
        assert index.passes(ps) == ok == brute_is_attractor(w, ps)
