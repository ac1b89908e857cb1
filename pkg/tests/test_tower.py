import pytest

from epistring.errors import CapExceeded, DirectiveError, DirectiveExhausted
from epistring.tower import (
    APPEND,
    FIBONACCI,
    INTERIOR,
    NEW_LETTER,
    TRIBONACCI,
    DirectiveSpec,
    build_tower,
    find_factor,
    palindromic_prefixes,
    parse_directive,
    sequence_prefix,
)
from epistring.words import is_palindrome


def test_parse_directive():
    assert parse_directive(":01") == FIBONACCI
    assert parse_directive(":012") == TRIBONACCI
    spec = parse_directive("0011:")
    assert spec.is_finite and spec.preperiod == "0011"
    assert [spec.letter(n) for n in range(5)] == ["0", "0", "1", "1", None]
    assert [parse_directive("1:02").letter(n) for n in range(6)] == list("102020")


@pytest.mark.parametrize("text", [":", "01", "0:1:2", "0 1:", "a-b:"])
def test_parse_directive_rejects(text):
    with pytest.raises(DirectiveError):
        parse_directive(text)


def test_normalization_check():
    assert FIBONACCI.is_normalized()
    assert not parse_directive(":10").is_normalized()
    assert not parse_directive(":ab").is_normalized()


def test_fibonacci_tower():
    t = build_tower(FIBONACCI, 5)
    assert t.lengths() == [0, 1, 3, 6, 11, 19]
    assert [t.word(n) for n in range(6)] == [
        "", "0", "010", "010010", "01001010010", "0100101001001010010",
    ]


def test_tribonacci_tower():
    t = build_tower(TRIBONACCI, 5)
    assert t.word(3) == "0102010"
    assert t.word(4) == "01020100102010"
    assert t.levels[5].length == 27


def test_unary_tower():
    t = build_tower(parse_directive(":0"), 4)
    assert t.prefix == "0000"
    assert [r.case_tag for r in t.levels[1:]] == [NEW_LETTER, APPEND, APPEND, APPEND]


def test_case_tags_fibonacci():
    t = build_tower(FIBONACCI, 5)
    assert [r.case_tag for r in t.levels[1:]] == [NEW_LETTER, NEW_LETTER, INTERIOR, INTERIOR, INTERIOR]


@pytest.mark.parametrize("text", [":01", ":012", ":0121", ":001", "0:1", "00:1", "2:10", ":ab"])
def test_fast_closure_matches_naive(text):
    spec = parse_directive(text)
    fast = build_tower(spec, 40, max_length=3000, soft_length_cap=True)
    slow = build_tower(spec, 40, max_length=3000, soft_length_cap=True, naive=True)
    assert fast.top >= 8
    assert fast == slow


def test_tower_invariants(directive):
    t = build_tower(directive, min_length=2000)
    for n in range(1, t.top + 1):
        w, prev = t.word(n), t.word(n - 1)
        rec = t.levels[n]
        assert is_palindrome(w)
        assert w.startswith(prev) and len(w) > len(prev)
        assert len(w) <= 2 * len(prev) + 1
        assert (rec.case_tag == NEW_LETTER) == (rec.consumed not in prev)
        if rec.case_tag != NEW_LETTER:
            assert (rec.case_tag == APPEND) == (w == prev + rec.consumed)
        # m-map update: consumed letter moves to |w_{n-1}|, the rest is inherited
        old = t.levels[n - 1].m_map
        assert rec.m_map[rec.consumed] == len(prev)
        assert {a: m for a, m in rec.m_map.items() if a != rec.consumed} == {
            a: m for a, m in old.items() if a != rec.consumed
        }
    assert palindromic_prefixes(t.prefix) == t.lengths()


def test_m_map_by_direct_scan(directive):
    t = build_tower(directive, min_length=600)
    for n in range(1, t.top + 1):
        w = t.word(n)
        pals = [L for L in palindromic_prefixes(w) if L < len(w)]
        expected = {}
        for L in pals:
            expected[w[L]] = L  # increasing L, so the last write is the longest
        assert dict(t.levels[n].m_map) == expected
        for a, m in expected.items():
            assert w[m] == a


def test_sequence_prefix():
    assert sequence_prefix(FIBONACCI, 11) == "01001010010"
    assert sequence_prefix(TRIBONACCI, 7) == "0102010"
    assert sequence_prefix(FIBONACCI, 0) == ""
    with pytest.raises(DirectiveExhausted):
        sequence_prefix(parse_directive("01:"), 10)


def test_finite_directive_partial_tower():
    t = build_tower(parse_directive("0011:"), 10)
    assert t.exhausted and t.top == 4


def test_caps():
    with pytest.raises(CapExceeded):
        build_tower(FIBONACCI, 100)
    with pytest.raises(CapExceeded):
        build_tower(FIBONACCI, 30, max_length=1000)
    with pytest.raises(CapExceeded):
        sequence_prefix(FIBONACCI, 10**6, max_length=10**5)


def test_palindromic_prefixes():
    assert palindromic_prefixes("010010") == [0, 1, 3, 6]
    assert palindromic_prefixes("0102010") == [0, 1, 3, 7]
    assert palindromic_prefixes("ab") == [0, 1]


def _scan_levels(spec, w, cap):
    t = build_tower(spec, cap)
    for n in range(t.top + 1):
        s = t.word(n).find(w)
        if s != -1:
            return n, s
    return None


@pytest.mark.parametrize(
    "spec, w, expected",
    [(FIBONACCI, "1001", (3, 1)), (TRIBONACCI, "2010", (3, 3))],
)
def test_find_factor(spec, w, expected):
    assert _scan_levels(spec, w, 6) == expected
    loc = find_factor(spec, w, 10)
    assert (loc.level, loc.start) == expected


def test_find_factor_absent():
    assert find_factor(FIBONACCI, "11", 25) is None
    assert find_factor(build_tower(FIBONACCI, 6), "11", 6) is None


def test_find_factor_against_level_scan(directive):
    t = build_tower(directive, 7)
    top = t.word(7)
    for L in range(1, 8):
        for s in range(len(top) - L + 1):
            f = top[s : s + L]
            loc = find_factor(t, f, 7)
            assert (loc.level, loc.start) == _scan_levels(directive, f, 7)


def test_directive_spec_requires_letters():
    with pytest.raises(DirectiveError):
        DirectiveSpec("", "")
