import itertools

import pytest

from epistring.tower import DirectiveSpec, parse_directive

# directives exercised throughout the suite
DIRECTIVES = [":01", ":012", ":0121", ":001"]


def brute_occurrence_starts(w, f):
    return [s for s in range(len(w) - len(f) + 1) if w[s : s + len(f)] == f]


def brute_is_attractor(w, positions):
    """Direct transcription of the definition, no shared code with the package."""
    gamma = set(positions)
    blocks = {}
    for i in range(len(w)):
        for j in range(i + 1, len(w) + 1):
            blocks.setdefault(w[i:j], []).append(set(range(i, j)))
    return all(any(gamma & occ for occ in occs) for occs in blocks.values())


def brute_minimum_size(w):
    for r in range(1, len(w) + 1):
        for s in itertools.combinations(range(len(w)), r):
            if brute_is_attractor(w, s):
                return r, s
    raise AssertionError("unreachable")


def brute_closure(w, a, alphabet):
    """Shortest palindrome with prefix wa found by trying every completion."""
    head = w + a
    for extra in range(0, len(w) + 1):
        for tail in itertools.product(alphabet, repeat=extra):
            cand = head + "".join(tail)
            if cand == cand[::-1]:
                return cand
    raise AssertionError("unreachable")


@pytest.fixture(params=DIRECTIVES)
def directive(request) -> DirectiveSpec:
    return parse_directive(request.param)


_acceptance = []


def pytest_runtest_logreport(report):
    if "test_acceptance.py" in report.nodeid and report.when == "call":
        detail = dict(report.user_properties).get("detail", "")
        _acceptance.append((report.nodeid.split("::")[-1], report.outcome, detail))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome, detail in _acceptance:
        line = f"{'PASS' if outcome == 'passed' else 'FAIL'}  {name}"
        terminalreporter.write_line(f"{line}  ({detail})" if detail else line)
