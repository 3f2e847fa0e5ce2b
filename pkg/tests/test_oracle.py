import random
from itertools import combinations
from math import comb, factorial

import pytest
from hypothesis import given, settings

from brute import complete_graph_cycle_count, nx_cycle_sign_counts
from conftest import cycle_graph, random_sigraph, sigraphs
from sigcayley.cayley import build_sigraph, validate_spec
from sigcayley.errors import GateError, NotApplicableError
from sigcayley.oracle import (
    balance_by_cycles,
    clusterability_by_cycles,
    enumerate_simple_cycles,
    negative_sections,
    sign_compat_exhaustive,
)
from sigcayley.sigraph import NEG, POS, Cycle, Sigraph


def complete(n, sign=POS):
    return Sigraph(n, tuple((a, b, sign) for a, b in combinations(range(n), 2)))


def test_hexagon_has_one_cycle():
    assert len(enumerate_simple_cycles(cycle_graph([POS] * 6))) == 1


def test_k4_has_seven_cycles():
    cycles = enumerate_simple_cycles(complete(4))
    assert len(cycles) == 7
    assert sorted(len(c) for c in cycles) == [3, 3, 3, 3, 4, 4, 4]


def test_tree_has_no_cycles():
    tree = Sigraph.from_edges(5, [(0, 1, "+"), (0, 2, "-"), (2, 3, "-"), (2, 4, "+")])
    assert enumerate_simple_cycles(tree) == []


@pytest.mark.parametrize("n", range(3, 8))
def test_complete_graph_closed_form(n):
    expected = sum(comb(n, k) * factorial(k - 1) // 2 for k in range(3, n + 1))
    assert expected == complete_graph_cycle_count(n)
    assert len(enumerate_simple_cycles(complete(n))) == expected


def test_cycles_are_canonical_and_unique():
    g = random_sigraph(random.Random(2), 9, 0.5)
    cycles = enumerate_simple_cycles(g)
    assert len({c.vertices for c in cycles}) == len(cycles)
    for c in cycles:
        assert c.canonical() == c
        assert len(set(c.vertices)) == len(c) >= 3
        assert g.cycle(c.vertices) == c


@settings(max_examples=60)
@given(sigraphs(max_vertices=8))
def test_cycle_enumeration_matches_networkx(g):
    ours = sorted(c.negatives for c in enumerate_simple_cycles(g))
    assert ours == sorted(nx_cycle_sign_counts(g))


def test_size_gate_refuses():
    big = complete(13)
    with pytest.raises(GateError):
        enumerate_simple_cycles(big)
    with pytest.raises(GateError):
        balance_by_cycles(big)
    with pytest.raises(GateError):
        sign_compat_exhaustive(complete(17))


def test_balance_by_cycles_examples():
    assert balance_by_cycles(build_sigraph(validate_spec(3, 3))) is False
    assert balance_by_cycles(build_sigraph(validate_spec(2, 4))) is True
    forest = Sigraph.from_edges(6, [(0, 1, "-"), (1, 2, "-"), (3, 4, "+"), (4, 5, "-")])
    assert balance_by_cycles(forest) is True


def test_clusterability_by_cycles_examples():
    assert clusterability_by_cycles(build_sigraph(validate_spec(3, 3))) is False
    assert clusterability_by_cycles(cycle_graph([NEG] * 6)) is True
    assert clusterability_by_cycles(cycle_graph([POS, POS, NEG])) is False


def test_sign_compat_exhaustive_examples():
    s1 = Sigraph.from_edges(4, [(0, 1, "-"), (1, 2, "+"), (2, 3, "-")])
    assert sign_compat_exhaustive(s1) is False
    assert sign_compat_exhaustive(build_sigraph(validate_spec(3, 3))) is True
    assert sign_compat_exhaustive(Sigraph.from_edges(2, [(0, 1, "-")])) is True


def _cyc(word):
    signs = tuple(POS if ch == "+" else NEG for ch in word)
    return Cycle(tuple(range(len(signs))), signs)


@pytest.mark.parametrize(
    "word, sections",
    [("++--++", [2]), ("-+-+", [1, 1]), ("--+-", [3]), ("-++--+-", [2, 2]), ("-+--+---+", [1, 2, 3])],
)
def test_negative_sections(word, sections):
    assert sorted(negative_sections(_cyc(word))) == sorted(sections)


@pytest.mark.parametrize("word", ["+++", "----"])
def test_negative_sections_homogeneous(word):
    with pytest.raises(NotApplicableError):
        negative_sections(_cyc(word))
