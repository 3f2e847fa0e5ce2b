import pytest

from brute import cayley_edges, to_nx
from sigcayley.cayley import build_sigraph, connection_set, family, phi_vertices, validate_spec
from sigcayley.errors import DivisibilityError, InvalidPrimeError
from sigcayley.sigraph import components, edge_counts, neg_degree

import networkx as nx


def test_validate_examples():
    assert validate_spec(2, 6).order == 12
    assert validate_spec(3, 3).order == 9
    with pytest.raises(InvalidPrimeError):
        validate_spec(4, 8)
    with pytest.raises(DivisibilityError):
        validate_spec(3, 10)


@pytest.mark.parametrize(
    "p, n, members",
    [
        (2, 6, {(1, 1), (1, 5)}),
        (3, 3, {(1, 1), (1, 2), (2, 1), (2, 2)}),
    ],
)
def test_connection_set_examples(p, n, members):
    phi = connection_set(validate_spec(p, n))
    assert phi.members == members
    assert phi.size == len(members)


def test_connection_set_3_15():
    assert connection_set(validate_spec(3, 15)).size == 16


def test_connection_set_symmetric_without_identity():
    for spec in family(120):
        phi = connection_set(spec)
        assert (0, 0) not in phi
        assert all(((-a) % spec.p, (-b) % spec.n) in phi for a, b in phi.members)


def test_z2_z2():
    spec = validate_spec(2, 2)
    g = build_sigraph(spec)
    assert g.edge_count == 2
    assert g.sign(spec.index(0, 0), spec.index(1, 1)).symbol == "+"
    assert g.sign(spec.index(0, 1), spec.index(1, 0)).symbol == "-"
    assert [len(c) for c in components(g)] == [2, 2]


@pytest.mark.parametrize(
    "p, n, vertices, edges, positive, negative",
    [(2, 6, 12, 12, 4, 8), (3, 3, 9, 18, 14, 4)],
)
def test_small_instances(p, n, vertices, edges, positive, negative):
    g = build_sigraph(validate_spec(p, n))
    c = edge_counts(g)
    assert (g.vertex_count, g.edge_count, c.positive, c.negative) == (
        vertices, edges, positive, negative)


@pytest.mark.parametrize("spec", family(60), ids=lambda s: f"{s.p}x{s.n}")
def test_matches_bruteforce_construction(spec):
    g = build_sigraph(spec)
    ours = {
        frozenset((spec.vertex(a), spec.vertex(b))): s.symbol for a, b, s in g.edges
    }
    assert ours == cayley_edges(spec.p, spec.n)


def test_labels_and_indexing():
    spec = validate_spec(3, 6)
    g = build_sigraph(spec)
    assert g.label(spec.index(2, 5)) == "(2,5)"
    assert spec.vertex(spec.index(2, 5)) == (2, 5)


def test_phi_vertices_have_no_negative_edges():
    for spec in family(120):
        g = build_sigraph(spec)
        assert all(neg_degree(g, v) == 0 for v in phi_vertices(spec))


def test_p2_components_match_parity_split():
    for spec in family(120):
        if spec.p != 2:
            continue
        g = build_sigraph(spec)
        first = sorted(
            spec.index(u, v) for u in (0, 1) for v in range(spec.n) if (u + v) % 2 == 0
        )
        comps = components(g)
        assert len(comps) == 2
        assert first in comps
        assert nx.number_connected_components(to_nx(g)) == 2


def test_translation_preserves_edge_set():
    spec = validate_spec(3, 12)
    g = build_sigraph(spec)
    pairs = {(a, b) for a, b, _ in g.edges}
    for gu, gv in [(1, 0), (0, 1), (2, 7)]:
        moved = set()
        for a, b in pairs:
            (ua, va), (ub, vb) = spec.vertex(a), spec.vertex(b)
            x, y = spec.index(ua + gu, va + gv), spec.index(ub + gu, vb + gv)
            moved.add((min(x, y), max(x, y)))
        assert moved == pairs


def test_family_grid():
    specs = family(120)
    assert all(s.p * s.n <= 120 and s.n % s.p == 0 for s in specs)
    assert (2, 60) in {(s.p, s.n) for s in specs}
    assert (11, 11) not in {(s.p, s.n) for s in specs}
    assert len(specs) == 49
