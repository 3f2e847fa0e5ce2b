import random

import pytest
from hypothesis import strategies as st

from sigcayley import Sigraph, validate_spec
from sigcayley.harness import analyze
from sigcayley.sigraph import NEG, POS


def random_sigraph(rng: random.Random, n: int, density: float) -> Sigraph:
    edges = [
        (a, b, NEG if rng.random() < 0.5 else POS)
        for a in range(n)
        for b in range(a + 1, n)
        if rng.random() < density
    ]
    return Sigraph(n, tuple(edges))


@st.composite
def sigraphs(draw, max_vertices=8, min_vertices=0):
    n = draw(st.integers(min_vertices, max_vertices))
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    signs = draw(st.lists(st.sampled_from([POS, NEG]), min_size=len(chosen), max_size=len(chosen)))
    return Sigraph(n, tuple((a, b, s) for (a, b), s in zip(chosen, signs)))


def cycle_graph(signs):
    k = len(signs)
    return Sigraph.from_edges(k, [(i, (i + 1) % k, s) for i, s in enumerate(signs)])


_DOCS = {}


@pytest.fixture(scope="session")
def doc_for():
    def get(p, n):
        if (p, n) not in _DOCS:
            _DOCS[(p, n)] = analyze(validate_spec(p, n))
        return _DOCS[(p, n)]

    return get
