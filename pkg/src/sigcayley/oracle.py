"""Exponential ground-truth checks.

Everything here enumerates: every simple cycle, or every vertex marking.
The polynomial deciders in :mod:`sigcayley.analysis` are validated against
these, so nothing in this module may call into ``analysis``.  Each function
refuses graphs above its size gate instead of truncating.
"""

from __future__ import annotations

from . import kernels
from .errors import GateError, NotApplicableError
from .sigraph import NEG, POS, Cycle, Sigraph

SimpleCycle = Cycle

DEFAULT_CYCLE_LIMIT = 12
DEFAULT_MARKING_LIMIT = 16


def _gate(g: Sigraph, limit: int, what: str) -> None:
    if g.vertex_count > limit:
        raise GateError(what, g.vertex_count, limit)


def enumerate_simple_cycles(g: Sigraph, max_vertices: int = DEFAULT_CYCLE_LIMIT) -> list[Cycle]:
    """All simple cycles of ``g`` in canonical form.

    Order: by smallest vertex, then DFS order over ascending neighbors.
    """
    _gate(g, max_vertices, "enumerate_simple_cycles")
    indptr, indices, _ = g.csr()
    return [g.cycle(verts) for verts in kernels.simple_cycles(indptr, indices)]


def negative_count_histogram(g: Sigraph, max_vertices: int = DEFAULT_CYCLE_LIMIT) -> list[int]:
    """``hist[k]`` is the number of simple cycles with ``k`` negative edges."""
    _gate(g, max_vertices, "negative_count_histogram")
    indptr, indices, neg = g.csr()
    return kernels.negative_histogram(indptr, indices, neg)


def balance_by_cycles(g: Sigraph, max_vertices: int = DEFAULT_CYCLE_LIMIT) -> bool:
    hist = negative_count_histogram(g, max_vertices)
    return not any(hist[1::2])


def clusterability_by_cycles(g: Sigraph, max_vertices: int = DEFAULT_CYCLE_LIMIT) -> bool:
    hist = negative_count_histogram(g, max_vertices)
    return len(hist) < 2 or hist[1] == 0


def exhaustive_marking(g: Sigraph, max_vertices: int = DEFAULT_MARKING_LIMIT):
    """First valid sign-compatible marking in bitmask order, or None."""
    _gate(g, max_vertices, "sign_compat_exhaustive")
    ea = [a for a, _, _ in g.edges]
    eb = [b for _, b, _ in g.edges]
    eneg = [1 if s is NEG else 0 for _, _, s in g.edges]
    mask = kernels.first_valid_marking(g.vertex_count, ea, eb, eneg)
    if mask < 0:
        return None
    return tuple(NEG if (mask >> v) & 1 else POS for v in range(g.vertex_count))


def sign_compat_exhaustive(g: Sigraph, max_vertices: int = DEFAULT_MARKING_LIMIT) -> bool:
    return exhaustive_marking(g, max_vertices) is not None


def negative_sections(c: Cycle) -> list[int]:
    """Lengths of the maximal circular runs of negative edges, in order of
    where each run starts along the cycle."""
    if c.is_homogeneous:
        raise NotApplicableError("negative sections are defined for heterogeneous cycles only")
    signs = c.signs
    k = len(signs)
    # start scanning just after a positive edge so no run straddles the seam
    start = next(i for i in range(k) if signs[i] is POS) + 1
    runs = []
    length = 0
    for j in range(k):
        s = signs[(start + j) % k]
        if s is NEG:
            length += 1
        elif length:
            runs.append(length)
            length = 0
    if length:
        runs.append(length)
    return runs


def line_conditions_by_cycles(g: Sigraph, max_vertices: int = DEFAULT_CYCLE_LIMIT):
    """Cycle-quantified line-balance conditions.

    Returns ``(all_negative_odd, heterogeneous_bad)``: the first all-negative
    cycle of odd length and the first heterogeneous cycle with an odd number
    of even-length negative sections, each ``None`` when absent.
    """
    odd_negative = None
    bad_hetero = None
    for c in enumerate_simple_cycles(g, max_vertices):
        if c.is_homogeneous:
            if c.signs[0] is NEG and len(c) % 2 and odd_negative is None:
                odd_negative = c
        elif bad_hetero is None:
            even_sections = sum(1 for s in negative_sections(c) if s % 2 == 0)
            if even_sections % 2:
                bad_hetero = c
        if odd_negative is not None and bad_hetero is not None:
            break
    return odd_negative, bad_hetero
