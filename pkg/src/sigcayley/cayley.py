"""Signed Cayley graphs on Z_p x Z_n with connection set phi(p) x phi(n).

An edge is positive when at least one endpoint is itself a member of the
connection set, and negative otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache

from .arith import FactoredInteger, factorize, is_prime, units
from .errors import DivisibilityError, InvalidInputError, InvalidPrimeError
from .sigraph import NEG, POS, Sigraph

Vertex = tuple[int, int]


@dataclass(frozen=True)
class GroupSpec:
    p: int
    n: int
    n_factors: FactoredInteger

    @property
    def order(self) -> int:
        return self.p * self.n

    def index(self, u: int, v: int) -> int:
        return (u % self.p) * self.n + (v % self.n)

    def vertex(self, index: int) -> Vertex:
        return divmod(index, self.n)

    def label(self, index: int) -> str:
        u, v = self.vertex(index)
        return f"({u},{v})"

    @property
    def n_is_even(self) -> bool:
        return self.n % 2 == 0


@dataclass(frozen=True)
class ConnectionSet:
    spec: GroupSpec
    members: frozenset[Vertex]

    @property
    def size(self) -> int:
        return len(self.members)

    def __contains__(self, x: Vertex) -> bool:
        return x in self.members

    def __len__(self) -> int:
        return len(self.members)

    @cached_property
    def sorted_members(self) -> tuple[Vertex, ...]:
        return tuple(sorted(self.members))


def validate_spec(p: int, n: int) -> GroupSpec:
    if not isinstance(p, int) or not isinstance(n, int):
        raise InvalidInputError("p and n must be integers")
    if not is_prime(p):
        raise InvalidPrimeError(f"p must be prime, got {p}")
    if n < 1 or n % p:
        raise DivisibilityError(f"p must divide n, got p={p}, n={n}")
    return GroupSpec(p, n, factorize(n))


def connection_set(spec: GroupSpec) -> ConnectionSet:
    return ConnectionSet(
        spec, frozenset((a, b) for a in units(spec.p) for b in units(spec.n))
    )


def _build(spec: GroupSpec) -> Sigraph:
    phi = connection_set(spec)
    p, n = spec.p, spec.n
    steps = phi.sorted_members
    in_phi = [False] * spec.order
    for a, b in steps:
        in_phi[a * n + b] = True
    edges = {}
    for x in range(spec.order):
        u, v = divmod(x, n)
        for a, b in steps:
            y = ((u + a) % p) * n + (v + b) % n
            # (0,0) is not a unit, so translation never fixes a vertex
            assert y != x, "loop in Cayley graph"
            key = (x, y) if x < y else (y, x)
            edges[key] = POS if in_phi[x] or in_phi[y] else NEG
    g = Sigraph(
        spec.order,
        tuple((a, b, s) for (a, b), s in edges.items()),
        tuple(spec.label(i) for i in range(spec.order)),
    )
    assert all(g.degree(x) == phi.size for x in range(spec.order)), "not |Phi|-regular"
    return g


@lru_cache(maxsize=64)
def _build_cached(p: int, n: int) -> Sigraph:
    return _build(validate_spec(p, n))


def build_sigraph(spec: GroupSpec) -> Sigraph:
    """The signed Cayley graph of ``spec``, vertices indexed ``u * n + v``."""
    return _build_cached(spec.p, spec.n)


def phi_vertices(spec: GroupSpec) -> list[int]:
    """Indices of the vertices that belong to the connection set."""
    return sorted(spec.index(a, b) for a, b in connection_set(spec).members)


def family(max_order: int) -> list[GroupSpec]:
    """Every valid ``(p, n)`` with ``p * n <= max_order``, ordered by ``(p, n)``."""
    out = []
    for p in range(2, max_order + 1):
        if not is_prime(p) or p * p > max_order:
            continue
        for n in range(p, max_order // p + 1, p):
            out.append(validate_spec(p, n))
    return out
