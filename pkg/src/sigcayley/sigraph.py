"""Immutable signed simple graphs and the operations every analysis shares.

Vertices are the integers ``0..vertex_count-1``; optional string labels ride
along for output.  Edges are kept in canonical order (sorted ``(a, b)`` pairs
with ``a < b``) and are addressed by their position in that order.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence


class Sign(enum.IntEnum):
    POSITIVE = 1
    NEGATIVE = -1

    def __mul__(self, other):
        if isinstance(other, Sign):
            return Sign(int(self) * int(other))
        return int(self) * other

    __rmul__ = __mul__

    @property
    def symbol(self) -> str:
        return "+" if self is Sign.POSITIVE else "-"

    @classmethod
    def parse(cls, text: str | int) -> Sign:
        if text in ("+", 1, "1", "+1"):
            return cls.POSITIVE
        if text in ("-", -1, "-1"):
            return cls.NEGATIVE
        raise ValueError(f"not a sign: {text!r}")

    def __str__(self) -> str:
        return self.symbol


POS = Sign.POSITIVE
NEG = Sign.NEGATIVE


@dataclass(frozen=True)
class EdgeCounts:
    positive: int
    negative: int

    @property
    def total(self) -> int:
        return self.positive + self.negative


@dataclass(frozen=True)
class Cycle:
    """A closed walk ``vertices[0] .. vertices[-1] -> vertices[0]``.

    ``signs[i]`` is the sign of the edge from ``vertices[i]`` to
    ``vertices[(i + 1) % len]``, so the closing edge comes last.
    """

    vertices: tuple[int, ...]
    signs: tuple[Sign, ...]

    def __len__(self) -> int:
        return len(self.vertices)

    @property
    def negatives(self) -> int:
        return sum(1 for s in self.signs if s is NEG)

    @property
    def is_positive(self) -> bool:
        return self.negatives % 2 == 0

    @property
    def is_homogeneous(self) -> bool:
        return len(set(self.signs)) <= 1

    def canonical(self) -> Cycle:
        """Rotate to the smallest vertex and orient so the second vertex is
        smaller than the last."""
        k = len(self.vertices)
        i = self.vertices.index(min(self.vertices))
        verts = self.vertices[i:] + self.vertices[:i]
        signs = self.signs[i:] + self.signs[:i]
        if k > 2 and verts[1] > verts[-1]:
            verts = (verts[0],) + tuple(reversed(verts[1:]))
            signs = tuple(reversed(signs))
        return Cycle(verts, signs)

    def to_dict(self) -> dict:
        return {"vertices": list(self.vertices), "signs": [s.symbol for s in self.signs]}

    @classmethod
    def from_dict(cls, d: dict) -> Cycle:
        return cls(tuple(d["vertices"]), tuple(Sign.parse(s) for s in d["signs"]))


@dataclass(frozen=True, eq=False)
class Sigraph:
    vertex_count: int
    edges: tuple[tuple[int, int, Sign], ...]
    labels: tuple[str, ...] | None = None
    _adj: tuple[tuple[tuple[int, int], ...], ...] = field(init=False, repr=False)
    _index: dict = field(init=False, repr=False)

    def __post_init__(self):
        n = self.vertex_count
        if n < 0:
            raise ValueError("vertex_count must be non-negative")
        if self.labels is not None and len(self.labels) != n:
            raise ValueError("labels must have one entry per vertex")
        edges = []
        for a, b, s in self.edges:
            if a == b:
                raise ValueError(f"loop at vertex {a}")
            if not (0 <= a < n and 0 <= b < n):
                raise IndexError(f"edge ({a}, {b}) out of range for {n} vertices")
            a, b = (a, b) if a < b else (b, a)
            edges.append((a, b, Sign(s)))
        edges.sort(key=lambda e: (e[0], e[1]))
        index = {}
        adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
        for i, (a, b, _) in enumerate(edges):
            if (a, b) in index:
                raise ValueError(f"duplicate edge ({a}, {b})")
            index[(a, b)] = i
            adj[a].append((b, i))
            adj[b].append((a, i))
        object.__setattr__(self, "edges", tuple(edges))
        object.__setattr__(self, "_adj", tuple(tuple(row) for row in adj))
        object.__setattr__(self, "_index", index)

    @classmethod
    def from_edges(
        cls,
        vertex_count: int,
        edges: Iterable[tuple[int, int, Sign | str | int]],
        labels: Sequence[str] | None = None,
    ) -> Sigraph:
        return cls(
            vertex_count,
            tuple((a, b, Sign.parse(s) if not isinstance(s, Sign) else s) for a, b, s in edges),
            tuple(labels) if labels is not None else None,
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, Sigraph):
            return NotImplemented
        return (self.vertex_count, self.edges, self.labels) == (
            other.vertex_count,
            other.edges,
            other.labels,
        )

    def __hash__(self) -> int:
        return hash((self.vertex_count, self.edges, self.labels))

    def __repr__(self) -> str:
        return f"Sigraph(vertex_count={self.vertex_count}, edges={len(self.edges)})"

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def incident(self, v: int) -> tuple[tuple[int, int], ...]:
        """``(neighbor, edge_index)`` pairs at ``v`` in canonical edge order."""
        self._check_vertex(v)
        return self._adj[v]

    def neighbors(self, v: int) -> list[int]:
        return [w for w, _ in self.incident(v)]

    def degree(self, v: int) -> int:
        return len(self.incident(v))

    def edge_index(self, a: int, b: int) -> int | None:
        return self._index.get((a, b) if a < b else (b, a))

    def sign(self, a: int, b: int) -> Sign:
        i = self.edge_index(a, b)
        if i is None:
            raise KeyError(f"no edge ({a}, {b})")
        return self.edges[i][2]

    def has_edge(self, a: int, b: int) -> bool:
        return self.edge_index(a, b) is not None

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.vertex_count:
            raise IndexError(f"vertex {v} out of range for {self.vertex_count} vertices")

    def cycle(self, vertices: Sequence[int]) -> Cycle:
        """Attach edge signs to a vertex cycle; raises KeyError on a non-edge."""
        k = len(vertices)
        return Cycle(
            tuple(vertices), tuple(self.sign(vertices[i], vertices[(i + 1) % k]) for i in range(k))
        )

    def resigned(self, marking: Sequence[Sign]) -> Sigraph:
        """Switch every edge ``uv`` to ``marking[u] * sign * marking[v]``."""
        if len(marking) != self.vertex_count:
            raise ValueError("marking must cover every vertex")
        return Sigraph(
            self.vertex_count,
            tuple((a, b, marking[a] * s * marking[b]) for a, b, s in self.edges),
            self.labels,
        )

    def induced_subgraph(self, vertices: Iterable[int]) -> Sigraph:
        """Induced subgraph, relabelled ``0..k-1`` in increasing vertex order."""
        keep = sorted(set(vertices))
        pos = {v: i for i, v in enumerate(keep)}
        edges = tuple(
            (pos[a], pos[b], s) for a, b, s in self.edges if a in pos and b in pos
        )
        labels = tuple(self.label(v) for v in keep) if self.labels is not None else None
        return Sigraph(len(keep), edges, labels)

    def csr(self) -> tuple[list[int], list[int], list[int]]:
        """Compressed adjacency ``(indptr, indices, negative_flags)`` with each
        row sorted by neighbor."""
        indptr = [0]
        indices: list[int] = []
        neg: list[int] = []
        for v in range(self.vertex_count):
            for w, i in sorted(self._adj[v]):
                indices.append(w)
                neg.append(1 if self.edges[i][2] is NEG else 0)
            indptr.append(len(indices))
        return indptr, indices, neg


def edge_counts(g: Sigraph) -> EdgeCounts:
    neg = sum(1 for _, _, s in g.edges if s is NEG)
    return EdgeCounts(g.edge_count - neg, neg)


def neg_degree(g: Sigraph, v: int) -> int:
    return sum(1 for _, i in g.incident(v) if g.edges[i][2] is NEG)


def pos_degree(g: Sigraph, v: int) -> int:
    return g.degree(v) - neg_degree(g, v)


def components(g: Sigraph) -> list[list[int]]:
    """Connected components ignoring signs, each sorted, ordered by their
    smallest vertex."""
    seen = [False] * g.vertex_count
    out = []
    for root in range(g.vertex_count):
        if seen[root]:
            continue
        seen[root] = True
        comp = [root]
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for y, _ in g.incident(x):
                if not seen[y]:
                    seen[y] = True
                    comp.append(y)
                    queue.append(y)
        out.append(sorted(comp))
    return out


def line_sigraph(g: Sigraph) -> Sigraph:
    """Behzad-Chartrand line sigraph.

    Vertex ``i`` of the result is edge ``i`` of ``g``.  Two such vertices are
    adjacent when the edges share an endpoint, and that adjacency is negative
    only when both edges are negative.
    """
    edges = []
    for v in range(g.vertex_count):
        for (_, i), (_, j) in combinations(g.incident(v), 2):
            both_neg = g.edges[i][2] is NEG and g.edges[j][2] is NEG
            edges.append((i, j, NEG if both_neg else POS))
    labels = None
    if g.labels is not None:
        labels = tuple(f"{g.labels[a]}{g.labels[b]}" for a, b, _ in g.edges)
    return Sigraph(g.edge_count, tuple(edges), labels)


def _dot_quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(g: Sigraph, name: str = "sigraph") -> str:
    """Graphviz text: positive edges solid, negative edges dashed."""
    lines = [f"graph {_dot_quote(name)} {{"]
    for v in range(g.vertex_count):
        lines.append(f"  {v} [label={_dot_quote(g.label(v))}];")
    for a, b, s in g.edges:
        style = "solid" if s is POS else "dashed"
        lines.append(f'  {a} -- {b} [style={style}, label="{s.symbol}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_dict(g: Sigraph) -> dict:
    return {
        "vertices": [g.label(v) for v in range(g.vertex_count)],
        "edges": [{"a": a, "b": b, "sign": s.symbol} for a, b, s in g.edges],
    }


def from_dict(d: dict) -> Sigraph:
    verts = d["vertices"]
    return Sigraph.from_edges(
        len(verts), ((e["a"], e["b"], e["sign"]) for e in d["edges"]), verts
    )
