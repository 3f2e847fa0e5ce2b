"""Polynomial-time deciders with checkable witnesses, plus the closed-form
edge-count predictions for the Cayley family.

Every report carries either a certificate (marking, partition) or a
counterexample (cycle, path), so a verdict can be re-checked edge by edge.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional

from . import oracle
from .arith import factorize
from .cayley import GroupSpec, connection_set
from .sigraph import NEG, POS, Cycle, Sigraph, Sign, neg_degree

Marking = tuple[Sign, ...]


def _marking_to_list(m: Optional[Marking]):
    return None if m is None else [s.symbol for s in m]


def _marking_from_list(m) -> Optional[Marking]:
    return None if m is None else tuple(Sign.parse(s) for s in m)


def _cycle_to_dict(c: Optional[Cycle]):
    return None if c is None else c.to_dict()


def _cycle_from_dict(d) -> Optional[Cycle]:
    return None if d is None else Cycle.from_dict(d)


@dataclass(frozen=True)
class BalanceReport:
    balanced: bool
    switching_marking: Optional[Marking] = None
    witness_cycle: Optional[Cycle] = None

    def to_dict(self) -> dict:
        return {
            "balanced": self.balanced,
            "switching_marking": _marking_to_list(self.switching_marking),
            "witness_cycle": _cycle_to_dict(self.witness_cycle),
        }

    @classmethod
    def from_dict(cls, d: dict) -> BalanceReport:
        return cls(
            d["balanced"],
            _marking_from_list(d["switching_marking"]),
            _cycle_from_dict(d["witness_cycle"]),
        )


@dataclass(frozen=True)
class ClusterReport:
    clusterable: bool
    clusters: Optional[tuple[tuple[int, ...], ...]] = None
    witness_cycle: Optional[Cycle] = None

    def to_dict(self) -> dict:
        return {
            "clusterable": self.clusterable,
            "clusters": None if self.clusters is None else [list(c) for c in self.clusters],
            "witness_cycle": _cycle_to_dict(self.witness_cycle),
        }

    @classmethod
    def from_dict(cls, d: dict) -> ClusterReport:
        clusters = d["clusters"]
        return cls(
            d["clusterable"],
            None if clusters is None else tuple(tuple(c) for c in clusters),
            _cycle_from_dict(d["witness_cycle"]),
        )


@dataclass(frozen=True)
class CompatReport:
    compatible: bool
    marking: Optional[Marking] = None
    # (x, u, v, y) for S1, (u, v, x) for S2
    witness: Optional[tuple[int, ...]] = None

    @property
    def witness_kind(self) -> Optional[str]:
        if self.witness is None:
            return None
        return "S1" if len(self.witness) == 4 else "S2"

    def to_dict(self) -> dict:
        return {
            "compatible": self.compatible,
            "marking": _marking_to_list(self.marking),
            "witness": None if self.witness is None else list(self.witness),
        }

    @classmethod
    def from_dict(cls, d: dict) -> CompatReport:
        w = d["witness"]
        return cls(d["compatible"], _marking_from_list(d["marking"]), None if w is None else tuple(w))


@dataclass(frozen=True)
class ConditionResult:
    passed: Optional[bool]
    witness: object = None


@dataclass(frozen=True)
class LineConditionReport:
    cond1a: ConditionResult
    cond1b: ConditionResult
    cond2: ConditionResult
    exhaustive: bool

    @property
    def holds(self) -> Optional[bool]:
        """Whether the line sigraph is balanced according to the conditions.

        ``None`` when every checked condition passed but the cycle conditions
        were skipped by the size gate.
        """
        results = (self.cond1a.passed, self.cond1b.passed, self.cond2.passed)
        if False in results:
            return False
        return True if self.exhaustive else None

    def to_dict(self) -> dict:
        def enc(r: ConditionResult):
            w = r.witness
            if isinstance(w, Cycle):
                w = w.to_dict()
            return {"passed": r.passed, "witness": w}

        return {
            "cond1a": enc(self.cond1a),
            "cond1b": enc(self.cond1b),
            "cond2": enc(self.cond2),
            "exhaustive": self.exhaustive,
        }

    @classmethod
    def from_dict(cls, d: dict) -> LineConditionReport:
        def dec(r, cyclic):
            w = r["witness"]
            if cyclic and w is not None:
                w = Cycle.from_dict(w)
            return ConditionResult(r["passed"], w)

        return cls(
            dec(d["cond1a"], True),
            dec(d["cond1b"], True),
            dec(d["cond2"], False),
            d["exhaustive"],
        )


@dataclass(frozen=True)
class CountPrediction:
    applicable_rule: str
    predicted_positive: Optional[int] = None
    predicted_negative: Optional[int] = None

    def to_dict(self) -> dict:
        return {
            "rule": self.applicable_rule,
            "positive": self.predicted_positive,
            "negative": self.predicted_negative,
        }


def _tree_path(parent: list[int], v: int) -> list[int]:
    path = [v]
    while parent[v] != -1:
        v = parent[v]
        path.append(v)
    return path


def check_balance(g: Sigraph) -> BalanceReport:
    """Harary test: two-colour each component so that every edge sign equals
    the product of its end marks.  A clash gives the fundamental cycle of the
    offending non-tree edge, which has an odd number of negative edges."""
    n = g.vertex_count
    mark: list[Optional[Sign]] = [None] * n
    parent = [-1] * n
    for root in range(n):
        if mark[root] is not None:
            continue
        mark[root] = POS
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for y, i in g.incident(x):
                want = mark[x] * g.edges[i][2]
                if mark[y] is None:
                    mark[y] = want
                    parent[y] = x
                    queue.append(y)
                elif mark[y] is not want:
                    return BalanceReport(False, witness_cycle=_fundamental_cycle(g, parent, x, y))
    return BalanceReport(True, switching_marking=tuple(mark))


def _fundamental_cycle(g: Sigraph, parent: list[int], x: int, y: int) -> Cycle:
    px = _tree_path(parent, x)
    py = _tree_path(parent, y)
    on_py = set(py)
    lca_pos = next(i for i, v in enumerate(px) if v in on_py)
    lca = px[lca_pos]
    up = px[: lca_pos + 1]
    down = py[: py.index(lca)]
    return g.cycle(up + down[::-1]).canonical()


def _positive_path(g: Sigraph, a: int, b: int) -> list[int]:
    prev = {a: -1}
    queue = deque([a])
    while queue:
        x = queue.popleft()
        if x == b:
            break
        for y, i in g.incident(x):
            if y not in prev and g.edges[i][2] is POS:
                prev[y] = x
                queue.append(y)
    path = [b]
    while prev[path[-1]] != -1:
        path.append(prev[path[-1]])
    return path[::-1]


def check_clusterability(g: Sigraph) -> ClusterReport:
    """Clusters are the components of the positive subgraph; the graph is
    clusterable unless a negative edge lands inside one of them."""
    n = g.vertex_count
    cluster_of = [-1] * n
    clusters = []
    for root in range(n):
        if cluster_of[root] != -1:
            continue
        cid = len(clusters)
        cluster_of[root] = cid
        members = [root]
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for y, i in g.incident(x):
                if cluster_of[y] == -1 and g.edges[i][2] is POS:
                    cluster_of[y] = cid
                    members.append(y)
                    queue.append(y)
        clusters.append(tuple(sorted(members)))
    for a, b, s in g.edges:
        if s is NEG and cluster_of[a] == cluster_of[b]:
            path = _positive_path(g, a, b)
            return ClusterReport(False, witness_cycle=g.cycle(path).canonical())
    return ClusterReport(True, clusters=tuple(clusters))


def check_sign_compatibility(g: Sigraph) -> CompatReport:
    """Mark exactly the ends of negative edges negative.  That marking is the
    only candidate, so it fails precisely when some positive edge joins two
    vertices that each meet a negative edge."""
    n = g.vertex_count
    neg_nbrs: list[list[int]] = [[] for _ in range(n)]
    for a, b, s in g.edges:
        if s is NEG:
            neg_nbrs[a].append(b)
            neg_nbrs[b].append(a)
    marking = tuple(NEG if neg_nbrs[v] else POS for v in range(n))
    for u, v, s in g.edges:
        if s is POS and neg_nbrs[u] and neg_nbrs[v]:
            return CompatReport(False, witness=_forbidden_witness(neg_nbrs, u, v))
    return CompatReport(True, marking=marking)


def _forbidden_witness(neg_nbrs: list[list[int]], u: int, v: int) -> tuple[int, ...]:
    # x != v and y != u hold automatically: uv is positive, xu and vy negative
    for x in neg_nbrs[u]:
        for y in neg_nbrs[v]:
            if x != y:
                return (x, u, v, y)
    return (u, v, neg_nbrs[u][0])


def check_line_balance_conditions(
    g: Sigraph, cycle_limit: int = oracle.DEFAULT_CYCLE_LIMIT
) -> LineConditionReport:
    """Evaluate the three conditions under which the line sigraph of ``g`` is
    balanced.  The degree condition is always exact; the two cycle conditions
    need full cycle enumeration and are skipped above ``cycle_limit``."""
    bad_vertices = [
        v for v in range(g.vertex_count) if g.degree(v) > 2 and neg_degree(g, v) > 1
    ]
    cond2 = ConditionResult(not bad_vertices, bad_vertices or None)
    if g.vertex_count > cycle_limit:
        skipped = ConditionResult(None)
        return LineConditionReport(skipped, skipped, cond2, exhaustive=False)
    odd_negative, bad_hetero = oracle.line_conditions_by_cycles(g, cycle_limit)
    return LineConditionReport(
        ConditionResult(odd_negative is None, odd_negative),
        ConditionResult(bad_hetero is None, bad_hetero),
        cond2,
        exhaustive=True,
    )


def predicted_counts(spec: GroupSpec) -> list[CountPrediction]:
    """Every closed-form edge-count formula whose hypotheses ``spec`` meets.

    Formulas overlap and may disagree with each other and with the actual
    graph; this function only evaluates them.
    """
    p, n = spec.p, spec.n
    phi = connection_set(spec).size
    total = p * n * phi // 2
    out = []
    if n % 2 == 0:
        out.append(CountPrediction("prop31_even", predicted_positive=phi * phi))
    if p >= 3:
        out.append(CountPrediction("prop31_odd", phi * phi, total - phi * phi))
    primes = factorize(n).factors
    if p >= 3 and len(primes) == 1:
        alpha = primes[0][1]
        out.append(CountPrediction("lemma33", predicted_negative=p ** (alpha - 1) * phi))
    if p >= 3 and len(primes) == 2 and all(e == 1 for _, e in primes):
        q = next(r for r, _ in primes if r != p)
        if q >= 3:
            out.append(CountPrediction("lemma36", predicted_negative=phi * (2 * p + q - 3)))
    return out
