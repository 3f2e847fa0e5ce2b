"""Per-instance analysis documents and the claim-by-claim verdict table.

Observed values come only from the deciders and oracles, never from the
closed-form formulas.  A DISAGREE row records a claim that enumeration
refutes; it is a finding, not a failure of this tool.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Iterable, Optional

from . import oracle
from .analysis import (
    BalanceReport,
    ClusterReport,
    CompatReport,
    CountPrediction,
    LineConditionReport,
    check_balance,
    check_clusterability,
    check_line_balance_conditions,
    check_sign_compatibility,
    predicted_counts,
)
from .arith import RunReport, is_prime, nonunit_runs
from .cayley import GroupSpec, build_sigraph, connection_set, family, validate_spec
from .errors import GateError, SigcayleyError
from .sigraph import EdgeCounts, Sigraph, components, edge_counts, line_sigraph
from .sigraph import from_dict as graph_from_dict
from .sigraph import to_dict as graph_to_dict

CLAIM_IDS = (
    "PROP31_EVEN",
    "PROP31_ODD",
    "LEM33",
    "LEM36",
    "THM37",
    "THM39",
    "THM311",
    "SIGNCOMPAT",
    "REMARK35",
)
DEFAULT_SWEEP_MAX = 120


class ConsistencyError(SigcayleyError):
    """Two independent routes to the same fact disagreed."""


@dataclass(frozen=True)
class AnalysisDocument:
    p: int
    n: int
    phi_size: int
    graph: Sigraph
    counts: EdgeCounts
    component_sizes: tuple[int, ...]
    balance: BalanceReport
    clusters: ClusterReport
    compat: CompatReport
    line_balanced: bool
    line_conditions: LineConditionReport
    runs: RunReport
    predictions: tuple[CountPrediction, ...]
    # oracle verdicts, None where the size gate refused
    oracle: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        g = graph_to_dict(self.graph)
        return {
            "spec": {"p": self.p, "n": self.n},
            "phi_size": self.phi_size,
            "vertices": g["vertices"],
            "edges": g["edges"],
            "analysis": {
                "counts": {"positive": self.counts.positive, "negative": self.counts.negative},
                "components": list(self.component_sizes),
                "balance": self.balance.to_dict(),
                "clusters": self.clusters.to_dict(),
                "compat": self.compat.to_dict(),
                "line_balance": {
                    "balanced": self.line_balanced,
                    "conditions": self.line_conditions.to_dict(),
                },
                "lambda": self.runs.to_dict(),
                "predictions": [c.to_dict() for c in self.predictions],
                "oracle": dict(self.oracle),
            },
        }

    def to_json(self, indent: Optional[int] = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    @classmethod
    def from_dict(cls, d: dict) -> AnalysisDocument:
        a = d["analysis"]
        return cls(
            p=d["spec"]["p"],
            n=d["spec"]["n"],
            phi_size=d["phi_size"],
            graph=graph_from_dict(d),
            counts=EdgeCounts(a["counts"]["positive"], a["counts"]["negative"]),
            component_sizes=tuple(a["components"]),
            balance=BalanceReport.from_dict(a["balance"]),
            clusters=ClusterReport.from_dict(a["clusters"]),
            compat=CompatReport.from_dict(a["compat"]),
            line_balanced=a["line_balance"]["balanced"],
            line_conditions=LineConditionReport.from_dict(a["line_balance"]["conditions"]),
            runs=RunReport.from_dict(a["lambda"]),
            predictions=tuple(
                CountPrediction(c["rule"], c["positive"], c["negative"]) for c in a["predictions"]
            ),
            oracle=dict(a["oracle"]),
        )

    @classmethod
    def from_json(cls, text: str) -> AnalysisDocument:
        return cls.from_dict(json.loads(text))

    def prediction(self, rule: str) -> Optional[CountPrediction]:
        return next((c for c in self.predictions if c.applicable_rule == rule), None)


def _gated(fn, g: Sigraph, limit: int) -> Optional[bool]:
    try:
        return fn(g, limit)
    except GateError:
        return None


def analyze(
    spec: GroupSpec,
    cycle_limit: int = oracle.DEFAULT_CYCLE_LIMIT,
    marking_limit: int = oracle.DEFAULT_MARKING_LIMIT,
) -> AnalysisDocument:
    g = build_sigraph(spec)
    line = line_sigraph(g)
    return AnalysisDocument(
        p=spec.p,
        n=spec.n,
        phi_size=connection_set(spec).size,
        graph=g,
        counts=edge_counts(g),
        component_sizes=tuple(len(c) for c in components(g)),
        balance=check_balance(g),
        clusters=check_clusterability(g),
        compat=check_sign_compatibility(g),
        line_balanced=check_balance(line).balanced,
        line_conditions=check_line_balance_conditions(g, cycle_limit),
        runs=nonunit_runs(spec.n),
        predictions=tuple(predicted_counts(spec)),
        oracle={
            "balanced": _gated(oracle.balance_by_cycles, g, cycle_limit),
            "clusterable": _gated(oracle.clusterability_by_cycles, g, cycle_limit),
            "compatible": _gated(oracle.sign_compat_exhaustive, g, marking_limit),
        },
    )


@dataclass(frozen=True)
class ClaimVerdict:
    claim_id: str
    p: int
    n: int
    predicted: Any
    observed: Any
    status: str
    note: str = ""

    def to_dict(self) -> dict:
        return {
            "claim": self.claim_id,
            "instance": [self.p, self.n],
            "predicted": self.predicted,
            "observed": self.observed,
            "status": self.status,
            "note": self.note,
        }


def _verdict(claim: str, doc: AnalysisDocument, predicted, observed, note: str = "") -> ClaimVerdict:
    status = "AGREE" if predicted == observed else "DISAGREE"
    return ClaimVerdict(claim, doc.p, doc.n, predicted, observed, status, note)


def _not_applicable(claim: str, doc: AnalysisDocument, reason: str) -> ClaimVerdict:
    return ClaimVerdict(claim, doc.p, doc.n, None, None, "NOT_APPLICABLE", reason)


def _is_odd_semiprime(n: int) -> bool:
    for q in range(3, int(n**0.5) + 1, 2):
        if n % q == 0:
            r = n // q
            return r != q and is_prime(q) and is_prime(r)
    return False


def _cross_check(doc: AnalysisDocument) -> None:
    """Raise if a decider and its independent oracle disagree."""
    pairs = (
        ("balanced", doc.balance.balanced),
        ("clusterable", doc.clusters.clusterable),
        ("compatible", doc.compat.compatible),
    )
    for key, decided in pairs:
        seen = doc.oracle.get(key)
        if seen is not None and seen != decided:
            raise ConsistencyError(f"({doc.p},{doc.n}) {key}: decider {decided}, oracle {seen}")
    holds = doc.line_conditions.holds
    if holds is not None and holds != doc.line_balanced:
        raise ConsistencyError(
            f"({doc.p},{doc.n}) line balance: conditions say {holds}, direct check {doc.line_balanced}"
        )


def _oracle_note(doc: AnalysisDocument, key: str) -> str:
    seen = doc.oracle.get(key)
    return "oracle: gate exceeded" if seen is None else f"oracle confirms {seen}"


def claims_for(doc: AnalysisDocument, claims: Iterable[str] = CLAIM_IDS) -> list[ClaimVerdict]:
    """One verdict per requested claim; claims whose hypotheses the instance
    does not meet come back NOT_APPLICABLE with the reason."""
    _cross_check(doc)
    wanted = set(claims)
    out = []
    has_two = doc.n % 2 == 0

    pred = doc.prediction("prop31_even")
    if pred is not None:
        out.append(_verdict("PROP31_EVEN", doc, pred.predicted_positive, doc.counts.positive))
    else:
        out.append(_not_applicable("PROP31_EVEN", doc, "n is odd"))
    pred = doc.prediction("prop31_odd")
    if pred is not None:
        out.append(
            _verdict(
                "PROP31_ODD",
                doc,
                [pred.predicted_positive, pred.predicted_negative],
                [doc.counts.positive, doc.counts.negative],
                "" if has_two else "instance has no prime factor 2",
            )
        )
    else:
        out.append(_not_applicable("PROP31_ODD", doc, "p = 2"))
    pred = doc.prediction("lemma33")
    if pred is not None:
        out.append(_verdict("LEM33", doc, pred.predicted_negative, doc.counts.negative))
    else:
        out.append(_not_applicable("LEM33", doc, "n is not a power of an odd p"))
    pred = doc.prediction("lemma36")
    if pred is not None:
        out.append(_verdict("LEM36", doc, pred.predicted_negative, doc.counts.negative))
    else:
        out.append(_not_applicable("LEM36", doc, "n is not p*q with odd primes p != q"))
    out.append(_verdict("THM37", doc, has_two, doc.balance.balanced, _oracle_note(doc, "balanced")))
    holds = doc.line_conditions.holds
    note = "line conditions: " + ("undecided (gate)" if holds is None else str(holds))
    out.append(_verdict("THM39", doc, has_two, doc.line_balanced, note))
    out.append(
        _verdict(
            "THM311", doc, doc.balance.balanced, doc.clusters.clusterable,
            _oracle_note(doc, "clusterable"),
        )
    )
    out.append(
        _verdict("SIGNCOMPAT", doc, True, doc.compat.compatible, _oracle_note(doc, "compatible"))
    )
    if _is_odd_semiprime(doc.n):
        out.append(_verdict("REMARK35", doc, [2, 2], [doc.runs.lam, doc.runs.maximal_run_count]))
    else:
        out.append(_not_applicable("REMARK35", doc, "n is not p*q with odd primes p != q"))
    return [v for v in out if v.claim_id in wanted]


def verify(
    specs: Iterable[GroupSpec],
    claims: Iterable[str] = CLAIM_IDS,
    cycle_limit: int = oracle.DEFAULT_CYCLE_LIMIT,
    marking_limit: int = oracle.DEFAULT_MARKING_LIMIT,
) -> list[ClaimVerdict]:
    claims = tuple(claims)
    unknown = set(claims) - set(CLAIM_IDS)
    if unknown:
        raise ValueError(f"unknown claim ids: {sorted(unknown)}")
    rows = []
    for spec in sorted(specs, key=lambda s: (s.p, s.n)):
        doc = analyze(spec, cycle_limit, marking_limit)
        rows.extend(claims_for(doc, claims))
    return rows


def sweep_specs(max_order: int = DEFAULT_SWEEP_MAX) -> list[GroupSpec]:
    return family(max_order)


__all__ = [
    "AnalysisDocument",
    "ClaimVerdict",
    "CLAIM_IDS",
    "ConsistencyError",
    "analyze",
    "claims_for",
    "sweep_specs",
    "validate_spec",
    "verify",
]
