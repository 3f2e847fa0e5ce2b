"""Factorization, unit sets of Z_n and runs of consecutive non-units."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, prod

from .errors import InvalidInputError


@dataclass(frozen=True)
class FactoredInteger:
    value: int
    factors: tuple[tuple[int, int], ...]

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(q for q, _ in self.factors)

    def totient(self) -> int:
        return prod(q ** (e - 1) * (q - 1) for q, e in self.factors)

    def __str__(self) -> str:
        return " * ".join(f"{q}^{e}" if e > 1 else str(q) for q, e in self.factors)


@dataclass(frozen=True)
class UnitSet:
    modulus: int
    members: tuple[int, ...]

    def __contains__(self, x: int) -> bool:
        return gcd(x % self.modulus, self.modulus) == 1 and x % self.modulus != 0

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)


@dataclass(frozen=True)
class RunReport:
    modulus: int
    lam: int
    run_starts: tuple[int, ...]
    all_runs: tuple[tuple[int, int], ...]

    @property
    def maximal_run_count(self) -> int:
        return len(self.run_starts)

    def to_dict(self) -> dict:
        return {
            "modulus": self.modulus,
            "lambda": self.lam,
            "run_starts": list(self.run_starts),
            "all_runs": [list(r) for r in self.all_runs],
        }

    @classmethod
    def from_dict(cls, d: dict) -> RunReport:
        return cls(
            modulus=d["modulus"],
            lam=d["lambda"],
            run_starts=tuple(d["run_starts"]),
            all_runs=tuple(tuple(r) for r in d["all_runs"]),
        )


def is_prime(x: int) -> bool:
    if x < 2:
        return False
    if x % 2 == 0:
        return x == 2
    d = 3
    while d * d <= x:
        if x % d == 0:
            return False
        d += 2
    return True


def factorize(value: int) -> FactoredInteger:
    """Trial-division factorization of ``value >= 2``."""
    if not isinstance(value, int) or value < 2:
        raise InvalidInputError(f"factorize needs an integer >= 2, got {value!r}")
    factors = []
    rest = value
    d = 2
    while d * d <= rest:
        if rest % d == 0:
            e = 0
            while rest % d == 0:
                rest //= d
                e += 1
            factors.append((d, e))
        d += 1 if d == 2 else 2
    if rest > 1:
        factors.append((rest, 1))
    return FactoredInteger(value, tuple(factors))


def units(modulus: int) -> UnitSet:
    """Residues in ``[1, modulus)`` coprime to ``modulus``."""
    if not isinstance(modulus, int) or modulus < 2:
        raise InvalidInputError(f"units needs a modulus >= 2, got {modulus!r}")
    return UnitSet(modulus, tuple(x for x in range(1, modulus) if gcd(x, modulus) == 1))


def nonunit_runs(modulus: int) -> RunReport:
    """Maximal blocks of consecutive residues in ``1..modulus-1`` sharing a
    prime factor with ``modulus``.

    Residue 0 is not scanned, so runs never wrap around.
    """
    if not isinstance(modulus, int) or modulus < 2:
        raise InvalidInputError(f"nonunit_runs needs a modulus >= 2, got {modulus!r}")
    runs: list[tuple[int, int]] = []
    start = None
    for x in range(1, modulus):
        if gcd(x, modulus) > 1:
            if start is None:
                start = x
        elif start is not None:
            runs.append((start, x - start))
            start = None
    if start is not None:
        runs.append((start, modulus - start))
    lam = max((length for _, length in runs), default=0)
    starts = tuple(s for s, length in runs if length == lam) if lam else ()
    return RunReport(modulus, lam, starts, tuple(runs))
