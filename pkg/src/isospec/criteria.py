"""Sufficient conditions for nonsolvability read off a spectrum.

Two shapes of prime set force a group to be nonsolvable:

* a *triple* of primes whose pairwise products are all missing from the
  spectrum (an independent 3-set of the prime graph);
* a *quadruple* whose pairwise products are all present while no product
  of three of them is.

Failing to find either shape says nothing about solvability.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations
from math import prod
from typing import Iterable, Optional

from .spectra import SpectrumSet, contains


class WitnessKind(enum.Enum):
    TRIPLE = "triple"
    QUADRUPLE = "quadruple"


@dataclass(frozen=True)
class NonsolvabilityWitness:
    kind: WitnessKind
    primes: tuple[int, ...]
    verified_products: tuple[tuple[int, bool], ...]

    def to_dict(self) -> dict:
        return {
            "kind": self.kind.value,
            "primes": list(self.primes),
            "products": [{"product": n, "in_spectrum": ok} for n, ok in self.verified_products],
        }


@dataclass(frozen=True)
class AuditReport:
    source: str
    witness: Optional[NonsolvabilityWitness]
    search_space: int

    @property
    def found(self) -> bool:
        return self.witness is not None

    @property
    def verdict(self) -> str:
        if self.witness is None:
            return "no witness found"
        return f"nonsolvable ({self.witness.kind.value} witness)"

    def to_dict(self) -> dict:
        return {
            "source": self.source,
            "verdict": self.verdict,
            "witness": None if self.witness is None else self.witness.to_dict(),
            "search_space": self.search_space,
        }


def _validate(s: SpectrumSet, sigma: Iterable[int], size: int) -> tuple[int, ...]:
    primes = tuple(sorted(set(sigma)))
    if len(primes) != size:
        raise ValueError(f"need {size} distinct primes, got {sorted(sigma)}")
    missing = [p for p in primes if p not in s.primes]
    if missing:
        raise ValueError(f"primes {missing} divide no element of the spectrum")
    return primes


def _products(s: SpectrumSet, primes: tuple[int, ...], k: int) -> list[tuple[int, bool]]:
    return [(prod(c), contains(s, prod(c))) for c in combinations(primes, k)]


def check_triple(s: SpectrumSet, sigma: Iterable[int]) -> bool:
    """True iff no two of the three primes multiply to an element order."""
    primes = _validate(s, sigma, 3)
    return not any(ok for _, ok in _products(s, primes, 2))


def check_quadruple(s: SpectrumSet, sigma: Iterable[int]) -> bool:
    """True iff all six pairwise products are orders and no triple product is."""
    primes = _validate(s, sigma, 4)
    pairs = _products(s, primes, 2)
    triples = _products(s, primes, 3)
    return all(ok for _, ok in pairs) and not any(ok for _, ok in triples)


def audit_nonsolvability(s: SpectrumSet, source: str = "") -> AuditReport:
    """Exhaustive search for a witness: all 3-subsets of the primes first,
    then all 4-subsets, each in lexicographic order. The first hit wins."""
    primes = s.primes
    if len(primes) > 20:
        raise ValueError(f"audit limited to 20 primes, spectrum has {len(primes)}")
    examined = 0
    for sigma in combinations(primes, 3):
        examined += 1
        if check_triple(s, sigma):
            w = NonsolvabilityWitness(WitnessKind.TRIPLE, sigma, tuple(_products(s, sigma, 2)))
            return AuditReport(source, w, examined)
    for sigma in combinations(primes, 4):
        examined += 1
        if check_quadruple(s, sigma):
            checked = _products(s, sigma, 2) + _products(s, sigma, 3)
            w = NonsolvabilityWitness(WitnessKind.QUADRUPLE, sigma, tuple(checked))
            return AuditReport(source, w, examined)
    return AuditReport(source, None, examined)
