"""Divisor-closed sets of element orders and their prime graphs.

A spectrum is stored through its antichain ``mu`` of divisibility-maximal
elements; every query reduces to divisibility tests against ``mu``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Optional

from .numtheory import MAX_VALUE, factorize, prime_divisors


def checked_lcm(a: int, b: int, limit: Optional[int] = MAX_VALUE) -> int:
    """lcm, raising ``OverflowError`` above ``limit`` (``None``: no bound)."""
    value = a // math.gcd(a, b) * b
    if limit is not None and value > limit:
        raise OverflowError(f"lcm({a}, {b}) exceeds {limit}")
    return value


@dataclass(frozen=True)
class SpectrumSet:
    """Divisor-closed set of positive integers, given by its maximal elements.

    Build instances with :func:`normalize_mu`; the constructor assumes the
    tuple is already a sorted antichain and only validates it.
    """

    mu: tuple[int, ...]

    def __post_init__(self):
        mu = tuple(self.mu)
        object.__setattr__(self, "mu", mu)
        if not mu:
            raise ValueError("spectrum must be nonempty")
        if any(not isinstance(m, int) or m < 1 for m in mu):
            raise ValueError(f"spectrum entries must be positive ints: {mu}")
        if list(mu) != sorted(set(mu)):
            raise ValueError(f"mu must be sorted without duplicates: {mu}")
        for a, b in combinations(mu, 2):
            if b % a == 0:
                raise ValueError(f"mu is not an antichain: {a} divides {b}")

    def __contains__(self, n: int) -> bool:
        return contains(self, n)

    def __iter__(self):
        return iter(self.mu)

    def __len__(self):
        return len(self.mu)

    @property
    def primes(self) -> tuple[int, ...]:
        """Primes dividing some element, ascending."""
        out: set[int] = set()
        for m in self.mu:
            out |= prime_divisors(m)
        return tuple(sorted(out))

    def elements(self) -> list[int]:
        """The full divisor closure omega, ascending. Only for small spectra."""
        out: set[int] = set()
        for m in self.mu:
            divs = [1]
            for p, e in factorize(m):
                divs = [d * p**k for d in divs for k in range(e + 1)]
            out.update(divs)
        return sorted(out)


def normalize_mu(values: Iterable[int]) -> SpectrumSet:
    """Keep the divisibility-maximal values, sorted and deduplicated."""
    vals = sorted(set(values))
    if not vals:
        raise ValueError("cannot normalize an empty list")
    if vals[0] < 1:
        raise ValueError(f"spectrum values must be >= 1, got {vals[0]}")
    maximal = [a for i, a in enumerate(vals) if not any(b % a == 0 for b in vals[i + 1 :])]
    return SpectrumSet(tuple(maximal))


def contains(s: SpectrumSet, n: int) -> bool:
    """True iff ``n`` divides some element of ``s.mu``."""
    if n < 1:
        raise ValueError(f"element orders are positive, got {n}")
    return any(m % n == 0 for m in s.mu)


def direct_square_mu(s: SpectrumSet, limit: Optional[int] = MAX_VALUE) -> SpectrumSet:
    """mu of ``L x L`` from mu of ``L``: maximal pairwise lcms.

    Values above ``limit`` raise ``OverflowError``; pass ``limit=None`` to
    work with unbounded integers.
    """
    return direct_product_mu(s, s, limit)


def direct_product_mu(a: SpectrumSet, b: SpectrumSet, limit: Optional[int] = MAX_VALUE) -> SpectrumSet:
    return normalize_mu(checked_lcm(x, y, limit) for x in a.mu for y in b.mu)


@dataclass(frozen=True)
class PrimeGraph:
    vertices: tuple[int, ...]
    edges: frozenset[tuple[int, int]] = field(default_factory=frozenset)

    def adjacent(self, p: int, q: int) -> bool:
        return (min(p, q), max(p, q)) in self.edges

    def edge_list(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def to_dot(self, name: str = "G") -> str:
        """Undirected DOT text with one node per prime."""
        lines = [f'graph "{name}" {{']
        lines += [f"  {v};" for v in self.vertices]
        lines += [f"  {p} -- {q};" for p, q in self.edge_list()]
        lines.append("}")
        return "\n".join(lines) + "\n"


def prime_graph(s: SpectrumSet) -> PrimeGraph:
    """Gruenberg-Kegel graph: ``p ~ q`` iff ``p != q`` and ``p*q`` is an order."""
    verts = s.primes
    edges = frozenset((p, q) for p, q in combinations(verts, 2) if contains(s, p * q))
    return PrimeGraph(verts, edges)


def is_complete(g: PrimeGraph) -> bool:
    n = len(g.vertices)
    return len(g.edges) == n * (n - 1) // 2


def _clique_cover_bound(cand: int, adj: list[int]) -> int:
    # greedy partition of cand into cliques; an independent set meets each at most once
    count = 0
    while cand:
        v = (cand & -cand).bit_length() - 1
        clique = cand & adj[v]
        cand &= ~(1 << v)
        while clique:
            u = (clique & -clique).bit_length() - 1
            cand &= ~(1 << u)
            clique &= adj[u]
        count += 1
    return count


def independence_number(g: PrimeGraph) -> tuple[int, tuple[int, ...]]:
    """Exact independence number and the lexicographically least maximum
    independent set, by branch and bound over vertex bitmasks.

    Vertices are branched in ascending order, include-before-exclude, and
    the incumbent is only replaced on strict improvement; the first maximum
    set reached is therefore the lexicographically smallest one.
    """
    verts = g.vertices
    n = len(verts)
    if n > 64:
        raise ValueError("independence_number supports at most 64 vertices")
    index = {v: i for i, v in enumerate(verts)}
    adj = [0] * n
    for p, q in g.edges:
        i, j = index[p], index[q]
        adj[i] |= 1 << j
        adj[j] |= 1 << i

    best: list[int] = []

    def search(chosen: list[int], cand: int) -> None:
        nonlocal best
        if not cand:
            if len(chosen) > len(best):
                best = list(chosen)
            return
        if len(chosen) + _clique_cover_bound(cand, adj) <= len(best):
            return
        v = (cand & -cand).bit_length() - 1
        rest = cand & ~(1 << v)
        chosen.append(v)
        search(chosen, rest & ~adj[v])
        chosen.pop()
        search(chosen, rest)

    search([], (1 << n) - 1)
    witness = tuple(verts[i] for i in best)
    return len(witness), witness
