"""Affine Frobenius groups ``GF(Q)+ x| C`` with ``C`` a cyclic subgroup of
``GF(Q)*`` acting by multiplication, and the isospectral pair built from them.

For ``L = L2(q)`` take ``F1 = GF(q)+ x| C1`` with ``|C1| = (q-1)/d`` and
``F2 = GF(q^2)+ x| C2`` with ``|C2| = (q+1)/d``; then the solvable group
``F1 x F2`` has the same spectrum as ``L x L``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from math import gcd

from ..numtheory import prime_power
from ..spectra import SpectrumSet, direct_product_mu, direct_square_mu, normalize_mu
from .fields import FiniteField, build_field

MIN_Q, MAX_Q = 4, 16


@dataclass(frozen=True)
class FrobeniusPair:
    """Element ``(translation, scale)`` acting as ``x -> x*scale + translation``."""

    translation: int
    scale: int


class FrobeniusGroup:
    """``GF(Q)+ x| <c>`` with multiplication ``(v, c)(v', c') = (v c' + v', c c')``."""

    def __init__(self, field: FiniteField, complement_generator: int):
        if complement_generator == 0:
            raise ValueError("complement generator must be a unit")
        self.field = field
        self._mul = field.mul_table.tolist()
        self._add = field.add_table.tolist()
        self.c = complement_generator
        self.complement = self._cyclic(complement_generator)

    def _cyclic(self, c: int) -> tuple[int, ...]:
        out = [1]
        x = c
        while x != 1:
            out.append(x)
            x = self.field.mul(x, c)
        return tuple(out)

    @property
    def complement_order(self) -> int:
        return len(self.complement)

    @property
    def order(self) -> int:
        return self.field.order * self.complement_order

    def __len__(self):
        return self.order

    def identity(self) -> FrobeniusPair:
        return FrobeniusPair(0, 1)

    def elements(self):
        for c in self.complement:
            for v in range(self.field.order):
                yield FrobeniusPair(v, c)

    def __contains__(self, g: FrobeniusPair) -> bool:
        return 0 <= g.translation < self.field.order and g.scale in self.complement

    def multiply(self, g: FrobeniusPair, h: FrobeniusPair) -> FrobeniusPair:
        mul = self._mul
        return FrobeniusPair(self._add[mul[g.translation][h.scale]][h.translation], mul[g.scale][h.scale])

    def element_order(self, g: FrobeniusPair) -> int:
        """Order by repeated multiplication."""
        if g not in self:
            raise ValueError(f"{g} is not an element of this group")
        x, n = g, 1
        one = self.identity()
        while x != one:
            x = self.multiply(x, g)
            n += 1
            if n > self.order:
                raise RuntimeError(f"{g} is not an element of this group")
        return n

    def predicted_order(self, g: FrobeniusPair) -> int:
        """Order from the fixed-point-free action: ``|c|`` off the kernel,
        ``p`` on the nontrivial kernel."""
        if g.scale != 1:
            return self.field.mult_order(g.scale)
        return self.field.p if g.translation else 1

    @cached_property
    def order_counts(self) -> dict[int, int]:
        counts = Counter(self.element_order(g) for g in self.elements())
        return dict(sorted(counts.items()))

    @property
    def spectrum(self) -> SpectrumSet:
        return normalize_mu(self.order_counts)


def _check_q(q: int) -> tuple[int, int]:
    p, k = prime_power(q)
    if not MIN_Q <= q <= MAX_Q:
        raise ValueError(f"q must lie in [{MIN_Q}, {MAX_Q}], got {q}")
    return p, k


def build_witness_groups(q: int) -> tuple[FrobeniusGroup, FrobeniusGroup]:
    """``(F1, F2)`` for ``L2(q)``.

    ``C1`` is generated by ``g**d`` for the smallest primitive ``g`` of
    GF(q); ``C2`` by ``h**(d(q-1))`` for the smallest primitive ``h`` of
    GF(q^2), which has order ``(q+1)/d``.
    """
    p, k = _check_q(q)
    d = gcd(2, q - 1)
    small = build_field(p, k)
    big = build_field(p, 2 * k)
    f1 = FrobeniusGroup(small, small.power(small.generator, d))
    f2 = FrobeniusGroup(big, big.power(big.generator, d * (q - 1)))
    assert f1.complement_order == (q - 1) // d
    assert f2.complement_order == (q + 1) // d
    return f1, f2


@dataclass(frozen=True)
class UnrecognizabilityReport:
    q: int
    mu_witness: SpectrumSet
    mu_square: SpectrumSet
    mu_formula: SpectrumSet

    @property
    def equal(self) -> bool:
        return self.mu_witness == self.mu_square

    def __iter__(self):
        return iter((self.mu_witness, self.mu_square, self.equal))


def verify_unrecognizability(q: int) -> UnrecognizabilityReport:
    """Compare mu(F1 x F2), from full enumeration, with mu(L2(q) x L2(q)).

    ``mu_square`` uses the closed-form mu of ``L2(q)``; ``mu_formula`` is
    ``{p(q-1)/d, p(q+1)/d, (q^2-1)/d^2}`` for reference.
    """
    from ..families import GroupFamilySpec, mu_of

    p, _ = _check_q(q)
    d = gcd(2, q - 1)
    f1, f2 = build_witness_groups(q)
    mu_witness = direct_product_mu(f1.spectrum, f2.spectrum)
    mu_square = direct_square_mu(mu_of(GroupFamilySpec.linear2(q)))
    mu_formula = normalize_mu([p * (q - 1) // d, p * (q + 1) // d, (q * q - 1) // (d * d)])
    return UnrecognizabilityReport(q, mu_witness, mu_square, mu_formula)
