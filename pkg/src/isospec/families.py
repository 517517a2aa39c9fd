"""Closed-form data for the simple groups with abelian Sylow 2-subgroups:
``L2(q)``, the small Ree groups ``R(3**alpha)`` and ``J1``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Optional

from .numtheory import (
    MAX_VALUE,
    factorize,
    multiplicative_order,
    prime_divisors,
    prime_power,
    ree_primitive_primes,
    ree_sqrt3q,
)
from .spectra import SpectrumSet, normalize_mu

J1_ORDER = 2**3 * 3 * 5 * 7 * 11 * 19
J1_MU = (6, 7, 10, 11, 15, 19)


class Family(enum.Enum):
    LINEAR2 = "L2"
    SMALL_REE = "R"
    JANKO1 = "J1"


@dataclass(frozen=True)
class GroupFamilySpec:
    """A group from the classification list, with derived field parameters.

    Use the :meth:`linear2`, :meth:`small_ree` and :meth:`janko1`
    constructors (or :func:`parse_group`) rather than building by hand.
    """

    family: Family
    q: Optional[int] = None
    p: Optional[int] = None
    alpha: Optional[int] = None

    def __post_init__(self):
        if self.family is Family.JANKO1:
            if self.q is not None:
                raise ValueError("J1 takes no field parameter")
            return
        if self.q is None:
            raise ValueError(f"{self.family.value} needs q")
        p, alpha = prime_power(self.q)
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "alpha", alpha)
        if self.family is Family.LINEAR2 and self.q < 4:
            raise ValueError(f"L2(q) needs q >= 4, got {self.q}")
        if self.family is Family.SMALL_REE and (p != 3 or alpha < 3 or alpha % 2 == 0):
            raise ValueError(f"R(q) needs q = 3**alpha with alpha odd >= 3, got {self.q}")

    @classmethod
    def linear2(cls, q: int) -> "GroupFamilySpec":
        return cls(Family.LINEAR2, q)

    @classmethod
    def small_ree(cls, q: int) -> "GroupFamilySpec":
        return cls(Family.SMALL_REE, q)

    @classmethod
    def janko1(cls) -> "GroupFamilySpec":
        return cls(Family.JANKO1)

    @property
    def d(self) -> Optional[int]:
        if self.q is None:
            return None
        return math.gcd(2, self.q - 1)

    @property
    def name(self) -> str:
        if self.family is Family.JANKO1:
            return "J1"
        return f"{self.family.value}({self.q})"

    def __str__(self):
        return self.name


def parse_group(family: str, q: Optional[int] = None) -> GroupFamilySpec:
    """Build a spec from a CLI-style family tag (``L2``, ``R``, ``J1``)."""
    try:
        fam = Family(family)
    except ValueError:
        raise ValueError(f"unknown family {family!r}; expected L2, R or J1") from None
    return GroupFamilySpec(fam, q)


def _checked(value: int) -> int:
    if value > MAX_VALUE:
        raise OverflowError(f"group order {value} does not fit in 63 bits")
    return value


def order_of(spec: GroupFamilySpec) -> int:
    """Exact group order; raises ``OverflowError`` past 63 bits."""
    q = spec.q
    if spec.family is Family.LINEAR2:
        return _checked(q * (q * q - 1) // spec.d)
    if spec.family is Family.SMALL_REE:
        return _checked(q**3 * (q - 1) * (q**3 + 1))
    return J1_ORDER


def order_primes(spec: GroupFamilySpec) -> tuple[int, ...]:
    """pi(G), without forming the order itself for the Ree family.

    Uses ``q**3 + 1 = (q + 1)(q - sqrt(3q) + 1)(q + sqrt(3q) + 1)``.
    """
    if spec.family is Family.SMALL_REE:
        r = ree_sqrt3q(spec.alpha)
        parts = (3, spec.q - 1, spec.q + 1, spec.q - r + 1, spec.q + r + 1)
        primes: set[int] = set()
        for part in parts:
            primes |= prime_divisors(part)
        return tuple(sorted(primes))
    return factorize(order_of(spec)).primes


def raw_mu(spec: GroupFamilySpec) -> tuple[int, ...]:
    """The formula's list of maximal orders, in the order it is usually written."""
    q = spec.q
    if spec.family is Family.LINEAR2:
        return (spec.p, (q - 1) // spec.d, (q + 1) // spec.d)
    if spec.family is Family.SMALL_REE:
        r = ree_sqrt3q(spec.alpha)
        return (6, 9, q - 1, (q + 1) // 2, q - r + 1, q + r + 1)
    return J1_MU


def mu_of(spec: GroupFamilySpec) -> SpectrumSet:
    return normalize_mu(raw_mu(spec))


def has_abelian_sylow2(spec: GroupFamilySpec) -> bool:
    if spec.family is Family.LINEAR2:
        return spec.p == 2 or spec.q % 8 in (3, 5)
    return True


def order_coprime_to_5(spec: GroupFamilySpec) -> bool:
    if spec.family is Family.SMALL_REE:
        # the order may overflow; 5 divides it iff it divides one of its factors
        return 5 not in order_primes(spec)
    return order_of(spec) % 5 != 0


@dataclass(frozen=True)
class ReeComponents:
    """Maximal orders ``m1..m6`` of ``R(3**alpha)``, the odd parts ``pi1..pi6``
    of their prime sets, and the primitive-divisor sets ``rho3..rho6``."""

    alpha: int
    m: tuple[int, int, int, int, int, int]
    pi: tuple[frozenset, ...]
    rho: tuple[frozenset, ...]

    @property
    def q(self) -> int:
        return 3**self.alpha

    def pi_(self, i: int) -> frozenset:
        """pi_i, 1-based."""
        return self.pi[i - 1]

    def rho_(self, i: int) -> frozenset:
        """rho_i for i in 3..6."""
        if not 3 <= i <= 6:
            raise IndexError("rho is defined for i = 3..6")
        return self.rho[i - 3]


def ree_components(alpha: int) -> ReeComponents:
    """Components for ``q = 3**alpha``.

    rho3 and rho4 are the primes of ``m3 = q - 1`` and ``m4 = (q + 1)/2``
    whose multiplicative order of 3 is ``alpha`` and ``2*alpha``; these are
    exactly the primitive prime divisors of ``3**alpha - 1`` and
    ``3**(2*alpha) - 1``, but found without forming ``3**(2*alpha)``.
    """
    if alpha < 3 or alpha % 2 == 0:
        raise ValueError(f"alpha must be odd and >= 3, got {alpha}")
    spec = GroupFamilySpec.small_ree(3**alpha)
    m = raw_mu(spec)
    pi = (frozenset({2}), frozenset({3})) + tuple(prime_divisors(v) - {2} for v in m[2:])
    rho3 = frozenset(r for r in pi[2] if multiplicative_order(3, r) == alpha)
    rho4 = frozenset(r for r in pi[3] if multiplicative_order(3, r) == 2 * alpha)
    rho = (rho3, rho4, ree_primitive_primes(alpha, "-"), ree_primitive_primes(alpha, "+"))
    return ReeComponents(alpha, m, pi, rho)


def ree_square_display(alpha: int) -> SpectrumSet:
    """``{[m_i, m_j] : i < j, (i, j) not in {(1, 3), (1, 4)}}`` as a spectrum."""
    m = ree_components(alpha).m
    vals = [
        math.lcm(m[i], m[j])
        for i in range(6)
        for j in range(i + 1, 6)
        if (i + 1, j + 1) not in ((1, 3), (1, 4))
    ]
    return normalize_mu(vals)
