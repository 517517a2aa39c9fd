"""Finite fields GF(p**k) in a polynomial basis.

Elements are encoded as integers ``0 <= v < p**k`` whose base-``p`` digits
are the polynomial coefficients, constant term first. Fields up to
``TABLE_LIMIT`` elements carry numpy add/mul/neg/inv tables so that the
enumeration code can work on whole arrays of elements at once.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import product

import numpy as np

from ..numtheory import factorize, is_prime

MAX_FIELD_SIZE = 2**20
TABLE_LIMIT = 2**12


def _poly_divides(f: list[int], g: list[int], p: int) -> bool:
    """Does ``f`` divide ``g`` over GF(p)? Both lists are constant-term first."""
    rem = list(g)
    inv_lead = pow(f[-1], -1, p)
    df = len(f) - 1
    for shift in range(len(rem) - 1 - df, -1, -1):
        c = rem[shift + df] * inv_lead % p
        if c:
            for i, fi in enumerate(f):
                rem[shift + i] = (rem[shift + i] - c * fi) % p
    return not any(rem[:df])


def is_irreducible(coeffs: list[int], p: int) -> bool:
    """Irreducibility over GF(p) by trial division with every monic
    polynomial of degree at most half the degree."""
    k = len(coeffs) - 1
    for deg in range(1, k // 2 + 1):
        for low in product(range(p), repeat=deg):
            if _poly_divides(list(low) + [1], coeffs, p):
                return False
    return True


@dataclass(frozen=True, eq=False)
class FiniteField:
    p: int
    k: int
    modulus: tuple[int, ...]

    @property
    def order(self) -> int:
        return self.p**self.k

    def __repr__(self):
        return f"GF({self.p}^{self.k})"

    # -- scalar arithmetic on integer codes --

    def digits(self, v: int) -> list[int]:
        out = []
        for _ in range(self.k):
            v, r = divmod(v, self.p)
            out.append(r)
        return out

    def from_digits(self, ds) -> int:
        v = 0
        for d in reversed(list(ds)):
            v = v * self.p + d % self.p
        return v

    def add(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a + b) % self.p
        return self.from_digits(x + y for x, y in zip(self.digits(a), self.digits(b)))

    def neg(self, a: int) -> int:
        if self.k == 1:
            return -a % self.p
        return self.from_digits(-x for x in self.digits(a))

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        p, k = self.p, self.k
        if k == 1:
            return a * b % p
        da, db = self.digits(a), self.digits(b)
        prod_ = [0] * (2 * k - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod_[i + j] = (prod_[i + j] + x * y) % p
        m = self.modulus
        for top in range(2 * k - 2, k - 1, -1):
            c = prod_[top]
            if c:
                for i in range(k + 1):
                    prod_[top - k + i] = (prod_[top - k + i] - c * m[i]) % p
        return self.from_digits(prod_[:k])

    def power(self, a: int, n: int) -> int:
        result, base = 1, a
        while n:
            if n & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            n >>= 1
        return result

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return self.power(a, self.order - 2)

    def mult_order(self, a: int) -> int:
        """Multiplicative order of a nonzero element."""
        if a == 0:
            raise ValueError("0 is not a unit")
        n = self.order - 1
        for r, _ in factorize(n):
            while n % r == 0 and self.power(a, n // r) == 1:
                n //= r
        return n

    @cached_property
    def generator(self) -> int:
        """Smallest code generating the multiplicative group."""
        for a in range(1, self.order):
            if self.mult_order(a) == self.order - 1:
                return a
        raise AssertionError("multiplicative group of a finite field is cyclic")

    def element(self, v) -> "FieldElement":
        if not isinstance(v, int):
            v = self.from_digits(v)
        return FieldElement(self, v % self.order)

    # -- vectorized tables --

    def _require_tables(self):
        if self.order > TABLE_LIMIT:
            raise ValueError(f"{self!r} is too large for arithmetic tables")

    @cached_property
    def exp_log(self) -> tuple[np.ndarray, np.ndarray]:
        self._require_tables()
        n = self.order - 1
        exp = np.zeros(n, dtype=np.int64)
        log = np.full(self.order, -1, dtype=np.int64)
        x = 1
        for i in range(n):
            exp[i] = x
            log[x] = i
            x = self.mul(x, self.generator)
        return exp, log

    @cached_property
    def mul_table(self) -> np.ndarray:
        exp, log = self.exp_log
        q = self.order
        la = log[:, None]
        lb = log[None, :]
        t = exp[(la + lb) % (q - 1)]
        t[0, :] = 0
        t[:, 0] = 0
        return t

    @cached_property
    def add_table(self) -> np.ndarray:
        self._require_tables()
        q, p = self.order, self.p
        codes = np.arange(q)
        digits = np.stack([(codes // p**i) % p for i in range(self.k)])
        total = np.zeros((q, q), dtype=np.int64)
        for i in range(self.k):
            total += ((digits[i][:, None] + digits[i][None, :]) % p) * p**i
        return total

    @cached_property
    def neg_table(self) -> np.ndarray:
        self._require_tables()
        return np.array([self.neg(a) for a in range(self.order)], dtype=np.int64)

    @cached_property
    def inv_table(self) -> np.ndarray:
        exp, log = self.exp_log
        t = np.zeros(self.order, dtype=np.int64)
        t[1:] = exp[(-log[1:]) % (self.order - 1)]
        return t


@dataclass(frozen=True)
class FieldElement:
    field: FiniteField
    value: int

    @property
    def coefficients(self) -> list[int]:
        return self.field.digits(self.value)

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field is not self.field:
                raise ValueError("elements of different fields")
            return other.value
        if isinstance(other, int):
            return self.field.element(other % self.field.p).value
        return NotImplemented

    def __add__(self, other):
        return FieldElement(self.field, self.field.add(self.value, self._coerce(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return FieldElement(self.field, self.field.sub(self.value, self._coerce(other)))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def __mul__(self, other):
        return FieldElement(self.field, self.field.mul(self.value, self._coerce(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self * FieldElement(self.field, self.field.inv(self._coerce(other)))

    def __pow__(self, n: int):
        if n < 0:
            return FieldElement(self.field, self.field.inv(self.value)) ** (-n)
        return FieldElement(self.field, self.field.power(self.value, n))

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"{self.field!r}({self.value})"


@lru_cache(maxsize=None)
def build_field(p: int, k: int = 1) -> FiniteField:
    """GF(p**k) modulo the monic irreducible of degree ``k`` with the smallest
    integer code (lowest coefficients as the least significant digits)."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if k < 1:
        raise ValueError("extension degree must be >= 1")
    if p**k > MAX_FIELD_SIZE:
        raise ValueError(f"GF({p}^{k}) exceeds the {MAX_FIELD_SIZE}-element bound")
    if k == 1:
        return FiniteField(p, 1, (0, 1))
    for code in range(p**k):
        low = [(code // p**i) % p for i in range(k)]
        coeffs = low + [1]
        if coeffs[0] and is_irreducible(coeffs, p):
            return FiniteField(p, k, tuple(coeffs))
    raise AssertionError(f"no irreducible polynomial of degree {k} over GF({p})")


def field_of_order(q: int) -> FiniteField:
    f = factorize(q).factors
    if len(f) != 1:
        raise ValueError(f"{q} is not a prime power")
    return build_field(*f[0])
