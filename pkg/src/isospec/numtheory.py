"""Integer arithmetic for 64-bit values: factorization, multiplicative
orders and primitive prime divisors.

Every public function accepts Python ints but refuses values that do not
fit in a signed 64-bit word, so results stay reproducible on fixed-width
ports of the same routines.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from functools import lru_cache

MAX_VALUE = 2**63 - 1
TRIAL_BOUND = 2**20
RHO_SEED = 20240611

# deterministic for n < 3.3 * 10**24
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def _check_range(n: int, what: str = "value") -> None:
    if n > MAX_VALUE:
        raise OverflowError(f"{what} {n} does not fit in 63 bits")


@lru_cache(maxsize=1)
def small_primes() -> tuple[int, ...]:
    """All primes below ``TRIAL_BOUND`` (sieve of Eratosthenes)."""
    sieve = bytearray([1]) * TRIAL_BOUND
    sieve[0] = sieve[1] = 0
    for i in range(2, math.isqrt(TRIAL_BOUND - 1) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytes(len(range(i * i, TRIAL_BOUND, i)))
    return tuple(i for i, flag in enumerate(sieve) if flag)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin test, exact for every 64-bit input."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    _check_range(n)
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _brent(n: int, rng: random.Random) -> int:
    """Return a nontrivial factor of the odd composite ``n``."""
    while True:
        y = rng.randrange(1, n)
        c = rng.randrange(1, n)
        m = 128
        g = r = q = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g


def _split(n: int, rng: random.Random, out: dict[int, int]) -> None:
    if n == 1:
        return
    if is_prime(n):
        out[n] = out.get(n, 0) + 1
        return
    root = math.isqrt(n)
    if root * root == n:
        _split(root, rng, out)
        _split(root, rng, out)
        return
    f = _brent(n, rng)
    _split(f, rng, out)
    _split(n // f, rng, out)


@dataclass(frozen=True)
class Factorization:
    """Prime factorization ``value = prod(p**e for p, e in factors)``."""

    value: int
    factors: tuple[tuple[int, int], ...]

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    def __iter__(self):
        return iter(self.factors)


@lru_cache(maxsize=4096)
def factorize(n: int) -> Factorization:
    """Factor ``1 <= n < 2**63``.

    Trial division by primes below ``2**20`` strips small factors; what
    remains is split with Brent's variant of Pollard rho driven by a fixed
    seed, so the output never depends on the run.
    """
    if isinstance(n, bool) or not isinstance(n, int):
        raise TypeError("factorize expects an int")
    if n < 1:
        raise ValueError(f"cannot factor {n}")
    _check_range(n)
    found: dict[int, int] = {}
    m = n
    for p in small_primes():
        if p * p > m:
            break
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            found[p] = e
    if m > 1:
        if m < TRIAL_BOUND * TRIAL_BOUND or is_prime(m):
            # no factor below 2**20 left, so m < 2**40 means m is prime
            found[m] = found.get(m, 0) + 1
        else:
            _split(m, random.Random(RHO_SEED), found)
    return Factorization(n, tuple(sorted(found.items())))


def prime_divisors(n: int) -> frozenset[int]:
    """pi(n): the set of primes dividing ``n``."""
    return frozenset(factorize(n).primes)


def multiplicative_order(q: int, r: int) -> int:
    """Smallest ``n >= 1`` with ``q**n == 1 (mod r)`` for a prime ``r``."""
    if not is_prime(r):
        raise ValueError(f"modulus {r} is not prime")
    if q % r == 0:
        raise ValueError(f"{r} divides {q}")
    n = r - 1
    for p, _ in factorize(r - 1):
        while n % p == 0 and pow(q, n // p, r) == 1:
            n //= p
    return n


def zsigmondy_primes(q: int, n: int) -> frozenset[int]:
    """Primitive prime divisors of ``q**n - 1``.

    These are the primes ``r`` with ``multiplicative_order(q, r) == n``.
    The set is empty only for ``(q, n) = (2, 6)`` and for ``n = 2`` with
    ``q + 1`` a power of two.
    """
    if q < 2 or n < 2:
        raise ValueError("need q >= 2 and n >= 2")
    value = q**n - 1
    _check_range(value, f"{q}**{n} - 1")
    return frozenset(r for r in factorize(value).primes if multiplicative_order(q, r) == n)


def ree_sqrt3q(alpha: int) -> int:
    """The integer sqrt(3 * 3**alpha) = 3**((alpha + 1) / 2) for odd alpha."""
    return 3 ** ((alpha + 1) // 2)


def ree_value(alpha: int, sign: int) -> int:
    """``3**alpha + sign * 3**((alpha + 1)/2) + 1``."""
    return 3**alpha + sign * ree_sqrt3q(alpha) + 1


def _parse_sign(sign) -> int:
    if sign in ("+", 1, +1):
        return 1
    if sign in ("-", -1):
        return -1
    raise ValueError(f"sign must be '+' or '-', got {sign!r}")


def ree_primitive_primes(alpha: int, sign) -> frozenset[int]:
    """Primes dividing ``3**a + e*3**((a+1)/2) + 1`` but none of the numbers
    ``3**(2i) - 3**i + 1`` for odd ``i < a``.

    ``sign`` is ``'+'``/``'-'`` (or ``+1``/``-1``). Divisibility by the
    excluded numbers is tested modulo each candidate prime, so ``i`` never
    produces a large intermediate.
    """
    if alpha < 3 or alpha % 2 == 0:
        raise ValueError(f"alpha must be odd and >= 3, got {alpha}")
    eps = _parse_sign(sign)
    value = ree_value(alpha, eps)
    _check_range(value)
    primes = set()
    for r in factorize(value).primes:
        if all((pow(3, 2 * i, r) - pow(3, i, r) + 1) % r for i in range(1, alpha, 2)):
            primes.add(r)
    return frozenset(primes)


def is_mersenne_prime(q: int) -> bool:
    return q >= 3 and (q + 1) & q == 0 and is_prime(q)


def prime_power(q: int) -> tuple[int, int]:
    """Split a prime power ``q = p**k`` into ``(p, k)``."""
    if q < 2:
        raise ValueError(f"{q} is not a prime power")
    f = factorize(q).factors
    if len(f) != 1:
        raise ValueError(f"{q} is not a prime power")
    return f[0]
