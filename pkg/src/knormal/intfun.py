"""Integer arithmetic functions: factorization, Euler's phi, divisor counts,
multiplicative orders.

Everything here works on Python ints, so there is no overflow at any size.
Factorization is plain trial division, which is enough for the moduli that
appear when factoring ``X^n - 1`` at desk scale.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd, isqrt

__all__ = [
    "IntFactorization",
    "factor_int",
    "euler_phi",
    "sigma0",
    "mult_order",
    "divisors",
    "is_prime",
    "prime_power",
    "lcm",
]


@dataclass(frozen=True)
class IntFactorization:
    value: int
    factors: tuple[tuple[int, int], ...]

    def __iter__(self):
        return iter(self.factors)

    def primes(self) -> list[int]:
        return [p for p, _ in self.factors]

    def recompose(self) -> int:
        out = 1
        for p, e in self.factors:
            out *= p**e
        return out


def _check_positive(m: int) -> None:
    if not isinstance(m, int) or isinstance(m, bool):
        raise TypeError(f"expected an int, got {type(m).__name__}")
    if m < 1:
        raise ValueError(f"expected a positive integer, got {m}")


@lru_cache(maxsize=4096)
def factor_int(m: int) -> IntFactorization:
    """Factor ``m >= 1`` by trial division; ``factor_int(1)`` has no factors."""
    _check_positive(m)
    factors = []
    rest = m
    for p in (2, 3):
        if rest % p == 0:
            e = 0
            while rest % p == 0:
                rest //= p
                e += 1
            factors.append((p, e))
    # 6k +- 1 wheel
    d, step = 5, 2
    while d * d <= rest:
        if rest % d == 0:
            e = 0
            while rest % d == 0:
                rest //= d
                e += 1
            factors.append((d, e))
        d += step
        step = 6 - step
    if rest > 1:
        factors.append((rest, 1))
    return IntFactorization(m, tuple(factors))


def is_prime(m: int) -> bool:
    if m < 2:
        return False
    f = factor_int(m).factors
    return len(f) == 1 and f[0][1] == 1


def prime_power(q: int) -> tuple[int, int] | None:
    """Return ``(p, m)`` with ``q = p**m``, or None if q is not a prime power."""
    if q < 2:
        return None
    f = factor_int(q).factors
    if len(f) != 1:
        return None
    return f[0]


def euler_phi(m: int) -> int:
    _check_positive(m)
    out = m
    for p, _ in factor_int(m):
        out = out // p * (p - 1)
    return out


def sigma0(m: int) -> int:
    """Number of positive divisors of m."""
    _check_positive(m)
    out = 1
    for _, e in factor_int(m):
        out *= e + 1
    return out


def divisors(m: int) -> list[int]:
    _check_positive(m)
    divs = [1]
    for p, e in factor_int(m):
        divs = [d * p**i for d in divs for i in range(e + 1)]
    return sorted(divs)


def mult_order(a: int, b: int) -> int:
    """Least ``j > 0`` with ``a**j == 1 (mod b)``; 1 when ``b == 1``."""
    _check_positive(b)
    if gcd(a, b) != 1:
        raise ValueError(f"order of {a} modulo {b} is undefined: gcd = {gcd(a, b)}")
    if b == 1:
        return 1
    a %= b
    x, j = a, 1
    while x != 1:
        x = x * a % b
        j += 1
    return j


def lcm(*xs: int) -> int:
    out = 1
    for x in xs:
        out = out * x // gcd(out, x)
    return out


def integer_log_floor(k: int, p: int) -> int:
    """``floor(log_p k)`` for ``k >= 1``, computed without floating point."""
    _check_positive(k)
    t, pk = 0, p
    while pk <= k:
        pk *= p
        t += 1
    return t


def isqrt_bounds(num: int, den: int, digits: int) -> tuple[tuple[int, int], tuple[int, int]]:
    """Rational bounds ``lo <= sqrt(num/den) <= hi`` with ``digits`` decimals.

    Returned as ``((lo_num, lo_den), (hi_num, hi_den))``.
    """
    scale = 10**digits
    # sqrt(num/den) = sqrt(num*den)/den
    r = isqrt(num * den * scale * scale)
    lo = (r, den * scale)
    hi = (r if r * r == num * den * scale * scale else r + 1, den * scale)
    return lo, hi
