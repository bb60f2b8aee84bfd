"""Finite fields F_q (q = p^m) and their extensions F_{q^n}.

Elements of F_q are ints in ``[0, q)``: the base-p digits of the integer are
the F_p-coefficients of the residue modulo the defining polynomial, lowest
degree first. F_{q^n} is always built as an extension of F_q, so an element
is a length-n tuple of F_q encodings, i.e. its coordinates in the power basis.

Defining polynomials are canonical: among monic polynomials of the required
degree, ordered by the integer whose base-q digits are ``c_0, ..., c_{d-1}``,
the first irreducible one is used. Two constructions of the same field are
therefore identical.
"""

from __future__ import annotations

from collections.abc import Iterator, Sequence
from dataclasses import dataclass, field
from functools import lru_cache

from . import _polyarith as pa
from .intfun import factor_int, is_prime

__all__ = [
    "FieldSpec",
    "ExtField",
    "ExtElem",
    "FieldBudgetError",
    "MAX_BASE_FIELD",
    "make_base_field",
    "make_field",
    "make_extension",
    "is_irreducible",
    "irreducible_of_degree",
    "count_irreducibles",
    "frobenius",
]

MAX_BASE_FIELD = 1 << 8
"""Largest q for which :func:`make_base_field` builds arithmetic tables."""

ExtElem = tuple[int, ...]


class FieldBudgetError(ValueError):
    """Requested field is larger than the configured budget."""


@dataclass(frozen=True)
class FieldSpec:
    """The field F_q with q = p**m, with full add/mul tables."""

    p: int
    m: int
    q: int
    modulus: tuple[int, ...]
    add_t: tuple[tuple[int, ...], ...] = field(repr=False, compare=False)
    mul_t: tuple[tuple[int, ...], ...] = field(repr=False, compare=False)
    neg_t: tuple[int, ...] = field(repr=False, compare=False)
    inv_t: tuple[int, ...] = field(repr=False, compare=False)

    def add(self, a: int, b: int) -> int:
        return self.add_t[a][b]

    def sub(self, a: int, b: int) -> int:
        return self.add_t[a][self.neg_t[b]]

    def neg(self, a: int) -> int:
        return self.neg_t[a]

    def mul(self, a: int, b: int) -> int:
        return self.mul_t[a][b]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero in F_%d" % self.q)
        return self.inv_t[a]

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            a, e = self.inv(a), -e
        r = 1
        while e:
            if e & 1:
                r = self.mul_t[r][a]
            a = self.mul_t[a][a]
            e >>= 1
        return r

    def elements(self) -> range:
        return range(self.q)

    def check(self, a: int) -> int:
        if not 0 <= a < self.q:
            raise ValueError(f"{a} is not an element of F_{self.q}")
        return a

    def __str__(self) -> str:
        return f"F_{self.q}"


def _prime_tables(p: int):
    add_t = tuple(tuple((a + b) % p for b in range(p)) for a in range(p))
    mul_t = tuple(tuple(a * b % p for b in range(p)) for a in range(p))
    neg_t = tuple(-a % p for a in range(p))
    inv_t = (0,) + tuple(pow(a, -1, p) for a in range(1, p))
    return add_t, mul_t, neg_t, inv_t


def _digits(x: int, p: int, m: int) -> list[int]:
    return pa.from_index(p, x, m)


def _composite_tables(Fp: FieldSpec, m: int, modulus: Sequence[int]):
    p, q = Fp.p, Fp.p**m
    mod = list(modulus)
    digits = [_digits(x, p, m) for x in range(q)]
    add_t = tuple(
        tuple(pa.to_index(p, [(u + v) % p for u, v in zip(digits[a], digits[b])]) for b in range(q))
        for a in range(q)
    )
    neg_t = tuple(pa.to_index(p, [-u % p for u in digits[a]]) for a in range(q))
    mul_rows = []
    for a in range(q):
        da = pa.trim(list(digits[a]))
        row = []
        for b in range(q):
            r = pa.mod(Fp, pa.mul(Fp, da, pa.trim(list(digits[b]))), mod)
            row.append(pa.to_index(p, r))
        mul_rows.append(tuple(row))
    mul_t = tuple(mul_rows)
    inv = [0] * q
    for a in range(1, q):
        for b in range(1, q):
            if mul_t[a][b] == 1:
                inv[a] = b
                break
    return add_t, mul_t, neg_t, tuple(inv)


def _is_irreducible_raw(F: FieldSpec, f: list[int]) -> bool:
    d = len(f) - 1
    if d < 1:
        raise ValueError("irreducibility is undefined for constants")
    if d == 1:
        return True
    if f[0] == 0:
        return False
    f = pa.monic(F, f)
    x = [0, 1]
    xq = x
    for _ in range(d // 2):
        xq = pa.powmod(F, xq, F.q, f)
        if len(pa.gcd(F, f, pa.sub(F, xq, x))) > 1:
            return False
    return True


def _first_irreducible(F: FieldSpec, d: int) -> tuple[int, ...]:
    for index in range(F.q**d):
        f = pa.from_index(F.q, index, d) + [1]
        if _is_irreducible_raw(F, f):
            return tuple(f)
    raise AssertionError(f"no irreducible of degree {d} over F_{F.q}")  # pragma: no cover


@lru_cache(maxsize=None)
def _prime_field(p: int) -> FieldSpec:
    return FieldSpec(p, 1, p, (0, 1), *_prime_tables(p))


@lru_cache(maxsize=None)
def _build_field(p: int, m: int) -> FieldSpec:
    Fp = _prime_field(p)
    if m == 1:
        return Fp
    modulus = _first_irreducible(Fp, m)
    return FieldSpec(p, m, p**m, modulus, *_composite_tables(Fp, m, modulus))


def make_base_field(p: int, m: int = 1, *, budget: int = MAX_BASE_FIELD) -> FieldSpec:
    """Canonical F_q for q = p**m.

    >>> make_base_field(2, 2).modulus
    (1, 1, 1)
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if m < 1:
        raise ValueError(f"extension degree must be positive, got {m}")
    if p**m > budget:
        raise FieldBudgetError(f"q = {p}^{m} = {p**m} exceeds the base-field budget {budget}")
    return _build_field(p, m)


def make_field(q: int, *, budget: int = MAX_BASE_FIELD) -> FieldSpec:
    """Canonical F_q from the prime power q itself."""
    f = factor_int(q).factors if q >= 2 else ()
    if len(f) != 1:
        raise ValueError(f"{q} is not a prime power")
    p, m = f[0]
    return make_base_field(p, m, budget=budget)


def _coeffs(F) -> list[int]:
    if hasattr(F, "coeffs"):
        return list(F.coeffs)
    return pa.trim(list(F))


def is_irreducible(F, spec: FieldSpec) -> bool:
    """Rabin-style gcd test against ``X^(q^i) - X`` for ``i <= deg F / 2``."""
    f = _coeffs(F)
    if len(f) < 2:
        raise ValueError("irreducibility is undefined for constants")
    return _is_irreducible_raw(spec, f)


@lru_cache(maxsize=None)
def _irreducible_cached(spec: FieldSpec, d: int) -> tuple[int, ...]:
    return _first_irreducible(spec, d)


def irreducible_of_degree(spec: FieldSpec, d: int):
    """The canonically least monic irreducible of degree d over ``spec``."""
    from .fqpoly import Poly

    if d < 1:
        raise ValueError(f"degree must be positive, got {d}")
    return Poly(spec, _irreducible_cached(spec, d))


def _mobius_int(n: int) -> int:
    f = factor_int(n).factors
    if any(e > 1 for _, e in f):
        return 0
    return -1 if len(f) % 2 else 1


def count_irreducibles(spec: FieldSpec, N: int) -> int:
    """Exact number of monic irreducibles of degree N (necklace formula)."""
    if N < 1:
        raise ValueError(f"degree must be positive, got {N}")
    total = sum(_mobius_int(N // d) * spec.q**d for d in range(1, N + 1) if N % d == 0)
    return total // N


class ExtField:
    """F_{q^n} as F_q[X]/(modulus) with a canonical modulus of degree n."""

    def __init__(self, base: FieldSpec, n: int, modulus: Sequence[int] | None = None):
        if n < 1:
            raise ValueError(f"extension degree must be positive, got {n}")
        self.base = base
        self.n = n
        self.modulus = tuple(modulus) if modulus is not None else _irreducible_cached(base, n)
        if len(self.modulus) != n + 1 or self.modulus[-1] != 1:
            raise ValueError("modulus must be monic of degree n")
        self.size = base.q**n
        self._mod = list(self.modulus)

    def __repr__(self) -> str:
        return f"ExtField(q={self.base.q}, n={self.n}, modulus={self.modulus})"

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ExtField)
            and self.base == other.base
            and self.n == other.n
            and self.modulus == other.modulus
        )

    def __hash__(self) -> int:
        return hash((self.base, self.n, self.modulus))

    def _pad(self, a: list[int]) -> ExtElem:
        return tuple(a) + (0,) * (self.n - len(a))

    @property
    def zero(self) -> ExtElem:
        return (0,) * self.n

    @property
    def one(self) -> ExtElem:
        return self._pad([1])

    def gen(self) -> ExtElem:
        """Class of X."""
        return self._pad(pa.mod(self.base, [0, 1], self._mod))

    def element(self, index: int) -> ExtElem:
        return tuple(pa.from_index(self.base.q, index, self.n))

    def index(self, a: ExtElem) -> int:
        return pa.to_index(self.base.q, a)

    def elements(self) -> Iterator[ExtElem]:
        for i in range(self.size):
            yield self.element(i)

    def add(self, a: ExtElem, b: ExtElem) -> ExtElem:
        at = self.base.add_t
        return tuple(at[x][y] for x, y in zip(a, b))

    def sub(self, a: ExtElem, b: ExtElem) -> ExtElem:
        at, nt = self.base.add_t, self.base.neg_t
        return tuple(at[x][nt[y]] for x, y in zip(a, b))

    def scale(self, c: int, a: ExtElem) -> ExtElem:
        row = self.base.mul_t[c]
        return tuple(row[x] for x in a)

    def mul(self, a: ExtElem, b: ExtElem) -> ExtElem:
        F = self.base
        return self._pad(pa.mod(F, pa.mul(F, pa.trim(list(a)), pa.trim(list(b))), self._mod))

    def pow(self, a: ExtElem, e: int) -> ExtElem:
        if e < 0:
            raise ValueError("negative exponent")
        F = self.base
        return self._pad(pa.powmod(F, pa.trim(list(a)), e, self._mod))

    def frobenius(self, a: ExtElem) -> ExtElem:
        return self.pow(a, self.base.q)

    def frobenius_matrix(self) -> list[ExtElem]:
        """Rows are the images of the power basis under ``a -> a^q``.

        The image of ``a`` is ``sum_i a[i] * rows[i]``.
        """
        basis = [self._pad([0] * i + [1]) for i in range(self.n)]
        return [self.frobenius(e) for e in basis]


@lru_cache(maxsize=None)
def make_extension(spec: FieldSpec, n: int) -> ExtField:
    return ExtField(spec, n)


def frobenius(alpha: ExtElem, ext: ExtField) -> ExtElem:
    """``alpha ** q`` where q is the size of the base field."""
    return ext.frobenius(alpha)
