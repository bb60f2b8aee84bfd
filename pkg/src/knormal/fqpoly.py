"""Polynomials over F_q, the factorization of X^n - 1, and the polynomial
arithmetic functions mu_q, Phi_q and ord.

X^n - 1 is factored through q-cyclotomic cosets: with n = p^a * m and
gcd(m, p) = 1, every irreducible factor is the minimal polynomial of some
power of a primitive m-th root of unity, and appears with multiplicity p^a.
The factor list is sorted canonically, so divisor enumeration order is
reproducible.
"""

from __future__ import annotations

import re
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from itertools import product
from math import gcd

from . import _polyarith as pa
from .gf import ExtField, FieldSpec
from .intfun import divisors, factor_int, lcm, mult_order

__all__ = [
    "Poly",
    "MonicPoly",
    "Factorization",
    "PolySyntaxError",
    "FactorizationError",
    "parse_poly",
    "format_poly",
    "poly_mul",
    "poly_divrem",
    "poly_gcd",
    "poly_deriv",
    "poly_powmod",
    "cyclotomic_cosets",
    "xn_minus_1_shape",
    "factor_xn_minus_1",
    "factor_over",
    "mu_q",
    "phi_q",
    "phi_ratio_product",
    "phi_ratio_mobius",
    "phi_prime_power",
    "ord_poly",
    "order_of_irreducible",
    "divisors_of_degree",
    "squarefree_divisors",
    "all_divisors",
]


class PolySyntaxError(ValueError):
    """Polynomial literal does not match the grammar or is not monic."""


class FactorizationError(RuntimeError):
    """Internal consistency failure while factoring; indicates a bug."""


@dataclass(frozen=True)
class Poly:
    """Dense polynomial over F_q, coefficients lowest degree first.

    The zero polynomial has ``coeffs == ()``. Most of the package works with
    monic polynomials, but intermediate results (remainders, derivatives) need
    not be monic, so there is one class for both.
    """

    field: FieldSpec
    coeffs: tuple[int, ...]

    def __post_init__(self):
        c = list(self.coeffs)
        while c and c[-1] == 0:
            c.pop()
        q = self.field.q
        for x in c:
            if not 0 <= x < q:
                raise ValueError(f"coefficient {x} out of range for F_{q}")
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def one(cls, field: FieldSpec) -> Poly:
        return cls(field, (1,))

    @classmethod
    def x(cls, field: FieldSpec) -> Poly:
        return cls(field, (0, 1))

    @classmethod
    def xn_minus_1(cls, field: FieldSpec, n: int) -> Poly:
        return cls(field, (field.neg_t[1],) + (0,) * (n - 1) + (1,))

    @classmethod
    def from_index(cls, field: FieldSpec, index: int, degree: int) -> Poly:
        """Monic polynomial of the given degree with lower coefficients taken
        from the base-q digits of ``index``."""
        return cls(field, tuple(pa.from_index(field.q, index, degree)) + (1,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def is_one(self) -> bool:
        return self.coeffs == (1,)

    @property
    def index(self) -> int:
        """Integer from the coefficients below the leading one, base q."""
        return pa.to_index(self.field.q, self.coeffs[:-1])

    def sort_key(self) -> tuple[int, int]:
        return (self.degree, self.index)

    def _same(self, other: Poly) -> None:
        if self.field != other.field:
            raise ValueError(f"polynomials over different fields: {self.field} vs {other.field}")

    def __add__(self, other: Poly) -> Poly:
        self._same(other)
        return Poly(self.field, tuple(pa.add(self.field, list(self.coeffs), list(other.coeffs))))

    def __sub__(self, other: Poly) -> Poly:
        self._same(other)
        return Poly(self.field, tuple(pa.sub(self.field, list(self.coeffs), list(other.coeffs))))

    def __mul__(self, other: Poly) -> Poly:
        self._same(other)
        return Poly(self.field, tuple(pa.mul(self.field, list(self.coeffs), list(other.coeffs))))

    def __divmod__(self, other: Poly) -> tuple[Poly, Poly]:
        return poly_divrem(self, other)

    def __floordiv__(self, other: Poly) -> Poly:
        return poly_divrem(self, other)[0]

    def __mod__(self, other: Poly) -> Poly:
        return poly_divrem(self, other)[1]

    def __pow__(self, e: int) -> Poly:
        out = Poly.one(self.field)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def divides(self, other: Poly) -> bool:
        return not (other % self).coeffs

    def __call__(self, x: int) -> int:
        F = self.field
        acc = 0
        for c in reversed(self.coeffs):
            acc = F.add_t[F.mul_t[acc][x]][c]
        return acc

    def __str__(self) -> str:
        return format_poly(self)


MonicPoly = Poly


def poly_mul(A: Poly, B: Poly) -> Poly:
    return A * B


def poly_divrem(A: Poly, B: Poly) -> tuple[Poly, Poly]:
    A._same(B)
    if not B.coeffs:
        raise ZeroDivisionError("polynomial division by zero")
    quo, rem = pa.divmod_(A.field, list(A.coeffs), list(B.coeffs))
    return Poly(A.field, tuple(quo)), Poly(A.field, tuple(rem))


def poly_gcd(A: Poly, B: Poly) -> Poly:
    """Monic gcd; ``gcd(0, 0)`` is the zero polynomial."""
    A._same(B)
    return Poly(A.field, tuple(pa.gcd(A.field, list(A.coeffs), list(B.coeffs))))


def poly_deriv(A: Poly) -> Poly:
    return Poly(A.field, tuple(pa.deriv(A.field, list(A.coeffs))))


def poly_powmod(A: Poly, e: int, M: Poly) -> Poly:
    A._same(M)
    return Poly(A.field, tuple(pa.powmod(A.field, list(A.coeffs), e, list(M.coeffs))))


# -- literal syntax ---------------------------------------------------------

_TERM = re.compile(r"^(?:(?P<c>\d+)\*)?X(?:\^(?P<e>\d+))?$|^(?P<const>\d+)$")


def parse_poly(text: str, spec: FieldSpec) -> Poly:
    """Parse a monic polynomial such as ``"X^3+2*X+1"``.

    >>> from knormal.gf import make_base_field
    >>> parse_poly("X^3+2*X+1", make_base_field(3)).coeffs
    (1, 2, 0, 1)
    """
    s = "".join(text.split())
    if not s:
        raise PolySyntaxError("empty polynomial literal")
    terms: dict[int, int] = {}
    for raw in s.split("+"):
        mt = _TERM.match(raw)
        if mt is None:
            raise PolySyntaxError(f"cannot parse term {raw!r} in {text!r}")
        if mt.group("const") is not None:
            c, e = int(mt.group("const")), 0
        else:
            c = int(mt.group("c")) if mt.group("c") is not None else 1
            e = int(mt.group("e")) if mt.group("e") is not None else 1
        if not 0 <= c < spec.q:
            raise PolySyntaxError(f"coefficient {c} out of range [0, {spec.q})")
        if e in terms:
            raise PolySyntaxError(f"exponent {e} appears more than once in {text!r}")
        terms[e] = c
    nonzero = {e: c for e, c in terms.items() if c}
    if not nonzero:
        raise PolySyntaxError(f"{text!r} is the zero polynomial")
    deg = max(nonzero)
    if nonzero[deg] != 1:
        raise PolySyntaxError(f"{text!r} is not monic (leading coefficient {nonzero[deg]})")
    coeffs = [0] * (deg + 1)
    for e, c in nonzero.items():
        coeffs[e] = c
    return Poly(spec, tuple(coeffs))


def format_poly(A: Poly) -> str:
    if not A.coeffs:
        return "0"
    parts = []
    for e in range(A.degree, -1, -1):
        c = A.coeffs[e]
        if not c:
            continue
        if e == 0:
            parts.append(str(c))
            continue
        mono = "X" if e == 1 else f"X^{e}"
        parts.append(mono if c == 1 else f"{c}*{mono}")
    return "+".join(parts)


# -- factorizations ---------------------------------------------------------


@dataclass(frozen=True)
class Factorization:
    """A monic polynomial as a product of distinct monic irreducibles."""

    base: FieldSpec
    factors: tuple[tuple[Poly, int], ...]

    @classmethod
    def one(cls, base: FieldSpec) -> Factorization:
        return cls(base, ())

    @property
    def degree(self) -> int:
        return sum(f.degree * e for f, e in self.factors)

    @cached_property
    def poly(self) -> Poly:
        out = Poly.one(self.base)
        for f, e in self.factors:
            out = out * f**e
        return out

    def exponents(self) -> tuple[int, ...]:
        return tuple(e for _, e in self.factors)

    def is_squarefree(self) -> bool:
        return all(e == 1 for _, e in self.factors)

    def sub(self, exps: Sequence[int]) -> Factorization:
        """Divisor with exponent ``exps[i]`` on the i-th factor."""
        if len(exps) != len(self.factors):
            raise ValueError("exponent vector length mismatch")
        out = []
        for (f, e), c in zip(self.factors, exps):
            if not 0 <= c <= e:
                raise ValueError(f"exponent {c} outside [0, {e}]")
            if c:
                out.append((f, c))
        return Factorization(self.base, tuple(out))

    def complement(self, exps: Sequence[int]) -> Factorization:
        return self.sub([e - c for (_, e), c in zip(self.factors, exps)])

    def quotient(self, other: Factorization) -> Factorization:
        """``self / other``; ``other`` must divide ``self``."""
        have = dict(self.factors)
        for f, e in other.factors:
            if have.get(f, 0) < e:
                raise ValueError(f"{other} does not divide {self}")
            have[f] -= e
        return Factorization(self.base, _sorted_factors((f, e) for f, e in have.items() if e))

    def times(self, other: Factorization) -> Factorization:
        acc: dict[Poly, int] = {}
        for f, e in self.factors + other.factors:
            acc[f] = acc.get(f, 0) + e
        return Factorization(self.base, _sorted_factors(acc.items()))

    def __str__(self) -> str:
        if not self.factors:
            return "1"
        return "*".join(f"({f})" + (f"^{e}" if e > 1 else "") for f, e in self.factors)


def _sorted_factors(items: Iterable[tuple[Poly, int]]) -> tuple[tuple[Poly, int], ...]:
    return tuple(sorted(items, key=lambda fe: fe[0].sort_key()))


def cyclotomic_cosets(q: int, m: int) -> list[list[int]]:
    """q-cyclotomic cosets modulo m, each starting at its least element."""
    if gcd(q, m) != 1:
        raise ValueError(f"cosets need gcd(q, m) = 1, got q={q}, m={m}")
    seen = [False] * m
    out = []
    for j in range(m):
        if seen[j]:
            continue
        coset = []
        x = j
        while not seen[x]:
            seen[x] = True
            coset.append(x)
            x = x * q % m
        out.append(coset)
    return out


def _split_p(n: int, p: int) -> tuple[int, int]:
    """Write ``n = p**a * m`` with ``p`` not dividing ``m``; return ``(p**a, m)``."""
    pa_ = 1
    while n % p == 0:
        n //= p
        pa_ *= p
    return pa_, n


@lru_cache(maxsize=4096)
def xn_minus_1_shape(q: int, n: int) -> tuple[tuple[int, int, int], ...]:
    """Degree structure of X^n - 1 over F_q without building any polynomial.

    One ``(degree, multiplicity, order)`` triple per irreducible factor, in
    coset order. This carries everything Phi_q and the k-normal counts need.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    p = factor_int(q).factors[0][0]
    mult, m = _split_p(n, p)
    return tuple(
        (len(c), mult, m // gcd(c[0], m)) for c in cyclotomic_cosets(q, m)
    )


# orders of irreducibles met while factoring X^n - 1, keyed by (field, coeffs)
_ORDER_HINT: dict[tuple[FieldSpec, tuple[int, ...]], int] = {}


def _root_of_unity(L: ExtField, m: int) -> list[int]:
    """First element (encoding order) of L of exact multiplicative order m."""
    F = L.base
    mod = list(L.modulus)
    cofactor = (L.size - 1) // m
    primes = [r for r, _ in factor_int(m)]
    for index in range(1, L.size):
        h = pa.trim(pa.from_index(F.q, index, L.n))
        beta = pa.powmod(F, h, cofactor, mod)
        if all(pa.powmod(F, beta, m // r, mod) != [1] for r in primes):
            return beta
    raise FactorizationError(f"no element of order {m} in F_{F.q}^{L.n}")  # pragma: no cover


def _minimal_poly(L: ExtField, powers: list[list[int]], coset: list[int]) -> Poly:
    F = L.base
    mod = list(L.modulus)
    # coefficients are elements of L, as trimmed coefficient lists over F_q
    poly: list[list[int]] = [[1]]
    for j in coset:
        ng = pa.neg(F, powers[j])
        nxt = [[] for _ in range(len(poly) + 1)]
        for i, c in enumerate(poly):
            nxt[i + 1] = pa.add(F, nxt[i + 1], c)
            nxt[i] = pa.add(F, nxt[i], pa.mod(F, pa.mul(F, c, ng), mod))
        poly = nxt
    coeffs = []
    for c in poly:
        if len(c) > 1:
            raise FactorizationError(
                f"minimal polynomial coefficient {c} is not in F_{F.q} (coset {coset})"
            )
        coeffs.append(c[0] if c else 0)
    return Poly(F, tuple(coeffs))


@lru_cache(maxsize=512)
def factor_xn_minus_1(spec: FieldSpec, n: int) -> Factorization:
    """Complete factorization of X^n - 1 over ``spec``.

    >>> from knormal.gf import make_base_field
    >>> str(factor_xn_minus_1(make_base_field(2), 3))
    '(X+1)*(X^2+X+1)'
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    mult, m = _split_p(n, spec.p)
    cosets = cyclotomic_cosets(spec.q, m)
    if m == 1:
        irreducibles = [(Poly(spec, (spec.neg_t[1], 1)), 1)]
    else:
        s = mult_order(spec.q, m)
        L = ExtField(spec, s)
        beta = _root_of_unity(L, m)
        powers = [[1]]
        for _ in range(1, m):
            powers.append(pa.mod(spec, pa.mul(spec, powers[-1], beta), list(L.modulus)))
        irreducibles = [
            (_minimal_poly(L, powers, c), m // gcd(c[0], m)) for c in cosets
        ]
    for f, order in irreducibles:
        _ORDER_HINT[(spec, f.coeffs)] = order
    result = Factorization(spec, _sorted_factors((f, mult) for f, _ in irreducibles))
    if len({f for f, _ in result.factors}) != len(result.factors):
        raise FactorizationError(f"repeated factor in X^{n}-1 over {spec}")
    if result.poly != Poly.xn_minus_1(spec, n):
        raise FactorizationError(f"factors of X^{n}-1 over {spec} do not recompose")
    return result


def factor_over(F: Poly, n: int) -> Factorization:
    """Factor a divisor F of X^n - 1 by trial division with its known factors."""
    if not F.is_monic():
        raise ValueError(f"{F} is not monic")
    full = factor_xn_minus_1(F.field, n)
    rest = F
    out = []
    for f, e in full.factors:
        c = 0
        while c < e:
            quo, rem = divmod(rest, f)
            if rem.coeffs:
                break
            rest, c = quo, c + 1
        if c:
            out.append((f, c))
    if not rest.is_one():
        raise ValueError(f"{F} does not divide X^{n}-1")
    return Factorization(F.field, tuple(out))


# -- arithmetic functions ---------------------------------------------------


def _ddf_counts(F: Poly) -> list[int] | None:
    """Number of irreducible factors of each degree for squarefree F.

    Returns None when F is not squarefree.
    """
    spec = F.field
    f = list(F.coeffs)
    if pa.gcd(spec, f, pa.deriv(spec, f)) != [1]:
        return None
    counts = []
    x = [0, 1]
    xq = x
    rest = f
    d = 0
    while len(rest) - 1 > 0:
        d += 1
        if 2 * d > len(rest) - 1:
            counts.extend([0] * (len(rest) - 1 - d))
            counts.append(1)
            break
        xq = pa.powmod(spec, xq, spec.q, rest)
        g = pa.gcd(spec, rest, pa.sub(spec, xq, x))
        counts.append((len(g) - 1) // d)
        if len(g) > 1:
            rest = pa.divmod_(spec, rest, g)[0]
            xq = pa.mod(spec, xq, rest)
    return counts


def mu_q(F: Poly | Factorization) -> int:
    """Polynomial Moebius function."""
    if isinstance(F, Factorization):
        if not F.is_squarefree():
            return 0
        return -1 if len(F.factors) % 2 else 1
    if not F.is_monic():
        raise ValueError(f"{F} is not monic")
    if F.is_one():
        return 1
    counts = _ddf_counts(F)
    if counts is None:
        return 0
    return -1 if sum(counts) % 2 else 1


def phi_prime_power(q: int, d: int, e: int) -> int:
    """Phi_q(f^e) for an irreducible f of degree d."""
    if e == 0:
        return 1
    return q ** (d * (e - 1)) * (q**d - 1)


def phi_q(F: Factorization) -> int:
    """Number of units of F_q[X]/(F)."""
    q = F.base.q
    out = 1
    for f, e in F.factors:
        out *= phi_prime_power(q, f.degree, e)
    return out


def phi_ratio_product(F: Factorization) -> Fraction:
    """``prod_{H | F irreducible} (1 - q^-deg H)``."""
    q = F.base.q
    out = Fraction(1)
    for f, _ in F.factors:
        out *= 1 - Fraction(1, q**f.degree)
    return out


def phi_ratio_mobius(F: Factorization) -> Fraction:
    """``sum_{G | F} mu_q(G) / q^deg G`` over every monic divisor G."""
    q = F.base.q
    total = Fraction(0)
    for G in all_divisors(F):
        mu = mu_q(G)
        if mu:
            total += Fraction(mu, q**G.degree)
    return total


def _divides_xj_minus_1(f: Poly, e: int, j: int) -> bool:
    return _divides_cached(f.field, f.coeffs, e, j)


@lru_cache(maxsize=1 << 16)
def _divides_cached(spec: FieldSpec, coeffs: tuple[int, ...], e: int, j: int) -> bool:
    fe = list((Poly(spec, coeffs) ** e).coeffs)
    return pa.powmod(spec, [0, 1], j, fe) == [1]


@lru_cache(maxsize=1 << 14)
def _ord_irreducible(spec: FieldSpec, coeffs: tuple[int, ...]) -> int:
    hint = _ORDER_HINT.get((spec, coeffs))
    if hint is not None:
        return hint
    return _ord_by_divisors(spec, coeffs)


def order_of_irreducible(f: Poly) -> int:
    """Order of an irreducible f with f(0) != 0, from scratch."""
    if f.degree < 1 or f.coeffs[0] == 0:
        raise ValueError(f"order undefined for {f}")
    return _ord_by_divisors(f.field, f.coeffs)


@lru_cache(maxsize=1 << 14)
def _ord_by_divisors(spec: FieldSpec, coeffs: tuple[int, ...]) -> int:
    f = list(coeffs)
    # Lagrange: the order divides the size of (F_q[X]/f)^*
    for j in divisors(spec.q ** (len(f) - 1) - 1):
        if pa.powmod(spec, [0, 1], j, f) == [1]:
            return j
    raise FactorizationError(f"{Poly(spec, coeffs)} has no order; is it irreducible?")  # pragma: no cover


def _p_power_ceiling(p: int, e: int) -> int:
    """Least p^b with p^b >= e."""
    out = 1
    while out < e:
        out *= p
    return out


def ord_poly(F: Factorization) -> int:
    """Least j > 0 with F | X^j - 1.

    lcm of the orders of the irreducible factors, times the least power of p
    that is at least the largest multiplicity. The result is re-checked
    against the definition before it is returned.
    """
    spec = F.base
    for f, _ in F.factors:
        if f.coeffs[0] == 0:
            raise ValueError(f"order undefined: {f} is divisible by X")
    if not F.factors:
        return 1
    base = lcm(*(_ord_irreducible(spec, f.coeffs) for f, _ in F.factors))
    order = base * _p_power_ceiling(spec.p, max(e for _, e in F.factors))
    if not all(_divides_xj_minus_1(f, e, order) for f, e in F.factors):
        raise FactorizationError(f"{F} does not divide X^{order}-1")
    for r, _ in factor_int(order):
        if all(_divides_xj_minus_1(f, e, order // r) for f, e in F.factors):
            raise FactorizationError(f"{F} divides X^{order // r}-1; order {order} is not minimal")
    return order


def divisors_of_degree(F: Factorization, k: int) -> list[Factorization]:
    """Every monic divisor of F with degree exactly k.

    Exponent vectors are enumerated depth-first, first factor outermost, each
    exponent ascending.
    """
    degs = [f.degree for f, _ in F.factors]
    exps = [e for _, e in F.factors]
    if k < 0 or k > F.degree:
        return []
    # suffix capacity for pruning
    cap = [0] * (len(degs) + 1)
    for i in range(len(degs) - 1, -1, -1):
        cap[i] = cap[i + 1] + degs[i] * exps[i]
    out = []
    vec = [0] * len(degs)

    def walk(i: int, left: int) -> None:
        if left == 0:
            out.append(F.sub(vec))
            return
        if i == len(degs) or cap[i] < left:
            return
        for c in range(min(exps[i], left // degs[i]) + 1):
            vec[i] = c
            walk(i + 1, left - c * degs[i])
        vec[i] = 0

    walk(0, k)
    return out


def squarefree_divisors(F: Factorization) -> list[Factorization]:
    """All products of distinct irreducible factors of F, including 1."""
    r = len(F.factors)
    return [
        Factorization(F.base, tuple((f, 1) for (f, _), b in zip(F.factors, bits) if b))
        for bits in product((0, 1), repeat=r)
    ]


def all_divisors(F: Factorization) -> list[Factorization]:
    return [F.sub(v) for v in product(*(range(e + 1) for _, e in F.factors))]
