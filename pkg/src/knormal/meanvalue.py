"""Densities of k-normal elements and their partial averages.

For fixed q and k, ``lambda_{q,k}(n)`` is the fraction of F_{q^n} that is
k-normal, and ``A(t)`` is its average over ``1 <= n <= t``. Every quantity
is an exact :class:`fractions.Fraction`.

For a monic F of degree k with F(0) != 0 the partial sum ``S_F(t)`` splits
as ``t * M_F(t) + R_F(t)``; :func:`decompose` computes both sides with the
contributing squarefree G listed, plus the majorants ``M_F*`` and ``R_F*``.
Since ``floor(t/a) = t/a - {t/a}``, the remainder is
``R_F(t) = -sum_G {t/a_G} mu_q(G) / q^deg G``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import floor

from . import _polyarith as pa
from .fqpoly import (
    Factorization,
    Poly,
    factor_over,
    factor_xn_minus_1,
    mu_q,
    ord_poly,
    phi_q,
    squarefree_divisors,
)
from .gf import FieldSpec
from .intfun import integer_log_floor, isqrt_bounds
from .spectrum import count_from_shape

__all__ = [
    "DensityRow",
    "DensitySeries",
    "Term",
    "DecompReport",
    "CorollaryRow",
    "BoundCheck",
    "BudgetError",
    "IdentityError",
    "DEFAULT_G_BUDGET",
    "DEFAULT_T_BUDGET",
    "density_t_budget",
    "enumerate_Mk",
    "density_series",
    "ladder",
    "S_F_direct",
    "candidate_G",
    "decompose",
    "average_via_S",
    "corollary_exponent",
    "corollary_check",
    "bound_check_q0",
    "approx",
]

DEFAULT_G_BUDGET = 10**6
DEFAULT_T_BUDGET = 64


class BudgetError(ValueError):
    """A sweep would exceed a configured cap."""


class IdentityError(AssertionError):
    """An exact identity failed; indicates a bug."""


def approx(x: Fraction) -> float:
    """Float rounded to 12 significant digits, for display columns only."""
    return float(f"{float(x):.12g}")


def density_t_budget(q: int) -> int:
    return max(1, 20_000 // q)


@dataclass(frozen=True)
class DensityRow:
    n: int
    count: int
    density: Fraction
    running_average: Fraction


@dataclass(frozen=True)
class DensitySeries:
    q: int
    k: int
    rows: tuple[DensityRow, ...]

    def average(self, t: int) -> Fraction:
        return self.rows[t - 1].running_average

    @property
    def densities(self) -> list[Fraction]:
        return [r.density for r in self.rows]

    def check(self) -> None:
        total = Fraction(0)
        for r in self.rows:
            if not 0 <= r.density <= 1:
                raise IdentityError(f"density {r.density} at n={r.n} outside [0, 1]")
            total += r.density
            if r.running_average != total / r.n:
                raise IdentityError(f"running average drifts at n={r.n}")


def enumerate_Mk(spec: FieldSpec, k: int) -> list[Poly]:
    """Monic degree-k polynomials with nonzero constant term, by index."""
    if k < 0:
        raise ValueError(f"k must be nonnegative, got {k}")
    if k == 0:
        return [Poly.one(spec)]
    out = []
    for index in range(spec.q**k):
        if index % spec.q:
            out.append(Poly.from_index(spec, index, k))
    return out


def density_series(spec: FieldSpec, k: int, t: int, *, max_t: int | None = None) -> DensitySeries:
    """``lambda_{q,k}(n)`` and ``A(n)`` for n = 1..t.

    >>> from knormal.gf import make_base_field
    >>> density_series(make_base_field(2), 0, 3).average(3)
    Fraction(11, 24)
    """
    if t < 1:
        raise ValueError(f"t must be positive, got {t}")
    if k < 0:
        raise ValueError(f"k must be nonnegative, got {k}")
    cap = density_t_budget(spec.q) if max_t is None else max_t
    if t > cap:
        raise BudgetError(f"t = {t} exceeds the density-series cap of {cap} for q = {spec.q}")
    q = spec.q
    rows = []
    total = Fraction(0)
    for n in range(1, t + 1):
        count = count_from_shape(q, n, k)
        density = Fraction(count, q**n)
        total += density
        rows.append(DensityRow(n, count, density, total / n))
    return DensitySeries(q, k, tuple(rows))


def ladder(series: DensitySeries) -> list[tuple[int, Fraction, Fraction | None]]:
    """``(t', A(t'), A(t') - A(t'/2))`` for t' = 1, 2, 4, ... within the series."""
    out = []
    prev = None
    tp = 1
    while tp <= len(series.rows):
        a = series.average(tp)
        out.append((tp, a, None if prev is None else a - prev))
        prev = a
        tp *= 2
    return out


# -- S_F(t) and its decomposition -------------------------------------------


def _check_in_Mk(F: Poly, k: int) -> None:
    if not F.is_monic():
        raise ValueError(f"{F} is not monic")
    if F.degree != k:
        raise ValueError(f"{F} has degree {F.degree}, expected k = {k}")
    if F.coeffs[0] == 0:
        raise ValueError(f"{F} has zero constant term (divisible by X)")


def _first_unit_power(F: Poly, t: int) -> int | None:
    """Least n <= t with X^n = 1 mod F, by stepping through powers of X."""
    spec = F.field
    f = list(F.coeffs)
    x = [0, 1]
    r = pa.mod(spec, [1], f)
    for n in range(1, t + 1):
        r = pa.mod(spec, pa.mul(spec, r, x), f)
        if r == [1] or (not r and f == [1]):
            return n
    return None


def _factor_F(F: Poly, t: int) -> Factorization | None:
    """Factorization of F if F divides some X^n - 1 with n <= t, else None."""
    if F.is_one():
        return Factorization.one(F.field)
    N = _first_unit_power(F, t)
    if N is None:
        return None
    Ff = factor_over(F, N)
    if ord_poly(Ff) != N:
        raise IdentityError(f"ord({F}) = {ord_poly(Ff)} but X^{N} is the first unit power")
    return Ff


def S_F_direct(F: Poly, k: int, t: int) -> Fraction:
    """``sum_{n <= t, F | X^n - 1} Phi_q((X^n - 1)/F) / q^(n-k)``."""
    _check_in_Mk(F, k)
    if t < 1:
        raise ValueError(f"t must be positive, got {t}")
    spec = F.field
    q = spec.q
    Ff = _factor_F(F, t)
    if Ff is None:
        return Fraction(0)
    order = ord_poly(Ff)
    total = Fraction(0)
    for n in range(order, t + 1, order):
        if not F.divides(Poly.xn_minus_1(spec, n)):
            raise IdentityError(f"{F} fails to divide X^{n}-1 although ord = {order}")
        total += Fraction(phi_q(factor_xn_minus_1(spec, n).quotient(Ff)), q ** (n - k))
    return total


def candidate_G(spec: FieldSpec, t: int, *, budget: int = DEFAULT_G_BUDGET) -> list[Factorization]:
    """Every squarefree G with F_q-order at most t, deduplicated, canonical order.

    Such a G divides X^ord(G) - 1 with ord(G) prime to p, so the squarefree
    divisors of X^j - 1 for j <= t, p not dividing j, cover them all.
    """
    js = [j for j in range(1, t + 1) if j % spec.p]
    fact = {j: factor_xn_minus_1(spec, j) for j in js}
    raw = sum(2 ** len(fact[j].factors) for j in js)
    if raw > budget:
        raise BudgetError(f"{raw} candidate G for t = {t} exceeds the G budget of {budget}")
    seen: dict[tuple, Factorization] = {}
    for j in js:
        for G in squarefree_divisors(fact[j]):
            key = tuple(f.coeffs for f, _ in G.factors)
            seen.setdefault(key, G)
    return sorted(seen.values(), key=lambda G: (G.degree, G.poly.index))


@dataclass(frozen=True)
class Term:
    G: Poly
    a_G: int
    mu: int
    weight: Fraction  # mu_q(G) / q^deg G


@dataclass(frozen=True)
class DecompReport:
    F: Poly
    k: int
    t: int
    S: Fraction
    M: Fraction
    R: Fraction
    M_star: Fraction
    R_star: Fraction
    terms: tuple[Term, ...] = field(repr=False)

    @property
    def identity_holds(self) -> bool:
        return self.S == self.t * self.M + self.R

    @property
    def majorants_hold(self) -> bool:
        return abs(self.M) <= self.M_star and abs(self.R) <= self.R_star


def decompose(
    F: Poly,
    k: int,
    t: int,
    *,
    g_budget: int = DEFAULT_G_BUDGET,
    t_budget: int = DEFAULT_T_BUDGET,
) -> DecompReport:
    """``S_F(t) = t M_F(t) + R_F(t)`` with every contributing G.

    Raises :class:`IdentityError` if the two sides differ.
    """
    _check_in_Mk(F, k)
    if t < 1:
        raise ValueError(f"t must be positive, got {t}")
    if t > t_budget:
        raise BudgetError(f"t = {t} exceeds the decomposition t budget of {t_budget}")
    spec = F.field
    q = spec.q
    cands = candidate_G(spec, t, budget=g_budget)
    Ff = _factor_F(F, t)

    M = R = M_star = R_star = Fraction(0)
    terms = []
    for G in cands:
        ordG = ord_poly(G)
        if ordG > t:
            continue
        qdeg = q**G.degree
        M_star += Fraction(1, ordG * qdeg)
        R_star += Fraction(1, qdeg)
        if Ff is None:
            # ord(FG) >= ord(F) > t
            continue
        a = ord_poly(Ff.times(G))
        if a > t:
            continue
        mu = mu_q(G)
        w = Fraction(mu, qdeg)
        M += w / a
        # floor(t/a) = t/a - {t/a}, so the remainder enters with a minus sign
        R -= (Fraction(t, a) - t // a) * w
        terms.append(Term(G.poly, a, mu, w))

    S = S_F_direct(F, k, t)
    report = DecompReport(F, k, t, S, M, R, M_star, R_star, tuple(terms))
    if not report.identity_holds:
        raise IdentityError(f"S_F({t}) = {S} but t*M + R = {t * M + R} for F = {F}")
    return report


def average_via_S(spec: FieldSpec, k: int, t: int) -> Fraction:
    """``(1/(t q^k)) * sum_{F in M_k} S_F(t)``; equals the partial average A(t)."""
    total = sum((S_F_direct(F, k, t) for F in enumerate_Mk(spec, k)), Fraction(0))
    return total / (t * spec.q**k)


# -- lower bounds -----------------------------------------------------------


def corollary_exponent(p: int, k: int) -> int:
    """``floor(log_p k) + 1`` for k > 0, and 0 for k = 0: the least t with p^t > k."""
    if k < 0:
        raise ValueError(f"k must be nonnegative, got {k}")
    return 0 if k == 0 else integer_log_floor(k, p) + 1


@dataclass(frozen=True)
class CorollaryRow:
    u: int
    n: int  # p^t * u
    lhs: Fraction  # lambda_{q,k}(n)
    rhs: Fraction  # lambda_{q,0}(u) / q^k
    ok: bool


def corollary_check(spec: FieldSpec, k: int, T: int) -> list[CorollaryRow]:
    """Check ``lambda_{q,k}(p^t u) >= lambda_{q,0}(u) / q^k`` for all p^t u <= T."""
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    q, p = spec.q, spec.p
    step = p ** corollary_exponent(p, k)
    rows = []
    for u in range(1, T // step + 1):
        n = step * u
        lhs = Fraction(count_from_shape(q, n, k), q**n)
        rhs = Fraction(count_from_shape(q, u, 0), q**u) / q**k
        rows.append(CorollaryRow(u, n, lhs, rhs, lhs >= rhs))
    return rows


@dataclass(frozen=True)
class BoundCheck:
    """Partial average A(t) of normal densities against 1 - 1/sqrt(q) - 1/q.

    The bound concerns the limit of A(t); a finite t only gives evidence.
    ``bound`` is exact when q is a perfect square, otherwise ``bound_lo``
    and ``bound_hi`` enclose it.
    """

    q: int
    t: int
    A: Fraction
    bound: Fraction | None
    bound_lo: Fraction
    bound_hi: Fraction
    ok: bool
    note: str = "finite-t evidence for a statement about the limit"


def bound_check_q0(spec: FieldSpec, t: int) -> BoundCheck:
    q = spec.q
    if q < 4:
        raise ValueError(f"the bound 1 - 1/sqrt(q) - 1/q requires q >= 4, got q = {q}")
    A = density_series(spec, 0, t).average(t)
    base = 1 - Fraction(1, q)
    for digits in (12, 24, 48, 96, 192, 384):
        (lo_n, lo_d), (hi_n, hi_d) = isqrt_bounds(q, 1, digits)
        if lo_n == hi_n:
            bound = base - Fraction(lo_d, lo_n)
            return BoundCheck(q, t, A, bound, bound, bound, A > bound)
        # sqrt(q) in [lo, hi], so the bound lies in [base - 1/lo, base - 1/hi]
        b_lo = base - Fraction(lo_d, lo_n)
        b_hi = base - Fraction(hi_d, hi_n)
        if A > b_hi or A <= b_lo:
            return BoundCheck(q, t, A, None, b_lo, b_hi, A > b_hi)
    raise ArithmeticError(f"could not separate A({t}) from the bound for q = {q}")  # pragma: no cover
