"""Counting k-normal elements of F_{q^n} over F_q.

Two independent routes:

* the divisor formula: the number of k-normal elements is the sum, over the
  monic degree-k divisors F of X^n - 1, of Phi_q((X^n - 1)/F);
* brute force: for each element a, the rank over F_q of the coordinate
  vectors of a, a^q, ..., a^(q^(n-1)) is n - k.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .fqpoly import (
    Factorization,
    divisors_of_degree,
    factor_xn_minus_1,
    phi_prime_power,
    phi_q,
    xn_minus_1_shape,
)
from .gf import ExtElem, ExtField, FieldSpec, make_extension

__all__ = [
    "Spectrum",
    "OracleBudgetError",
    "DEFAULT_ELEMENT_BUDGET",
    "count_k_normal",
    "count_terms",
    "full_spectrum",
    "spectrum_from_shape",
    "count_from_shape",
    "oracle_k_value",
    "oracle_spectrum",
    "rank_fq",
]

DEFAULT_ELEMENT_BUDGET = 1 << 20


class OracleBudgetError(ValueError):
    """Exhaustive enumeration would exceed the element budget."""


@dataclass(frozen=True)
class Spectrum:
    """``counts[k]`` is the number of k-normal elements of F_{q^n}, k = 0..n."""

    q: int
    n: int
    counts: tuple[int, ...]

    def __post_init__(self):
        if len(self.counts) != self.n + 1:
            raise ValueError(f"expected {self.n + 1} counts, got {len(self.counts)}")

    def check(self) -> None:
        if sum(self.counts) != self.q**self.n:
            raise AssertionError(f"spectrum of F_{self.q}^{self.n} sums to {sum(self.counts)}")
        if self.counts[self.n] != 1:
            raise AssertionError(f"{self.counts[self.n]} elements are {self.n}-normal, expected 1")

    def __getitem__(self, k: int) -> int:
        return self.counts[k] if 0 <= k <= self.n else 0


# -- divisor formula --------------------------------------------------------


def count_terms(spec: FieldSpec, n: int, k: int) -> list[tuple[Factorization, int]]:
    """Pairs ``(F, Phi_q((X^n - 1)/F))`` over monic F | X^n - 1 of degree k."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if k < 0 or k > n:
        return []
    full = factor_xn_minus_1(spec, n)
    return [(F, phi_q(full.quotient(F))) for F in divisors_of_degree(full, k)]


def count_k_normal(spec: FieldSpec, n: int, k: int) -> int:
    """Number of k-normal elements of F_{q^n}; 0 when k is outside [0, n].

    >>> from knormal.gf import make_base_field
    >>> [count_k_normal(make_base_field(2), 3, k) for k in range(4)]
    [3, 3, 1, 1]
    """
    return sum(phi for _, phi in count_terms(spec, n, k))


def _generating_poly(q: int, factors, kmax: int) -> list[int]:
    # prod over factors of sum_c Phi_q(f^(e-c)) x^(c deg f), truncated at kmax
    out = [1] + [0] * kmax
    for d, e in factors:
        local = [(c * d, phi_prime_power(q, d, e - c)) for c in range(e + 1) if c * d <= kmax]
        nxt = [0] * (kmax + 1)
        for i, a in enumerate(out):
            if a:
                for shift, b in local:
                    if i + shift > kmax:
                        break
                    nxt[i + shift] += a * b
        out = nxt
    return out


def full_spectrum(spec: FieldSpec, n: int) -> Spectrum:
    """All k-normal counts of F_{q^n} from one factorization of X^n - 1.

    Phi_q is multiplicative, so the divisor sums for every k are the
    coefficients of one product of per-factor polynomials.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    full = factor_xn_minus_1(spec, n)
    counts = _generating_poly(spec.q, [(f.degree, e) for f, e in full.factors], n)
    return Spectrum(spec.q, n, tuple(counts))


def spectrum_from_shape(q: int, n: int, kmax: int | None = None) -> list[int]:
    """Counts for k = 0..kmax using only the coset degree structure of X^n - 1.

    Equal to :func:`full_spectrum` but never builds a polynomial, so it
    stays cheap for n in the thousands.
    """
    kmax = n if kmax is None else min(kmax, n)
    return _generating_poly(q, [(d, e) for d, e, _ in xn_minus_1_shape(q, n)], kmax)


def count_from_shape(q: int, n: int, k: int) -> int:
    if k < 0 or k > n:
        return 0
    return spectrum_from_shape(q, n, k)[k]


# -- brute-force oracle -----------------------------------------------------


def rank_fq(rows: list[ExtElem], F: FieldSpec) -> int:
    """Rank over F_q of the given coordinate vectors (Gaussian elimination)."""
    basis: dict[int, list[int]] = {}  # pivot column -> row with 1 at pivot
    at, mt, nt, it = F.add_t, F.mul_t, F.neg_t, F.inv_t
    for row in rows:
        v = list(row)
        for col, b in basis.items():
            c = v[col]
            if c:
                neg_c = mt[nt[c]]
                v = [at[x][neg_c[y]] for x, y in zip(v, b)]
        pivot = next((i for i, x in enumerate(v) if x), None)
        if pivot is None:
            continue
        inv = mt[it[v[pivot]]]
        v = [inv[x] for x in v]
        # keep the basis reduced so each pivot column is cleared once
        for col, b in basis.items():
            c = b[pivot]
            if c:
                neg_c = mt[nt[c]]
                basis[col] = [at[x][neg_c[y]] for x, y in zip(b, v)]
        basis[pivot] = v
    return len(basis)


def _orbit(alpha: ExtElem, ext: ExtField) -> list[ExtElem]:
    rows = [alpha]
    for _ in range(ext.n - 1):
        rows.append(ext.frobenius(rows[-1]))
    return rows


def oracle_k_value(alpha: ExtElem, ext: ExtField) -> int:
    """``n - rank`` of the Frobenius orbit of alpha."""
    if len(alpha) != ext.n:
        raise ValueError(f"element has {len(alpha)} coordinates, field has degree {ext.n}")
    return ext.n - rank_fq(_orbit(tuple(alpha), ext), ext.base)


def _histogram_binary(ext: ExtField, start: int, stop: int) -> list[int]:
    # F_2 only: coordinate vectors packed into ints, bit i = coordinate i
    n = ext.n
    frob = [sum(bit << i for i, bit in enumerate(r)) for r in ext.frobenius_matrix()]
    hist = [0] * (n + 1)
    for v in range(start, stop):
        pivots: dict[int, int] = {}
        row = v
        for _ in range(n):
            w = row
            while w:
                top = w.bit_length() - 1
                b = pivots.get(top)
                if b is None:
                    pivots[top] = w
                    break
                w ^= b
            img = 0
            i = 0
            r = row
            while r:
                if r & 1:
                    img ^= frob[i]
                r >>= 1
                i += 1
            row = img
        hist[n - len(pivots)] += 1
    return hist


def _histogram_generic(ext: ExtField, start: int, stop: int) -> list[int]:
    F = ext.base
    n = ext.n
    frob = ext.frobenius_matrix()
    at, mt = F.add_t, F.mul_t
    hist = [0] * (n + 1)
    for index in range(start, stop):
        row = ext.element(index)
        rows = [row]
        for _ in range(n - 1):
            img = [0] * n
            for a, fr in zip(row, frob):
                if a:
                    ma = mt[a]
                    img = [at[x][ma[y]] for x, y in zip(img, fr)]
            row = tuple(img)
            rows.append(row)
        hist[n - rank_fq(rows, F)] += 1
    return hist


def _histogram(spec: FieldSpec, n: int, start: int, stop: int) -> list[int]:
    ext = make_extension(spec, n)
    if spec.q == 2:
        return _histogram_binary(ext, start, stop)
    return _histogram_generic(ext, start, stop)


def oracle_spectrum(
    spec: FieldSpec, n: int, *, budget: int = DEFAULT_ELEMENT_BUDGET, workers: int = 1
) -> Spectrum:
    """Histogram of :func:`oracle_k_value` over every element of F_{q^n}.

    Elements are visited in encoding order; with ``workers > 1`` the range
    is split into contiguous blocks whose histograms are summed.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    size = spec.q**n
    if size > budget:
        raise OracleBudgetError(
            f"enumerating F_{spec.q}^{n} needs {size} elements, over the budget of {budget}"
        )
    if workers <= 1:
        hist = _histogram(spec, n, 0, size)
    else:
        step = -(-size // workers)
        bounds = [(lo, min(lo + step, size)) for lo in range(0, size, step)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = pool.map(_histogram, *zip(*[(spec, n, lo, hi) for lo, hi in bounds]))
            hist = [sum(col) for col in zip(*parts)]
    return Spectrum(spec.q, n, tuple(hist))
