from fractions import Fraction

import pytest

from knormal.fqpoly import Poly, mu_q, ord_poly, parse_poly
from knormal.gf import make_field
from knormal.meanvalue import (
    BudgetError,
    S_F_direct,
    approx,
    average_via_S,
    bound_check_q0,
    candidate_G,
    corollary_check,
    corollary_exponent,
    decompose,
    density_series,
    density_t_budget,
    enumerate_Mk,
    ladder,
)
from knormal.spectrum import oracle_spectrum

from _oracles import monic_polys, pmul, prem, units_by_gcd

F2, F3, F4, F9 = (make_field(q) for q in (2, 3, 4, 9))


def P(text, F=F2):
    return parse_poly(text, F)


# -- M_k and density series -------------------------------------------------


def test_enumerate_Mk_examples():
    assert enumerate_Mk(F2, 0) == [Poly.one(F2)]
    assert [str(f) for f in enumerate_Mk(F2, 1)] == ["X+1"]
    assert len(enumerate_Mk(F3, 2)) == 6
    for q in (2, 3, 4, 5):
        F = make_field(q)
        for k in range(1, 4):
            Mk = enumerate_Mk(F, k)
            assert len(Mk) == (q - 1) * q ** (k - 1)
            assert all(f.degree == k and f.is_monic() and f.coeffs[0] for f in Mk)
            assert [f.index for f in Mk] == sorted(f.index for f in Mk)


def test_density_examples():
    s = density_series(F2, 0, 3)
    assert s.densities == [Fraction(1, 2), Fraction(1, 2), Fraction(3, 8)]
    assert s.average(3) == Fraction(11, 24)
    s = density_series(F2, 1, 2)
    assert s.densities == [Fraction(1, 2), Fraction(1, 4)]
    assert s.average(2) == Fraction(3, 8)


def test_density_row_n_equals_k_is_zero_element_only():
    for k in (1, 2, 3):
        assert density_series(F2, k, k).rows[k - 1].density == Fraction(1, 2**k)


def test_density_matches_oracle_counts():
    for q, tmax in ((2, 10), (3, 6), (4, 5)):
        F = make_field(q)
        for k in range(3):
            s = density_series(F, k, tmax)
            for row in s.rows:
                sp = oracle_spectrum(F, row.n)
                expect = sp[k] if k <= row.n else 0
                assert row.count == expect


def test_running_average_no_drift():
    for q, k in ((2, 0), (2, 1), (3, 0), (4, 2)):
        s = density_series(make_field(q), k, 200)
        s.check()
        prefix = Fraction(0)
        for n, d in enumerate(s.densities, 1):
            prefix += d
            assert s.average(n) == prefix / n


def test_density_budget():
    assert density_t_budget(2) == 10000
    assert density_t_budget(4) == 5000
    with pytest.raises(BudgetError, match="cap"):
        density_series(F2, 0, 10001)
    with pytest.raises(ValueError):
        density_series(F2, 0, 0)


def test_ladder_shape():
    s = density_series(F2, 0, 20)
    lad = ladder(s)
    assert [t for t, _, _ in lad] == [1, 2, 4, 8, 16]
    assert lad[0][2] is None
    for (t0, a0, _), (t1, a1, d1) in zip(lad, lad[1:]):
        assert d1 == a1 - a0 and a1 == s.average(t1)


# regression constants, recorded from the first run (12 significant digits)
LADDER_Q2_K0 = {16: 0.437852859497, 32: 0.435459765329, 64: 0.431509431831,
                128: 0.430803223818, 256: 0.43002381379, 512: 0.429790811772}


def test_ladder_regression_q2():
    s = density_series(F2, 0, 512)
    got = {t: approx(a) for t, a, _ in ladder(s) if t >= 16}
    assert got == LADDER_Q2_K0


# -- S_F and the decomposition ----------------------------------------------


def test_S_direct_examples():
    assert S_F_direct(Poly.one(F2), 0, 1) == Fraction(1, 2)
    assert S_F_direct(P("X+1"), 1, 3) == Fraction(9, 4)
    assert S_F_direct(P("X^2+X+1"), 2, 2) == 0


def test_S_direct_rejects_outside_Mk():
    with pytest.raises(ValueError, match="constant term"):
        S_F_direct(P("X"), 1, 4)
    with pytest.raises(ValueError, match="degree"):
        S_F_direct(P("X+1"), 2, 4)


def test_S_direct_against_definition():
    # sum over n <= t with F | X^n - 1 of Phi((X^n-1)/F) / q^(n-k), Phi by counting units
    for F in enumerate_Mk(F2, 2) + enumerate_Mk(F2, 1):
        k = F.degree
        total = Fraction(0)
        for n in range(1, 10):
            xn = Poly.xn_minus_1(F2, n)
            if F.divides(xn):
                quo, _ = divmod(xn, F)
                total += Fraction(units_by_gcd(F2, quo.coeffs), 2 ** (n - k))
        assert S_F_direct(F, k, 9) == total


def test_decompose_examples():
    r = decompose(P("X+1"), 1, 2)
    assert (r.S, r.M, r.R) == (Fraction(3, 2), Fraction(3, 4), 0)
    assert sorted((str(tm.G), tm.a_G) for tm in r.terms) == [("1", 1), ("X+1", 2)]
    r = decompose(Poly.one(F2), 0, 1)
    assert (r.S, r.M, r.R) == (Fraction(1, 2), Fraction(1, 2), 0)
    assert sorted(str(tm.G) for tm in r.terms) == ["1", "X+1"]


def test_decompose_empty_sum():
    r = decompose(P("X^2+X+1"), 2, 2)
    assert r.S == 0 and r.t * r.M + r.R == 0 and r.terms == ()


def test_decompose_term_invariants():
    for q in (2, 3):
        F = make_field(q)
        for Fpoly in enumerate_Mk(F, 2):
            r = decompose(Fpoly, 2, 12)
            for tm in r.terms:
                assert tm.a_G <= r.t
                assert tm.mu == mu_q(tm.G) != 0
                assert tm.G.coeffs[0] != 0
                assert tm.weight == Fraction(tm.mu, q**tm.G.degree)


def test_decompose_budgets():
    with pytest.raises(BudgetError, match="t budget"):
        decompose(P("X+1"), 1, 65)
    with pytest.raises(BudgetError, match="G budget"):
        decompose(P("X+1"), 1, 30, g_budget=10)


@pytest.mark.parametrize("q", [2, 3])
def test_eq2_identity_small(q):
    F = make_field(q)
    for k in range(3):
        for Fpoly in enumerate_Mk(F, k):
            for t in range(1, 13):
                r = decompose(Fpoly, k, t)
                assert r.identity_holds and r.majorants_hold


def test_R_star_sublinear_evidence():
    ratios = [decompose(P("X+1"), 1, t).R_star / t for t in (8, 16, 32)]
    assert ratios[0] > ratios[1] > ratios[2]


def _squarefree_brute(F, f):
    d = len(f) - 1
    for e in range(1, d // 2 + 1):
        for g in monic_polys(F, e):
            if not prem(F, f, pmul(F, g, g)):
                return False
    return True


def _order_at_most(F, f, t):
    r = (1,)
    for j in range(1, t + 1):
        r = prem(F, pmul(F, r, (0, 1)), f)
        if r == (1,) or (len(f) == 1):
            return j
    return None


@pytest.mark.parametrize("q, tmax", [(2, 8), (3, 5)])
def test_candidate_G_complete(q, tmax):
    F = make_field(q)
    for t in range(1, tmax + 1):
        got = {G.poly.coeffs for G in candidate_G(F, t) if ord_poly(G) <= t}
        want = set()
        for d in range(0, t + 1):
            for f in monic_polys(F, d):
                if d and f[0] == 0:
                    continue
                if _squarefree_brute(F, f) and _order_at_most(F, f, t) is not None:
                    want.add(tuple(f))
        assert got == want


def test_aggregation_identity_small():
    for k in range(3):
        s = density_series(F2, k, 10)
        for t in range(1, 11):
            assert average_via_S(F2, k, t) == s.average(t)
    s = density_series(F3, 1, 6)
    for t in range(1, 7):
        assert average_via_S(F3, 1, t) == s.average(t)


# -- the corollary ----------------------------------------------------------


def test_corollary_exponent():
    assert corollary_exponent(2, 0) == 0
    assert [corollary_exponent(2, k) for k in (1, 2, 3, 4, 7, 8)] == [1, 2, 2, 3, 3, 4]
    assert corollary_exponent(3, 1) == 1 and corollary_exponent(3, 3) == 2


def test_corollary_examples():
    rows = corollary_check(F2, 1, 8)
    assert [(r.u, r.n) for r in rows] == [(1, 2), (2, 4), (3, 6), (4, 8)]
    assert all(r.ok for r in rows)
    rows = corollary_check(F2, 2, 8)
    assert [(r.u, r.n) for r in rows] == [(1, 4), (2, 8)]
    assert all(r.ok for r in rows)
    rows = corollary_check(F3, 1, 9)
    assert [(r.u, r.n) for r in rows] == [(1, 3), (2, 6), (3, 9)]
    assert all(r.ok for r in rows)
    with pytest.raises(ValueError):
        corollary_check(F2, 0, 8)


def test_corollary_row_values():
    r = corollary_check(F2, 1, 2)[0]
    # lambda_{2,1}(2) = 1/4 and lambda_{2,0}(1)/2 = 1/4
    assert (r.lhs, r.rhs) == (Fraction(1, 4), Fraction(1, 4))


def test_bound_examples():
    b = bound_check_q0(F4, 100)
    assert b.bound == Fraction(1, 4) and b.ok
    assert approx(b.A) == 0.613654919954
    assert bound_check_q0(F9, 10).bound == Fraction(5, 9)
    with pytest.raises(ValueError, match="q >= 4"):
        bound_check_q0(F2, 50)


def test_bound_nonsquare_interval():
    b = bound_check_q0(make_field(5), 30)
    assert b.bound is None
    assert b.bound_lo < b.bound_hi
    # 1 - 1/sqrt(5) - 1/5 = 0.3527864045000420...
    assert b.bound_lo < Fraction(35278640450004, 10**14) < b.bound_hi
    assert b.ok == (b.A > b.bound_hi)


# |A(2^(j+1)) - A(2^j)| for q = 2, j = 4..8, recorded from the first run
LADDER_DIFFS_Q2 = {
    0: [0.00239309416793, 0.0039503334977, 0.000706208013697, 0.000779410027673, 0.000233002018311],
    1: [0.000692519082804, 0.00335205995572, 0.000281375360729, 0.000602858024249, 3.81495113929e-05],
}


@pytest.mark.parametrize("k", [0, 1])
def test_ladder_difference_regression(k):
    avg = {t: a for t, a, _ in ladder(density_series(F2, k, 512))}
    got = [approx(abs(avg[2 ** (j + 1)] - avg[2**j])) for j in range(4, 9)]
    assert got == LADDER_DIFFS_Q2[k]
