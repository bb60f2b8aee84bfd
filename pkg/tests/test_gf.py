import pytest
from hypothesis import given, settings, strategies as st

from knormal import _polyarith as pa
from knormal.fqpoly import Poly
from knormal.gf import (
    ExtField,
    FieldBudgetError,
    count_irreducibles,
    frobenius,
    irreducible_of_degree,
    is_irreducible,
    make_base_field,
    make_extension,
    make_field,
)

from _oracles import has_factor_brute, monic_polys, prem

F2 = make_base_field(2)
F3 = make_base_field(3)
F4 = make_base_field(2, 2)
F9 = make_base_field(3, 2)


def test_base_field_examples():
    assert (F2.q, F2.modulus) == (2, (0, 1))
    assert F4.q == 4 and F4.modulus == (1, 1, 1)


def test_f9_modulus_is_first_rootless_quadratic():
    # a monic quadratic over F_3 is irreducible iff it has no root
    first = next(f for f in monic_polys(F3, 2) if all(prem(F3, f, (r, 1)) for r in range(3)))
    assert F9.modulus == first == (1, 0, 1)


def test_base_field_is_canonical():
    assert make_base_field(3, 2) is make_base_field(3, 2)
    assert make_field(9) == F9


@pytest.mark.parametrize("p, m", [(4, 1), (1, 1), (15, 2)])
def test_base_field_rejects_non_prime(p, m):
    with pytest.raises(ValueError):
        make_base_field(p, m)


def test_base_field_budget():
    with pytest.raises(FieldBudgetError):
        make_base_field(2, 10)
    with pytest.raises(ValueError, match="not a prime power"):
        make_field(6)


def test_f4_x_squared():
    x = 2  # digits (0, 1): the class of X
    assert F4.mul(x, x) == 3  # X + 1


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9, 16, 25, 27])
def test_field_axioms(q):
    F = make_field(q)
    for a in range(q):
        assert F.add(a, 0) == a and F.mul(a, 1) == a
        assert F.add(a, F.neg(a)) == 0
        if a:
            assert F.mul(a, F.inv(a)) == 1
        for b in range(q):
            assert F.add(a, b) == F.add(b, a)
            assert F.mul(a, b) == F.mul(b, a)
            assert F.sub(F.add(a, b), b) == a
    with pytest.raises(ZeroDivisionError):
        F.inv(0)


def test_f9_multiplicative_group():
    nonzero = range(1, 9)
    for a in nonzero:
        row = sorted(F9.mul(a, b) for b in nonzero)
        assert row == list(nonzero)  # closed, cancellative
        for b in nonzero:
            for c in nonzero:
                assert F9.mul(F9.mul(a, b), c) == F9.mul(a, F9.mul(b, c))
    # cyclic of order 8
    assert any(len({F9.pow(g, e) for e in range(8)}) == 8 for g in nonzero)


@given(st.sampled_from([4, 8, 9, 25]), st.data())
def test_distributivity(q, data):
    F = make_field(q)
    a, b, c = (data.draw(st.integers(0, q - 1)) for _ in range(3))
    assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))


def test_pow_large_exponent():
    assert F9.pow(5, 8 * 10**30 + 3) == F9.pow(5, 3)
    assert F9.pow(5, -1) == F9.inv(5)


def test_is_irreducible_examples():
    assert is_irreducible((1, 1, 1), F2)
    assert not is_irreducible((1, 0, 1), F2)
    with pytest.raises(ValueError):
        is_irreducible((1,), F2)


def test_irreducible_sextics_over_f2():
    sextics = list(monic_polys(F2, 6))
    assert len(sextics) == 64
    brute = [f for f in sextics if not has_factor_brute(F2, f)]
    fast = [f for f in sextics if is_irreducible(f, F2)]
    assert fast == brute
    assert len(fast) == 9 == count_irreducibles(F2, 6)


@pytest.mark.parametrize("q, d", [(3, 4), (4, 3), (5, 3)])
def test_is_irreducible_matches_brute_force(q, d):
    F = make_field(q)
    for f in monic_polys(F, d):
        assert is_irreducible(f, F) == (not has_factor_brute(F, f))


def test_irreducible_of_degree_examples():
    assert irreducible_of_degree(F2, 2).coeffs == (1, 1, 1)
    assert irreducible_of_degree(F2, 1).coeffs == (0, 1)
    assert irreducible_of_degree(F2, 4).coeffs == (1, 1, 0, 0, 1)
    # independent scan: first candidate in canonical order with no factor
    first = next(f for f in monic_polys(F2, 4) if not has_factor_brute(F2, f))
    assert irreducible_of_degree(F2, 4).coeffs == first


def test_count_irreducibles_examples():
    assert count_irreducibles(F2, 1) == 2
    assert count_irreducibles(F2, 2) == 1
    assert count_irreducibles(F2, 4) == 3


@pytest.mark.parametrize("q, d", [(2, 5), (3, 3), (4, 2), (5, 2)])
def test_count_irreducibles_matches_scan(q, d):
    F = make_field(q)
    assert count_irreducibles(F, d) == sum(1 for f in monic_polys(F, d) if is_irreducible(f, F))


def test_count_irreducibles_upper_bound():
    for q in (2, 3, 4, 5):
        F = make_field(q)
        for N in range(1, 13):
            assert count_irreducibles(F, N) * N <= q**N


def test_make_extension_examples():
    assert make_extension(F2, 3).modulus == (1, 1, 0, 1)
    assert make_extension(F2, 1).modulus == (0, 1)
    F16 = make_extension(F4, 2)
    first = next(f for f in monic_polys(F4, 2) if not has_factor_brute(F4, f))
    assert F16.modulus == first == (2, 1, 1)
    assert F16.size == 16


def test_extension_is_canonical():
    a = ExtField(make_base_field(3, 1), 5)
    b = ExtField(make_base_field(3, 1), 5)
    assert a == b and a.modulus == b.modulus


def test_frobenius_fixed_points():
    E = make_extension(F2, 3)
    assert frobenius(E.zero, E) == E.zero
    assert frobenius(E.one, E) == E.one


def test_frobenius_orbit_in_f8():
    E = make_extension(F2, 3)
    x = E.gen()
    orbit = [x, frobenius(x, E), frobenius(frobenius(x, E), E)]
    assert orbit == [(0, 1, 0), (0, 0, 1), (0, 1, 1)]
    assert len(set(orbit)) == 3


@pytest.mark.parametrize("q, n", [(2, 5), (3, 3), (4, 3), (9, 2)])
def test_frobenius_n_fold_identity(q, n):
    E = make_extension(make_field(q), n)
    for a in E.elements():
        b = a
        for _ in range(n):
            b = frobenius(b, E)
        assert b == a


@settings(max_examples=60)
@given(st.sampled_from([(2, 6), (3, 4), (4, 3), (5, 3), (9, 2)]), st.data())
def test_frobenius_is_linear(qn, data):
    q, n = qn
    E = make_extension(make_field(q), n)
    a, b = (E.element(data.draw(st.integers(0, E.size - 1))) for _ in range(2))
    c = data.draw(st.integers(0, q - 1))
    fa, fb = frobenius(a, E), frobenius(b, E)
    assert frobenius(E.add(a, b), E) == E.add(fa, fb)
    assert frobenius(E.scale(c, a), E) == E.scale(c, fa)
    # the matrix form agrees with exponentiation
    rows = E.frobenius_matrix()
    img = E.zero
    for ai, r in zip(a, rows):
        img = E.add(img, E.scale(ai, r))
    assert img == fa


def test_frobenius_is_bijective():
    E = make_extension(F3, 4)
    assert len({frobenius(a, E) for a in E.elements()}) == E.size


def test_enumeration_is_complete():
    for q, n in [(2, 16), (4, 8), (3, 9)]:
        E = make_extension(make_field(q), n)
        seen = {E.index(a) for a in E.elements()}
        assert len(seen) == q**n == E.size


def test_extension_mul_matches_poly_mod():
    E = make_extension(F9, 3)
    a, b = E.element(123), E.element(456)
    expect = pa.mod(F9, pa.mul(F9, pa.trim(list(a)), pa.trim(list(b))), list(E.modulus))
    assert E.mul(a, b) == tuple(expect) + (0,) * (3 - len(expect))
    assert E.pow(a, E.size - 1) == E.one


def test_irreducible_of_degree_returns_poly():
    f = irreducible_of_degree(F3, 3)
    assert isinstance(f, Poly) and f.degree == 3 and is_irreducible(f, F3)
