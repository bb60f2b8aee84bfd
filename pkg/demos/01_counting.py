# # Counting k-normal elements
#
# An element a of F_{q^n} is k-normal over F_q when its conjugates
# a, a^q, ..., a^(q^(n-1)) span a subspace of dimension n - k. The count
# only depends on how X^n - 1 factors over F_q: sum Phi_q((X^n - 1)/F)
# over the monic divisors F of degree k.

from knormal import count_k_normal, factor_xn_minus_1, full_spectrum, make_field
from knormal.spectrum import count_terms

F2 = make_field(2)

# X^3 - 1 splits over F_2 into a linear and a quadratic factor.

print(factor_xn_minus_1(F2, 3))

# One divisor of degree 1, so one term in the sum for k = 1.

for D, phi in count_terms(F2, 3, 1):
    print(f"F = {D.poly}:  Phi_2((X^3-1)/F) = {phi}")
print("1-normal elements of F_8:", count_k_normal(F2, 3, 1))

# The whole spectrum comes out of a single factorization. It always sums
# to q^n, and the last entry is the zero element alone.

for q, n in [(2, 3), (2, 6), (3, 4), (4, 5), (9, 3)]:
    sp = full_spectrum(make_field(q), n)
    print(f"q={q} n={n}:", list(sp.counts), "sum =", sum(sp.counts), "=", q, "^", n)

# Nothing is enumerated, so large n is cheap.

sp = full_spectrum(F2, 60)
print("normal elements of F_2^60:", sp[0])
print("share:", float(sp[0]) / 2**60)
