# # The brute-force oracle
#
# The counting formula can be checked by listing every element, writing
# out its Frobenius orbit as F_q-coordinate rows and taking the rank.

from knormal import full_spectrum, make_extension, make_field
from knormal.spectrum import oracle_k_value, oracle_spectrum

F2 = make_field(2)
F8 = make_extension(F2, 3)
print("F_8 is built with modulus coefficients", F8.modulus)

# The class x of X is not normal: x^4 = x^2 + x, so x + x^2 + x^4 = 0.
# x + 1 has trace 1 and is normal.

x = F8.gen()
print("k(x)     =", oracle_k_value(x, F8))
print("k(x + 1) =", oracle_k_value(F8.add(x, F8.one), F8))
print("k(1)     =", oracle_k_value(F8.one, F8))
print("k(0)     =", oracle_k_value(F8.zero, F8))

# Histogram over all elements against the formula, for a few fields.

for q, n in [(2, 8), (3, 5), (4, 4), (5, 3), (8, 3), (9, 2)]:
    F = make_field(q)
    brute = oracle_spectrum(F, n)
    formula = full_spectrum(F, n)
    print(f"q={q} n={n}: {list(brute.counts)}  match={brute == formula}")

# The oracle refuses sizes over its budget instead of running for hours.

try:
    oracle_spectrum(F2, 30)
except ValueError as exc:
    print("refused:", exc)
