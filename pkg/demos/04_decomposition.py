# # Splitting S_F(t) into a main term and a remainder
#
# For a monic F of degree k with F(0) != 0, S_F(t) collects the
# contributions of F to the first t densities. Writing Phi_q as a sum of
# mu_q over divisors G turns it into t*M_F(t) + R_F(t), where each G
# contributes through a_G = ord(F G).

from knormal import decompose, make_field, parse_poly
from knormal.meanvalue import S_F_direct, approx, average_via_S, density_series, enumerate_Mk

F2 = make_field(2)
F = parse_poly("X+1", F2)

r = decompose(F, 1, 2)
print(f"t=2: S={r.S}  M={r.M}  R={r.R}  identity holds: {r.identity_holds}")
for term in r.terms:
    print(f"   G={term.G}  a_G={term.a_G}  mu={term.mu}  weight={term.weight}")

# The identity is exact for every t, and the majorants bound M and R.

for t in (5, 10, 20, 40):
    r = decompose(F, 1, t)
    print(f"t={t:2d}: S~{approx(r.S)}  t*M+R == S: {r.identity_holds}  "
          f"|M|<=M*: {abs(r.M) <= r.M_star}  |R|<=R*: {abs(r.R) <= r.R_star}  R*/t~{approx(r.R_star / t)}")

# Averaging S_F over all F of degree k gives back the running average of
# the k-normal densities.

t = 12
for k in (0, 1, 2):
    lhs = density_series(F2, k, t).average(t)
    rhs = average_via_S(F2, k, t)
    print(f"k={k}: A({t}) = {lhs}  via S_F: {rhs}  equal: {lhs == rhs}")

# A polynomial of order larger than t contributes nothing.

G = enumerate_Mk(F2, 2)[-1]
print(G, "S(2) =", S_F_direct(G, 2, 2))
