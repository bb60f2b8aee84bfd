# # Densities and their running average
#
# lambda_{q,k}(n) is the share of F_{q^n} that is k-normal. It jumps
# around with the factorization of X^n - 1, but its running average A(t)
# settles down.

from knormal import density_series, make_field
from knormal.meanvalue import approx, ladder

F2 = make_field(2)
s = density_series(F2, 0, 12)
for r in s.rows:
    print(f"n={r.n:3d}  count={r.count:6d}  density={str(r.density):>12s}  A(n)~{approx(r.running_average)}")

# The values are exact fractions: A(3) = (1/2 + 1/2 + 3/8) / 3.

print("A(3) =", s.average(3))

# Doubling t and looking at the change gives a feel for how fast A(t)
# moves. These are finite-t numbers, not a limit.

for k in (0, 1, 2):
    print(f"k = {k}")
    for t, a, d in ladder(density_series(F2, k, 512)):
        if t >= 8:
            print(f"   A({t:3d}) ~ {approx(a):<16}  change ~ {approx(d)}")
