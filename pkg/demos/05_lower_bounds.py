# # Lower bounds
#
# With F = (X-1)^k one gets lambda_{q,k}(p^t u) >= lambda_{q,0}(u) / q^k,
# where p is the characteristic and t is the least exponent with p^t > k.

from knormal import make_field
from knormal.meanvalue import approx, bound_check_q0, corollary_check, corollary_exponent

for q, k in [(2, 1), (2, 3), (3, 1), (4, 1)]:
    F = make_field(q)
    rows = corollary_check(F, k, 24)
    print(f"q={q} k={k}: p^t = {F.p ** corollary_exponent(F.p, k)}, all rows ok: {all(r.ok for r in rows)}")
    for r in rows[:3]:
        print(f"   n={r.n:2d}  lhs~{approx(r.lhs):<16}  rhs~{approx(r.rhs)}")

# For q >= 4 the average share of normal elements should stay above
# 1 - 1/sqrt(q) - 1/q. At finite t this is only evidence.

for q, t in [(4, 100), (5, 100), (9, 60), (16, 40)]:
    b = bound_check_q0(make_field(q), t)
    bound = b.bound if b.bound is not None else f"[{approx(b.bound_lo)}, {approx(b.bound_hi)}]"
    print(f"q={q:2d}: A({t}) ~ {approx(b.A)}  bound {bound}  above: {b.ok}")
