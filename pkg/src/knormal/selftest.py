"""Fast invariant checks behind ``knormal selftest``.

Each check returns ``(name, ok, detail)``; the whole run takes a few seconds.
The pytest suite covers the same ground at full size.
"""

from __future__ import annotations

from fractions import Fraction

from .fqpoly import all_divisors, factor_xn_minus_1, phi_ratio_mobius, phi_ratio_product
from .gf import make_field
from .intfun import divisors, euler_phi, sigma0
from .meanvalue import average_via_S, corollary_check, decompose, density_series, enumerate_Mk
from .spectrum import full_spectrum, oracle_spectrum


def _oracle() -> tuple[bool, str]:
    pairs = [(q, n) for q in (2, 3, 4, 5) for n in range(1, 7) if q**n <= 1 << 10]
    bad = [(q, n) for q, n in pairs if full_spectrum(make_field(q), n) != oracle_spectrum(make_field(q), n)]
    return not bad, f"{len(pairs)} fields" if not bad else f"mismatch at {bad}"


def _partition() -> tuple[bool, str]:
    bad = [(q, n) for q in (2, 3, 4) for n in range(1, 25) if sum(full_spectrum(make_field(q), n).counts) != q**n]
    return not bad, "q in {2,3,4}, n <= 24" if not bad else f"fails at {bad}"


def _phi_dual() -> tuple[bool, str]:
    checked = 0
    for q in (2, 3):
        for n in range(1, 9):
            for D in all_divisors(factor_xn_minus_1(make_field(q), n)):
                checked += 1
                if phi_ratio_product(D) != phi_ratio_mobius(D):
                    return False, f"q={q}, divisor {D}"
    return True, f"{checked} divisors"


def _eq2() -> tuple[bool, str]:
    count = 0
    for q in (2, 3):
        F = make_field(q)
        for k in (0, 1):
            for P in enumerate_Mk(F, k):
                for t in range(1, 9):
                    rep = decompose(P, k, t)
                    count += 1
                    if not (rep.identity_holds and rep.majorants_hold):
                        return False, f"q={q}, F={P}, t={t}"
    return True, f"{count} reports"


def _aggregation() -> tuple[bool, str]:
    F = make_field(2)
    for k in (0, 1, 2):
        s = density_series(F, k, 10)
        for t in range(1, 11):
            if s.average(t) != average_via_S(F, k, t):
                return False, f"k={k}, t={t}"
    return True, "q=2, k<=2, t<=10"


def _corollary() -> tuple[bool, str]:
    for q, k in [(2, 1), (2, 2), (3, 1)]:
        if not all(r.ok for r in corollary_check(make_field(q), k, 24)):
            return False, f"q={q}, k={k}"
    return True, "T=24"


def _totient() -> tuple[bool, str]:
    bad = [m for m in range(1, 2001) if sum(euler_phi(d) for d in divisors(m)) != m]
    return not bad, "m <= 2000" if not bad else f"fails at {bad[:5]}"


def _sigma0_bound() -> tuple[bool, str]:
    import math

    bad = [m for m in range(3, 5001) if not sigma0(m) < m ** (1.1 / math.log(math.log(m)))]
    return not bad, "3 <= m <= 5000" if not bad else f"fails at {bad[:5]}"


CHECKS = [
    ("oracle equivalence", _oracle),
    ("spectrum partition", _partition),
    ("Phi_q product = Moebius sum", _phi_dual),
    ("S = t*M + R", _eq2),
    ("average via S_F", _aggregation),
    ("corollary inequality", _corollary),
    ("sum of phi over divisors", _totient),
    ("divisor-count bound", _sigma0_bound),
]


def run_selftest() -> list[tuple[str, bool, str]]:
    out = []
    for name, fn in CHECKS:
        try:
            ok, detail = fn()
        except Exception as exc:  # report, don't abort the run
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        out.append((name, ok, detail))
    return out
