# Dense polynomial kernels over F_q.
#
# Polynomials are lists of field encodings, lowest degree first, with no
# trailing zeros; [] is the zero polynomial. Every function takes the field
# first and never mutates its inputs. Prime fields (m == 1) take an integer
# fast path that reduces mod p once per output coefficient.

from __future__ import annotations

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from .gf import FieldSpec


def trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def add(F: FieldSpec, a: list[int], b: list[int]) -> list[int]:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    if F.m == 1:
        p = F.p
        for i, y in enumerate(b):
            out[i] = (out[i] + y) % p
    else:
        at = F.add_t
        for i, y in enumerate(b):
            if y:
                out[i] = at[out[i]][y]
    return trim(out)


def neg(F: FieldSpec, a: list[int]) -> list[int]:
    nt = F.neg_t
    return [nt[x] for x in a]


def sub(F: FieldSpec, a: list[int], b: list[int]) -> list[int]:
    return add(F, a, neg(F, b))


def scale(F: FieldSpec, a: list[int], c: int) -> list[int]:
    if c == 0:
        return []
    row = F.mul_t[c]
    return [row[x] for x in a]


def monic(F: FieldSpec, a: list[int]) -> list[int]:
    if not a:
        return []
    return scale(F, a, F.inv_t[a[-1]])


def mul(F: FieldSpec, a: list[int], b: list[int]) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    if F.m == 1:
        p = F.p
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return trim([c % p for c in out])
    at, mt = F.add_t, F.mul_t
    for i, x in enumerate(a):
        if x:
            row = mt[x]
            for j, y in enumerate(b):
                if y:
                    out[i + j] = at[out[i + j]][row[y]]
    return trim(out)


def divmod_(F: FieldSpec, a: list[int], b: list[int]) -> tuple[list[int], list[int]]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    db = len(b) - 1
    r = list(a)
    if len(r) <= db:
        return [], trim(r)
    quo = [0] * (len(r) - db)
    inv_lead = F.inv_t[b[-1]]
    if F.m == 1:
        p = F.p
        for i in range(len(r) - 1, db - 1, -1):
            c = r[i] % p
            if c:
                c = c * inv_lead % p
                quo[i - db] = c
                off = i - db
                for j in range(db + 1):
                    if b[j]:
                        r[off + j] -= c * b[j]
        return trim(quo), trim([x % p for x in r[:db]])
    at, mt = F.add_t, F.mul_t
    nb = [F.neg_t[x] for x in b]
    for i in range(len(r) - 1, db - 1, -1):
        c = r[i]
        if c:
            c = mt[c][inv_lead]
            quo[i - db] = c
            row = mt[c]
            off = i - db
            for j in range(db + 1):
                if nb[j]:
                    r[off + j] = at[r[off + j]][row[nb[j]]]
    return trim(quo), trim(r[:db])


def mod(F: FieldSpec, a: list[int], b: list[int]) -> list[int]:
    return divmod_(F, a, b)[1]


def gcd(F: FieldSpec, a: list[int], b: list[int]) -> list[int]:
    a, b = trim(list(a)), trim(list(b))
    while b:
        a, b = b, mod(F, a, b)
    return monic(F, a)


def deriv(F: FieldSpec, a: list[int]) -> list[int]:
    p, mt = F.p, F.mul_t
    # the integer i lives in the prime subfield, whose encoding is i mod p
    return trim([mt[a[i]][i % p] for i in range(1, len(a))])


def powmod(F: FieldSpec, a: list[int], e: int, m: list[int]) -> list[int]:
    if e < 0:
        raise ValueError("negative exponent")
    result = mod(F, [1], m)
    base = mod(F, a, m)
    while e:
        if e & 1:
            result = mod(F, mul(F, result, base), m)
        e >>= 1
        if e:
            base = mod(F, mul(F, base, base), m)
    return result


def from_index(q: int, index: int, length: int) -> list[int]:
    """Base-q digits of ``index``, least significant first, padded to ``length``."""
    out = []
    for _ in range(length):
        index, c = divmod(index, q)
        out.append(c)
    return out


def to_index(q: int, coeffs) -> int:
    out = 0
    for c in reversed(coeffs):
        out = out * q + c
    return out
