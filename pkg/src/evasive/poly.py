"""Polynomials over F_p.

Multivariate polynomials are sparse dicts ``{exponent tuple: coefficient}``
with exponents kept formal (t**p is not folded back to t). Univariate ones
are dense coefficient lists, lowest degree first, used by the root finder.
"""

from __future__ import annotations

import random
from typing import Mapping, Sequence

Poly = dict[tuple[int, ...], int]


def constant(c: int, nvars: int, p: int) -> Poly:
    c %= p
    return {(0,) * nvars: c} if c else {}


def linear(const: int, coeffs: Sequence[int], p: int) -> Poly:
    nvars = len(coeffs)
    out = constant(const, nvars, p)
    for i, c in enumerate(coeffs):
        if c % p:
            e = [0] * nvars
            e[i] = 1
            out[tuple(e)] = c % p
    return out


def monomial(exps: Sequence[int], c: int, p: int) -> Poly:
    return {tuple(exps): c % p} if c % p else {}


def add(a: Mapping, b: Mapping, p: int) -> Poly:
    out = dict(a)
    for e, c in b.items():
        v = (out.get(e, 0) + c) % p
        if v:
            out[e] = v
        else:
            out.pop(e, None)
    return out


def scale(a: Mapping, c: int, p: int) -> Poly:
    c %= p
    if not c:
        return {}
    return {e: v * c % p for e, v in a.items()}


def mul(a: Mapping, b: Mapping, p: int) -> Poly:
    out: Poly = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            out[e] = (out.get(e, 0) + ca * cb) % p
    return {e: c for e, c in out.items() if c}


def power(a: Mapping, e: int, nvars: int, p: int) -> Poly:
    result = constant(1, nvars, p)
    base = dict(a)
    while e:
        if e & 1:
            result = mul(result, base, p)
        e >>= 1
        if e:
            base = mul(base, base, p)
    return result


def substitute_powers(a: Mapping, powers: Sequence[int]) -> Poly:
    """Replace t_i by t_i ** powers[i]."""
    return {tuple(x * q for x, q in zip(e, powers)): c for e, c in a.items()}


def degree(a: Mapping) -> int:
    """Total degree; -1 for the zero polynomial."""
    return max((sum(e) for e in a), default=-1)


def evaluate(a: Mapping, t: Sequence[int], p: int) -> int:
    s = 0
    for e, c in a.items():
        term = c
        for ti, ei in zip(t, e):
            if ei:
                term = term * pow(ti, ei, p) % p
        s += term
    return s % p


# -- univariate -------------------------------------------------------------

def u_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def u_from_sparse(a: Mapping, p: int) -> list[int]:
    deg = max((e[0] for e in a), default=-1)
    out = [0] * (deg + 1)
    for (e,), c in a.items():
        out[e] = (out[e] + c) % p
    return u_trim(out)


def u_sub(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    n = max(len(a), len(b))
    out = [((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p for i in range(n)]
    return u_trim(out)


def u_mul(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return u_trim([c % p for c in out])


def u_divmod(a: Sequence[int], b: Sequence[int], p: int) -> tuple[list[int], list[int]]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a)
    u_trim(r)
    inv = pow(b[-1], -1, p)
    q = [0] * max(len(r) - len(b) + 1, 0)
    while len(r) >= len(b):
        c = r[-1] * inv % p
        shift = len(r) - len(b)
        q[shift] = c
        for i, y in enumerate(b):
            r[shift + i] = (r[shift + i] - c * y) % p
        u_trim(r)
    return u_trim(q), r


def u_mod(a, b, p):
    return u_divmod(a, b, p)[1]


def u_monic(a: Sequence[int], p: int) -> list[int]:
    if not a:
        return []
    inv = pow(a[-1], -1, p)
    return [c * inv % p for c in a]


def u_gcd(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    a, b = u_trim(list(a)), u_trim(list(b))
    while b:
        a, b = b, u_mod(a, b, p)
    return u_monic(a, p)


def u_powmod(base: Sequence[int], e: int, mod: Sequence[int], p: int) -> list[int]:
    result = [1]
    base = u_mod(base, mod, p)
    while e:
        if e & 1:
            result = u_mod(u_mul(result, base, p), mod, p)
        e >>= 1
        if e:
            base = u_mod(u_mul(base, base, p), mod, p)
    return u_mod(result, mod, p)


def u_eval(a: Sequence[int], x: int, p: int) -> int:
    acc = 0
    for c in reversed(a):
        acc = (acc * x + c) % p
    return acc


def u_roots(a: Sequence[int], p: int, seed: int = 0) -> list[int]:
    """Distinct roots in F_p of a nonzero polynomial, sorted.

    Isolates the split part gcd(a, t^p - t) and then splits it with
    Cantor-Zassenhaus, so the cost is polynomial in deg(a) and log p.
    """
    a = u_trim(list(a))
    if not a:
        raise ValueError("the zero polynomial has every element as a root")
    if len(a) == 1:
        return []
    if p == 2:
        return [x for x in (0, 1) if u_eval(a, x, p) == 0]
    tp = u_powmod([0, 1], p, a, p)
    g = u_gcd(a, u_sub(tp, [0, 1], p), p)
    rng = random.Random(seed)
    roots: list[int] = []
    stack = [g]
    while stack:
        f = stack.pop()
        deg = len(f) - 1
        if deg <= 0:
            continue
        if deg == 1:
            roots.append(-f[0] * pow(f[1], -1, p) % p)
            continue
        while True:
            shift = rng.randrange(p)
            h = u_powmod([shift, 1], (p - 1) // 2, f, p)
            d = u_gcd(f, u_sub(h, [1], p), p)
            if 0 < len(d) - 1 < deg:
                stack.append(d)
                stack.append(u_divmod(f, d, p)[0])
                break
    return sorted(roots)
