"""Field and degree selection, and the full parameter record of a construction."""

from __future__ import annotations

import json
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from math import ceil, gcd, log2
from typing import Optional, Sequence

from .errors import GuardExceeded, ParameterError, SearchExhausted
from .field import PrimeField, is_prime
from .linalg import Matrix, as_matrix, is_strongly_regular, vandermonde

PARAMS_VERSION = 1


def odd_primes(count: int) -> list[int]:
    out, q = [], 3
    while len(out) < count:
        if is_prime(q):
            out.append(q)
        q += 2
    return out


def _divisors(n: int) -> list[int]:
    small = [d for d in range(1, int(n**0.5) + 1) if n % d == 0]
    return sorted(set(small + [n // d for d in small]))


@dataclass(frozen=True)
class FieldPlan:
    p: int
    special_degrees: tuple[int, ...]
    K: int


def gen_field_plan(k: int, n: int) -> FieldPlan:
    """Find a prime p in (n, 2nK] with p = 2 mod K, plus k odd divisors of K.

    K is the product of the first ceil(log2(k+1)) odd primes. Since p - 1 = 1
    mod K, every divisor of K is coprime to p - 1.
    """
    if k < 1:
        raise ParameterError("k must be at least 1")
    if n < 1:
        raise ParameterError("n must be at least 1")
    K = 1
    for q in odd_primes(ceil(log2(k + 1))):
        K *= q
    degrees = [d for d in _divisors(K) if d > 1][:k]
    if len(degrees) < k:
        raise ParameterError(f"K={K} has fewer than {k} odd divisors above 1")
    first = n + 1 + (2 - (n + 1)) % K
    for cand in range(first, 2 * n * K + 1, K):
        if is_prime(cand):
            return FieldPlan(cand, tuple(sorted(degrees, reverse=True)), K)
    raise SearchExhausted(f"no prime = 2 mod {K} in ({n}, {2 * n * K}]")


@dataclass(frozen=True)
class EvasiveParams:
    """Complete description of one construction instance.

    Indices in ``pivot_set`` are 0-based block positions. ``matrix`` defaults
    to the Vandermonde matrix of ``gammas``; an explicit matrix may be given
    for hand-built instances and is then checked for strong regularity.
    """

    p: int
    k: int
    m: int
    n: int
    degrees: tuple[int, ...]
    gammas: tuple[int, ...] = ()
    pivot_set: Optional[tuple[int, ...]] = None
    matrix: Optional[Matrix] = None
    inv_exponents: tuple[int, ...] = dc_field(default=(), compare=False)

    def __post_init__(self):
        f = PrimeField(self.p)
        k, m, n = self.k, self.m, self.n
        if not 1 <= k <= m:
            raise ParameterError(f"need 1 <= k <= m, got k={k}, m={m}")
        if n < 1 or n % m:
            raise ParameterError(f"block length m={m} must divide n={n}")
        degrees = tuple(int(d) for d in self.degrees)
        if len(degrees) != m:
            raise ParameterError(f"expected {m} degrees, got {len(degrees)}")
        if any(a <= b for a, b in zip(degrees, degrees[1:])) or degrees[-1] < 1:
            raise ParameterError("degrees must be strictly decreasing and >= 1")
        object.__setattr__(self, "degrees", degrees)

        gammas = tuple(int(g) % self.p for g in self.gammas)
        if self.matrix is None:
            if not gammas:
                gammas = tuple(range(1, m + 1))
            if len(gammas) != m:
                raise ParameterError(f"expected {m} generators, got {len(gammas)}")
            if self.p <= m:
                raise ParameterError(f"p={self.p} too small for {m} distinct nonzero generators")
            mat = vandermonde(f, k, gammas)
        else:
            mat = as_matrix(f, self.matrix)
            if len(mat) != k or any(len(r) != m for r in mat):
                raise ParameterError(f"matrix must be {k} x {m}")
            try:
                ok = is_strongly_regular(f, mat)
            except GuardExceeded:
                ok = True
            if not ok:
                raise ParameterError("matrix is not strongly regular")
        object.__setattr__(self, "gammas", gammas)
        object.__setattr__(self, "matrix", mat)

        coprime = [j for j, d in enumerate(degrees) if gcd(d, self.p - 1) == 1]
        if self.pivot_set is None:
            if len(coprime) < k:
                raise ParameterError(
                    f"only {len(coprime)} degrees coprime to p-1={self.p - 1}, need {k}")
            pivots = tuple(coprime[:k])
        else:
            pivots = tuple(sorted(int(j) for j in self.pivot_set))
            if len(set(pivots)) != k or not all(0 <= j < m for j in pivots):
                raise ParameterError(f"pivot_set must be {k} distinct positions in [0, {m})")
            bad = [j for j in pivots if j not in coprime]
            if bad:
                raise ParameterError(f"degrees at positions {bad} are not coprime to p-1")
        object.__setattr__(self, "pivot_set", pivots)
        object.__setattr__(self, "inv_exponents", tuple(f.inverse_exponent(degrees[j]) for j in pivots))

    @property
    def field(self) -> PrimeField:
        return PrimeField(self.p)

    @property
    def blocks(self) -> int:
        return self.n // self.m

    @property
    def eps(self) -> Fraction:
        return Fraction(self.k, self.m)

    @property
    def message_length(self) -> int:
        return (self.m - self.k) * self.blocks

    def bound(self, r: Optional[int] = None) -> int:
        """Intersection bound d_1 ** r for subspaces of dimension r (default k)."""
        return self.degrees[0] ** (self.k if r is None else r)

    def to_dict(self) -> dict:
        d = {
            "version": PARAMS_VERSION,
            "p": self.p,
            "k": self.k,
            "m": self.m,
            "n": self.n,
            "degrees": list(self.degrees),
            "gammas": list(self.gammas),
            "pivot_set": list(self.pivot_set),
            "inv_exponents": list(self.inv_exponents),
        }
        if not self.gammas:
            d["matrix"] = [list(r) for r in self.matrix]
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "EvasiveParams":
        if d.get("version", PARAMS_VERSION) != PARAMS_VERSION:
            raise ParameterError(f"unsupported params version {d.get('version')}")
        try:
            out = cls(p=d["p"], k=d["k"], m=d["m"], n=d["n"], degrees=tuple(d["degrees"]),
                      gammas=tuple(d.get("gammas") or ()),
                      pivot_set=tuple(d["pivot_set"]) if d.get("pivot_set") is not None else None,
                      matrix=d.get("matrix"))
        except KeyError as e:
            raise ParameterError(f"params file is missing field {e}") from None
        if "inv_exponents" in d and list(d["inv_exponents"]) != list(out.inv_exponents):
            raise ParameterError("inv_exponents do not match degrees and p")
        return out

    def dumps(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    @classmethod
    def loads(cls, s: str) -> "EvasiveParams":
        return cls.from_dict(json.loads(s))


def gen_params(k: int, m: int, n: int) -> EvasiveParams:
    if m < k:
        raise ParameterError(f"block length m={m} is smaller than k={k}")
    if n % m:
        raise ParameterError(f"m={m} does not divide n={n}")
    plan = gen_field_plan(k, max(n, m + 1))
    special = set(plan.special_degrees)
    filler: list[int] = []
    d = 2
    while len(filler) < m - k:
        if d not in special:
            filler.append(d)
        d += 1
    degrees = sorted(special | set(filler), reverse=True)
    pivots = tuple(i for i, d in enumerate(degrees) if d in special)
    return EvasiveParams(p=plan.p, k=k, m=m, n=n, degrees=tuple(degrees),
                         gammas=tuple(range(1, m + 1)), pivot_set=pivots)


def explicit_params(p: int, k: int, m: int, n: int, degrees: Sequence[int],
                    matrix: Optional[Sequence[Sequence[int]]] = None,
                    gammas: Sequence[int] = (), pivot_set: Optional[Sequence[int]] = None) -> EvasiveParams:
    """Hand-built instance, e.g. with a non-Vandermonde matrix."""
    return EvasiveParams(p=p, k=k, m=m, n=n, degrees=tuple(degrees),
                         gammas=() if matrix is not None else tuple(gammas),
                         pivot_set=None if pivot_set is None else tuple(pivot_set),
                         matrix=None if matrix is None else tuple(tuple(r) for r in matrix))
