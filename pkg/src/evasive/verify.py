"""Oracle checks of a parameter set, with a deterministic plain-text report.

Uniformly random low-dimensional subspaces almost never meet S at desk
scale, so the samplers here also draw subspaces through planted points of S
and subspaces whose directions stay inside a single block.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Sequence

from . import oracle
from .errors import GuardExceeded
from .evasive import EvasiveSet
from .field import PrimeField
from .intersect import count_solutions, intersect_set, triangularize
from .linalg import AffineSubspace, is_strongly_regular, normalize, rank
from .params import EvasiveParams


def random_vectors(rng: random.Random, p: int, n: int, r: int) -> list[list[int]]:
    while True:
        vs = [[rng.randrange(p) for _ in range(n)] for _ in range(r)]
        if rank(PrimeField(p), vs) == r:
            return vs


def uniform_subspace(rng: random.Random, field: PrimeField, n: int, r: int) -> AffineSubspace:
    return AffineSubspace(field, [rng.randrange(field.p) for _ in range(n)],
                          random_vectors(rng, field.p, n, r))


def random_member(rng: random.Random, s: EvasiveSet):
    return s.encode([rng.randrange(s.field.p) for _ in range(s.message_length)])


def planted_subspace(rng: random.Random, s: EvasiveSet, r: int) -> AffineSubspace:
    """Affine span of up to r+1 points of S, padded with random directions to dimension r."""
    p, n = s.field.p, s.n
    base = random_member(rng, s)
    vecs = []
    for _ in range(rng.randrange(r + 1)):
        y = random_member(rng, s)
        vecs.append([(a - b) % p for a, b in zip(y, base)])
    vecs = [list(v) for v in AffineSubspace.span(s.field, base, vecs).basis] if vecs else []
    while len(vecs) < r:
        cand = vecs + [[rng.randrange(p) for _ in range(n)]]
        if rank(s.field, cand) == len(cand):
            vecs = cand
    return AffineSubspace(s.field, base, vecs)


def block_subspace(rng: random.Random, s: EvasiveSet, r: int) -> AffineSubspace:
    """Offset in S; each direction is supported on a single block."""
    p, m = s.field.p, s.params.m
    base = random_member(rng, s)
    while True:
        vecs = []
        for _ in range(r):
            t = rng.randrange(s.blocks)
            v = [0] * s.n
            for j in range(t * m, (t + 1) * m):
                v[j] = rng.randrange(p)
            vecs.append(v)
        if rank(s.field, vecs) == r:
            return AffineSubspace(s.field, base, vecs)


SAMPLERS: dict[str, Callable] = {
    "uniform": lambda rng, s, r: uniform_subspace(rng, s.field, s.n, r),
    "planted": planted_subspace,
    "block": block_subspace,
}


def sample_subspace(rng: random.Random, s: EvasiveSet, r: int) -> AffineSubspace:
    kind = rng.choice(sorted(SAMPLERS))
    return SAMPLERS[kind](rng, s, r)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


def _check_regularity(params: EvasiveParams) -> CheckResult:
    f = params.field
    try:
        ok = is_strongly_regular(f, params.matrix)
        detail = f"{params.k}x{params.m} leading-row minors"
    except GuardExceeded as e:
        return CheckResult("strong-regularity", True, f"skipped: {e}")
    return CheckResult("strong-regularity", ok, detail)


def _check_block_size(s: EvasiveSet) -> CheckResult:
    try:
        pts = s.block.enumerate_block()
    except GuardExceeded as e:
        return CheckResult("block-size", True, f"skipped: {e}")
    want = s.block.size()
    return CheckResult("block-size", len(pts) == want, f"|V_F|={len(pts)} expected={want}")


def _check_bijection(s: EvasiveSet, rng: random.Random, trials: int) -> CheckResult:
    bad = 0
    for _ in range(trials):
        msg = tuple(rng.randrange(s.field.p) for _ in range(s.message_length))
        x = s.encode(msg)
        if not s.member_set(x) or s.decode(x) != msg:
            bad += 1
    return CheckResult("bijection", bad == 0, f"{trials} messages, {bad} failures")


def _check_evasive(s: EvasiveSet, rng: random.Random, trials: int) -> CheckResult:
    params, tables = s.params, oracle.power_tables(s.params)
    worst, bad = 0, 0
    for _ in range(trials):
        r = rng.randint(1, params.k)
        h = sample_subspace(rng, s, r)
        pts = oracle.affine_points(params.p, h.offset, h.basis)
        c = int(oracle.set_member_mask(params, pts, tables).sum())
        worst = max(worst, c)
        bad += c > params.bound(r)
    return CheckResult("evasiveness", bad == 0, f"{trials} subspaces, max |S∩H|={worst}, {bad} violations")


def _check_intersect(s: EvasiveSet, rng: random.Random, trials: int) -> CheckResult:
    params = s.params
    bad = 0
    for _ in range(trials):
        h = sample_subspace(rng, s, rng.randint(0, params.k))
        if intersect_set(s, h) != oracle.brute_intersection(params, h.offset, h.basis):
            bad += 1
    return CheckResult("intersect-vs-enumeration", bad == 0, f"{trials} subspaces, {bad} mismatches")


def _check_triangular(s: EvasiveSet, rng: random.Random, trials: int) -> CheckResult:
    params, v = s.params, s.block
    bad = 0
    for _ in range(trials):
        r = rng.randint(1, params.k)
        h = uniform_subspace(rng, s.field, params.m, r)
        emap = normalize(h)
        ts = triangularize(v, emap)
        if any(d >= ts.D for d in ts.residual_degrees()):
            bad += 1
            continue
        # F_p solutions of h are a subset of the closure solutions, capped at D^r
        if params.p**r <= 10**5 and count_solutions(ts.h, r, params.p) > ts.D**r:
            bad += 1
    return CheckResult("triangular-degree", bad == 0, f"{trials} subspaces, {bad} failures")


def run_verify(params: EvasiveParams, trials: int = 100, seed: int = 0) -> list[CheckResult]:
    s = EvasiveSet(params)
    rng = random.Random(seed)
    return [
        _check_regularity(params),
        _check_block_size(s),
        _check_bijection(s, rng, trials),
        _check_evasive(s, rng, trials),
        _check_intersect(s, rng, trials),
        _check_triangular(s, rng, trials),
    ]


def format_report(params: EvasiveParams, results: Sequence[CheckResult], trials: int, seed: int) -> str:
    head = (f"params p={params.p} k={params.k} m={params.m} n={params.n} "
            f"degrees={','.join(map(str, params.degrees))} trials={trials} seed={seed}")
    width = max(len(r.name) for r in results)
    lines = [head]
    for r in results:
        lines.append(f"{r.name:<{width}}  {'PASS' if r.passed else 'FAIL'}  {r.detail}")
    lines.append("overall: " + ("PASS" if all(r.passed for r in results) else "FAIL"))
    return "\n".join(lines) + "\n"
