"""Vectorized brute-force enumeration used to check the algebraic algorithms.

Nothing here shares code with the encoder or the intersection algorithm
beyond reading the parameter record: membership is decided by summing
table-lookups of x**d over whole point arrays.
"""

from __future__ import annotations

import numpy as np

from .errors import GuardExceeded, ParameterError
from .params import EvasiveParams

ENUM_GUARD = 10**7
_CHUNK = 1 << 18


def _check_p(p: int):
    # products of two residues must fit in int64
    if p >= 1 << 31:
        raise ParameterError("brute-force oracles need p < 2**31")


def power_tables(params: EvasiveParams) -> np.ndarray:
    """tables[j, x] = x ** degrees[j] mod p."""
    p = params.p
    _check_p(p)
    xs = np.arange(p, dtype=np.int64)
    out = np.empty((params.m, p), dtype=np.int64)
    for j, d in enumerate(params.degrees):
        acc = np.ones(p, dtype=np.int64)
        base, e = xs.copy(), d
        while e:
            if e & 1:
                acc = acc * base % p
            e >>= 1
            base = base * base % p
        out[j] = acc
    return out


def block_values(params: EvasiveParams, pts: np.ndarray, tables: np.ndarray | None = None) -> np.ndarray:
    """f_i evaluated on every row of ``pts`` (shape (..., m)); returns (..., k)."""
    if tables is None:
        tables = power_tables(params)
    p = params.p
    a = np.asarray(params.matrix, dtype=np.int64)
    mono = tables[np.arange(params.m), pts]  # x_j ** d_j
    return (mono @ a.T) % p if params.m * p * p < (1 << 62) else _slow_dot(mono, a, p)


def _slow_dot(mono, a, p):
    out = np.zeros(mono.shape[:-1] + (a.shape[0],), dtype=np.int64)
    for j in range(a.shape[1]):
        out = (out + mono[..., j, None] * a[:, j]) % p
    return out


def set_member_mask(params: EvasiveParams, pts: np.ndarray, tables: np.ndarray | None = None) -> np.ndarray:
    """Boolean mask over rows of ``pts`` (shape (N, n)) for membership in S."""
    pts = np.asarray(pts, dtype=np.int64)
    if pts.shape[-1] != params.n:
        raise ParameterError(f"points must have {params.n} coordinates")
    blocks = pts.reshape(pts.shape[:-1] + (params.blocks, params.m))
    vals = block_values(params, blocks, tables)
    return ~vals.any(axis=(-1, -2))


def affine_points(p: int, offset, basis, guard: int = ENUM_GUARD) -> np.ndarray:
    """All p**r points of offset + span(basis) as an int64 array (p**r, n)."""
    _check_p(p)
    basis = np.asarray(basis, dtype=np.int64).reshape(-1, len(offset))
    r = basis.shape[0]
    if p**r > guard:
        raise GuardExceeded(f"{p}**{r} points exceeds the enumeration guard {guard}")
    grids = np.indices((p,) * r, dtype=np.int64).reshape(r, -1).T if r else np.zeros((1, 0), np.int64)
    return (np.asarray(offset, dtype=np.int64) + grids @ basis) % p


def brute_intersection(params: EvasiveParams, offset, basis, guard: int = ENUM_GUARD) -> list[tuple[int, ...]]:
    """S intersected with the affine subspace, by enumerating every point of it."""
    pts = affine_points(params.p, offset, basis, guard)
    hit = pts[set_member_mask(params, pts)]
    return sorted(set(map(tuple, hit.tolist())))


def enumerate_block_points(params: EvasiveParams, guard: int = ENUM_GUARD) -> list[tuple[int, ...]]:
    """Every x in F_p^m with f_1(x) = ... = f_k(x) = 0, lexicographically sorted."""
    p, m = params.p, params.m
    _check_p(p)
    total = p**m
    if total > guard:
        raise GuardExceeded(f"{p}**{m} points exceeds the enumeration guard {guard}")
    tables = power_tables(params)
    found = []
    for start in range(0, total, _CHUNK):
        idx = np.arange(start, min(start + _CHUNK, total), dtype=np.int64)
        digits = np.empty((idx.size, m), dtype=np.int64)
        rest = idx
        for j in range(m - 1, -1, -1):
            digits[:, j] = rest % p
            rest = rest // p
        vals = block_values(params, digits, tables)
        found.append(digits[~vals.any(axis=1)])
    hits = np.concatenate(found) if found else np.zeros((0, m), np.int64)
    return [tuple(r) for r in hits.tolist()]
