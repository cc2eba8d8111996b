"""Matrices and affine subspaces over a prime field.

Matrices are tuples of row tuples of ``int`` residues. They stay small here
(at most k x m with k, m in the single digits) so exact Python integers are
used throughout rather than numpy.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations, product
from math import comb
from typing import Iterable, Iterator, Sequence

from .errors import GuardExceeded, ParameterError, SingularMatrixError
from .field import PrimeField

Matrix = tuple[tuple[int, ...], ...]
Vector = tuple[int, ...]

MINOR_GUARD = 10**6


def as_matrix(field: PrimeField, rows: Iterable[Iterable[int]]) -> Matrix:
    m = tuple(tuple(int(x) % field.p for x in row) for row in rows)
    if m and len({len(r) for r in m}) != 1:
        raise ParameterError("ragged matrix")
    return m


def vandermonde(field: PrimeField, k: int, gammas: Sequence[int]) -> Matrix:
    """k x m matrix with entry (i, j) = gammas[j] ** i for i = 1..k."""
    gs = [g % field.p for g in gammas]
    if k < 1:
        raise ParameterError("k must be positive")
    if any(g == 0 for g in gs):
        raise ParameterError("generators must be nonzero")
    if len(set(gs)) != len(gs):
        raise ParameterError("generators must be distinct")
    return tuple(tuple(field.pow(g, i) for g in gs) for i in range(1, k + 1))


def transpose(a: Matrix) -> Matrix:
    return tuple(zip(*a))


def submatrix(a: Matrix, rows: Sequence[int], cols: Sequence[int]) -> Matrix:
    return tuple(tuple(a[i][j] for j in cols) for i in rows)


def matvec(field: PrimeField, a: Matrix, x: Sequence[int]) -> Vector:
    p = field.p
    return tuple(sum(aij * xj for aij, xj in zip(row, x)) % p for row in a)


def vecmat(field: PrimeField, x: Sequence[int], a: Matrix) -> Vector:
    """Row vector times matrix."""
    p = field.p
    if not a:
        return ()
    return tuple(sum(xi * a[i][j] for i, xi in enumerate(x)) % p for j in range(len(a[0])))


def rref(field: PrimeField, rows: Iterable[Sequence[int]]) -> tuple[list[list[int]], list[int]]:
    """Reduced row echelon form. Returns (nonzero rows, pivot columns)."""
    p = field.p
    m = [[x % p for x in r] for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        sel = next((i for i in range(r, len(m)) if m[i][c]), None)
        if sel is None:
            continue
        m[r], m[sel] = m[sel], m[r]
        inv = pow(m[r][c], -1, p)
        m[r] = [x * inv % p for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [(x - f * y) % p for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(field: PrimeField, rows: Iterable[Sequence[int]]) -> int:
    return len(rref(field, rows)[1])


def det(field: PrimeField, a: Matrix) -> int:
    p = field.p
    n = len(a)
    if n == 0:
        return 1
    m = [list(r) for r in a]
    d = 1
    for c in range(n):
        sel = next((i for i in range(c, n) if m[i][c] % p), None)
        if sel is None:
            return 0
        if sel != c:
            m[c], m[sel] = m[sel], m[c]
            d = -d
        d = d * m[c][c] % p
        inv = pow(m[c][c], -1, p)
        for i in range(c + 1, n):
            f = m[i][c] * inv % p
            if f:
                m[i] = [(x - f * y) % p for x, y in zip(m[i], m[c])]
    return d % p


def solve(field: PrimeField, a: Matrix, b: Sequence[int]) -> Vector:
    """Unique solution of a x = b for square a; raises SingularMatrixError."""
    n = len(a)
    if any(len(r) != n for r in a) or len(b) != n:
        raise ParameterError("solve needs a square system")
    aug = [list(r) + [bi] for r, bi in zip(a, b)]
    red, piv = rref(field, aug)
    if piv[:n] != list(range(n)) or len(piv) > n:
        raise SingularMatrixError("matrix is singular")
    return tuple(row[n] for row in red)


def inverse(field: PrimeField, a: Matrix) -> Matrix:
    n = len(a)
    aug = [list(r) + [int(i == j) for j in range(n)] for i, r in enumerate(a)]
    red, piv = rref(field, aug)
    if piv[:n] != list(range(n)) or len(red) < n:
        raise SingularMatrixError("matrix is singular")
    return tuple(tuple(row[n:]) for row in red)


def is_strongly_regular(field: PrimeField, a: Matrix, *, all_rows: bool = False,
                        guard: int = MINOR_GUARD) -> bool:
    """Check the minors that the evasive-set construction relies on.

    By default, for every r <= rows, each r x r minor taken from the *first r
    rows* must be nonsingular (this is what the intersection bound and the
    exact-size argument use). With ``all_rows=True`` every r x r minor over every
    choice of r rows is checked; Vandermonde matrices generally fail that
    stronger test, e.g. p=7 with generators 2 and 5 on rows {1, 3}.
    """
    k = len(a)
    m = len(a[0]) if k else 0
    if k > m:
        return False
    work = sum(comb(m, r) * (comb(k, r) if all_rows else 1) for r in range(1, k + 1))
    if work > guard:
        raise GuardExceeded(f"{work} minors exceeds the guard of {guard}")
    for r in range(1, k + 1):
        row_sets = combinations(range(k), r) if all_rows else [tuple(range(r))]
        for rows in row_sets:
            for cols in combinations(range(m), r):
                if det(field, submatrix(a, rows, cols)) == 0:
                    return False
    return True


class AffineSubspace:
    """offset + span(basis) inside F^n. Basis rows must be linearly independent."""

    __slots__ = ("field", "offset", "basis")

    def __init__(self, field: PrimeField, offset: Sequence[int], basis: Iterable[Sequence[int]] = ()):
        self.field = field
        self.offset: Vector = tuple(int(x) % field.p for x in offset)
        self.basis: Matrix = tuple(tuple(int(x) % field.p for x in row) for row in basis)
        n = len(self.offset)
        if any(len(row) != n for row in self.basis):
            raise ParameterError("basis vectors must have the ambient dimension")
        if rank(field, self.basis) != len(self.basis):
            raise ParameterError("basis vectors are linearly dependent")

    @classmethod
    def span(cls, field: PrimeField, offset: Sequence[int], vectors: Iterable[Sequence[int]]) -> "AffineSubspace":
        """Like the constructor but reduces a possibly dependent spanning set."""
        rows, _ = rref(field, vectors)
        return cls(field, offset, rows)

    @classmethod
    def point(cls, field: PrimeField, x: Sequence[int]) -> "AffineSubspace":
        return cls(field, x, ())

    @property
    def ambient_dim(self) -> int:
        return len(self.offset)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __len__(self):
        return self.field.p ** self.dim

    def __repr__(self):
        return f"AffineSubspace(p={self.field.p}, offset={self.offset}, basis={self.basis})"

    def __eq__(self, other):
        if not isinstance(other, AffineSubspace):
            return NotImplemented
        a, b = self.normalize(), other.normalize()
        return self.field == other.field and (a.offset, a.basis) == (b.offset, b.basis)

    def __hash__(self):
        e = self.normalize()
        return hash((self.field.p, e.offset, e.basis))

    def at(self, t: Sequence[int]) -> Vector:
        p = self.field.p
        x = list(self.offset)
        for ti, row in zip(t, self.basis):
            if ti:
                x = [(xi + ti * ri) for xi, ri in zip(x, row)]
        return tuple(xi % p for xi in x)

    def points(self) -> Iterator[Vector]:
        for t in product(range(self.field.p), repeat=self.dim):
            yield self.at(t)

    def __contains__(self, x: Sequence[int]) -> bool:
        if len(x) != self.ambient_dim:
            return False
        diff = [(xi - oi) % self.field.p for xi, oi in zip(x, self.offset)]
        return rank(self.field, list(self.basis) + [diff]) == self.dim

    def project(self, coords: Sequence[int]) -> "AffineSubspace":
        """Image under the coordinate projection onto ``coords``."""
        return AffineSubspace.span(self.field, [self.offset[j] for j in coords],
                                   [[row[j] for j in coords] for row in self.basis])

    def normalize(self) -> "EchelonMap":
        return normalize(self)

    def to_dict(self) -> dict:
        return {
            "p": self.field.p,
            "ambient_dim": self.ambient_dim,
            "dim": self.dim,
            "offset": list(self.offset),
            "basis": [list(r) for r in self.basis],
        }

    @classmethod
    def from_dict(cls, d: dict) -> "AffineSubspace":
        field = PrimeField(d["p"])
        h = cls(field, d["offset"], d.get("basis", []))
        if "ambient_dim" in d and d["ambient_dim"] != h.ambient_dim:
            raise ParameterError("ambient_dim does not match offset length")
        if "dim" in d and d["dim"] != h.dim:
            raise ParameterError("dim does not match the number of basis vectors")
        return h

    def dumps(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def loads(cls, s: str) -> "AffineSubspace":
        return cls.from_dict(json.loads(s))


@dataclass(frozen=True)
class EchelonMap:
    """Upper-echelon parametrization t -> offset + sum_i t_i * basis[i].

    ``basis`` is in reduced row echelon form with leading ones at ``pivots``
    and ``offset`` vanishes on the pivot coordinates, so coordinate pivots[i]
    of the image is exactly t_i, and any coordinate left of pivots[i] only
    involves t_0..t_{i-1}.
    """

    field: PrimeField
    offset: Vector
    basis: Matrix
    pivots: tuple[int, ...]

    @property
    def dim(self) -> int:
        return len(self.pivots)

    @property
    def ambient_dim(self) -> int:
        return len(self.offset)

    def __call__(self, t: Sequence[int]) -> Vector:
        return self.subspace().at(t)

    def form(self, j: int) -> tuple[int, Vector]:
        """Coordinate j as (constant, coefficients on t_0..t_{r-1})."""
        return self.offset[j], tuple(row[j] for row in self.basis)

    def subspace(self) -> AffineSubspace:
        return AffineSubspace(self.field, self.offset, self.basis)

    def params_of(self, x: Sequence[int]) -> Vector:
        """Parameters t with self(t) == x, read off the pivot coordinates."""
        return tuple(x[j] for j in self.pivots)


def normalize(h: AffineSubspace) -> EchelonMap:
    field = h.field
    p = field.p
    rows, pivots = rref(field, h.basis)
    off = list(h.offset)
    for row, j in zip(rows, pivots):
        c = off[j]
        if c:
            off = [(x - c * y) % p for x, y in zip(off, row)]
    return EchelonMap(field, tuple(off), tuple(tuple(r) for r in rows), tuple(pivots))
