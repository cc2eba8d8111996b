"""One block of the construction: the zero set of f_i(x) = sum_j A[i][j] x_j^{d_j}."""

from __future__ import annotations

from typing import Optional, Sequence

from . import oracle
from . import poly
from .errors import NotAMemberError, ParameterError, SingularMatrixError
from .linalg import EchelonMap, Vector, inverse, matvec, submatrix, solve
from .params import EvasiveParams


class BlockVariety:
    """V_F(f_1, ..., f_k) inside F_p^m.

    The k coordinates in ``params.pivot_set`` carry degrees coprime to p-1;
    they are determined by the remaining m-k "free" coordinates, which is what
    makes the variety have exactly p^(m-k) points and gives the encoding.
    """

    def __init__(self, params: EvasiveParams):
        self.params = params
        self.field = params.field
        self.matrix = params.matrix
        self.degrees = params.degrees
        self.pivots = params.pivot_set
        self.free = tuple(j for j in range(params.m) if j not in self.pivots)
        k = params.k
        self.pivot_minor = submatrix(self.matrix, range(k), self.pivots)
        try:
            self.pivot_inverse = inverse(self.field, self.pivot_minor)
        except SingularMatrixError:
            raise ParameterError("pivot minor is singular; matrix is not strongly regular") from None

    @property
    def m(self) -> int:
        return self.params.m

    @property
    def k(self) -> int:
        return self.params.k

    def __repr__(self):
        p = self.params
        return f"BlockVariety(p={p.p}, k={p.k}, m={p.m}, degrees={p.degrees})"

    def _check(self, x: Sequence[int], length: int, what: str) -> Vector:
        if len(x) != length:
            raise ParameterError(f"{what} must have {length} coordinates, got {len(x)}")
        return tuple(int(v) % self.field.p for v in x)

    def evaluate(self, x: Sequence[int]) -> Vector:
        x = self._check(x, self.m, "point")
        p = self.field.p
        mono = [pow(xj, d, p) for xj, d in zip(x, self.degrees)]
        return matvec(self.field, self.matrix, mono)

    def member(self, x: Sequence[int]) -> bool:
        return not any(self.evaluate(x))

    def __contains__(self, x) -> bool:
        return len(x) == self.m and self.member(x)

    def encode_block(self, z: Sequence[int]) -> Vector:
        z = self._check(z, self.m - self.k, "block message")
        f, p = self.field, self.field.p
        x = [0] * self.m
        for j, zj in zip(self.free, z):
            x[j] = zj
        b = []
        for row in self.matrix:
            s = sum(row[j] * pow(x[j], self.degrees[j], p) for j in self.free)
            b.append(-s % p)
        y = solve(f, self.pivot_minor, b)
        for j, yi, e in zip(self.pivots, y, self.params.inv_exponents):
            x[j] = pow(yi, e, p)
        return tuple(x)

    def decode_block(self, x: Sequence[int]) -> Vector:
        x = self._check(x, self.m, "point")
        if not self.member(x):
            raise NotAMemberError(f"{x} is not on the variety")
        return tuple(x[j] for j in self.free)

    def size(self) -> int:
        return self.field.p ** (self.m - self.k)

    def enumerate_block(self, guard: int = oracle.ENUM_GUARD) -> list[Vector]:
        return oracle.enumerate_block_points(self.params, guard)

    def restrict(self, emap: EchelonMap, rows: Optional[int] = None) -> list[poly.Poly]:
        """g_i(t) = f_i(emap(t)) for the first ``rows`` equations, as polynomials in t."""
        if emap.ambient_dim != self.m:
            raise ParameterError("echelon map must land in F^m")
        p = self.field.p
        r = emap.dim
        rows = self.k if rows is None else rows
        powers = []
        for j in range(self.m):
            const, coeffs = emap.form(j)
            powers.append(poly.power(poly.linear(const, coeffs, p), self.degrees[j], r, p))
        out = []
        for i in range(rows):
            g: poly.Poly = {}
            for j in range(self.m):
                g = poly.add(g, poly.scale(powers[j], self.matrix[i][j], p), p)
            out.append(g)
        return out
