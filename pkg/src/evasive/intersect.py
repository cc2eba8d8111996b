"""Computing S ∩ H block by block, and the triangular reduction of one block.

``intersect_set`` walks the blocks left to right. The subspace is kept in
reduced echelon form, so the parameters that the first block pins down are
exactly the leading rows, and fixing a solution on that block leaves an
echelon basis (the remaining rows) for the rest of the coordinates.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import product
from math import prod
from typing import Optional, Sequence, Union

from . import poly
from .errors import DimensionError, GuardExceeded, ParameterError
from .evasive import EvasiveSet
from .linalg import AffineSubspace, EchelonMap, Matrix, Vector, inverse, normalize, submatrix, vecmat
from .oracle import ENUM_GUARD
from .variety import BlockVariety


class SolverKind(str, enum.Enum):
    EXHAUSTIVE = "exhaustive"
    UNIVARIATE = "univariate"


@dataclass(frozen=True)
class TriangularSystem:
    """h_i(t) = t_i^D + r_i(t) obtained from one block restricted to a subspace.

    ``pivots`` are the echelon pivots of the subspace (block positions),
    ``mixing`` the rows of the inverse of A restricted to those columns,
    ``cross[j]`` the coefficients c_ij for each non-pivot position j.
    """

    p: int
    pivots: tuple[int, ...]
    mixing: Matrix
    cross: dict[int, tuple[int, ...]]
    D: int
    exponents: tuple[int, ...]
    h: tuple[poly.Poly, ...]
    residuals: tuple[poly.Poly, ...]

    @property
    def dim(self) -> int:
        return len(self.pivots)

    def residual_degrees(self) -> list[int]:
        return [poly.degree(r) for r in self.residuals]

    def evaluate(self, t: Sequence[int]) -> Vector:
        return tuple(poly.evaluate(h, t, self.p) for h in self.h)


def triangularize(v: BlockVariety, emap: EchelonMap) -> TriangularSystem:
    """Reduce f restricted to the image of ``emap`` to the form t_i^D + (lower degree)."""
    r = emap.dim
    if r > v.k:
        raise DimensionError(f"subspace dimension {r} exceeds k={v.k}")
    if emap.ambient_dim != v.m:
        raise ParameterError("echelon map must land in the block F^m")
    p = v.field.p
    J = emap.pivots
    if r == 0:
        return TriangularSystem(p, (), (), {}, 1, (), (), ())

    rows = v.matrix[:r]
    a_j = submatrix(rows, range(r), J)
    u = inverse(v.field, a_j)  # raises if strong regularity is violated
    for i in range(r):
        if vecmat(v.field, u[i], a_j) != tuple(int(i == l) for l in range(r)):
            raise AssertionError("mixing row does not isolate its pivot")
    others = [j for j in range(v.m) if j not in J]
    cross = {j: tuple(sum(u[i][l] * rows[l][j] for l in range(r)) % p for i in range(r)) for j in others}

    pivot_degrees = [v.degrees[j] for j in J]
    D = prod(pivot_degrees)
    exps = tuple(D // d for d in pivot_degrees)

    # l_j(t_1^{D_1}, ..., t_r^{D_r})^{d_j} for each non-pivot coordinate
    subst = {}
    for j in others:
        const, coeffs = emap.form(j)
        lin = poly.substitute_powers(poly.linear(const, coeffs, p), exps)
        subst[j] = poly.power(lin, v.degrees[j], r, p)

    hs, rs = [], []
    for i in range(r):
        res: poly.Poly = {}
        for j in others:
            res = poly.add(res, poly.scale(subst[j], cross[j][i], p), p)
        lead = tuple(D if l == i else 0 for l in range(r))
        if poly.degree(res) >= D:
            raise AssertionError(f"residual degree {poly.degree(res)} is not below D={D}")
        rs.append(res)
        hs.append(poly.add(res, poly.monomial(lead, 1, p), p))
    return TriangularSystem(p, tuple(J), u, cross, D, exps, tuple(hs), tuple(rs))


def _exhaustive(v: BlockVariety, emap: EchelonMap, guard: int) -> list[Vector]:
    p, r = v.field.p, emap.dim
    if p**r > guard:
        raise GuardExceeded(
            f"exhaustive block solve needs {p}**{r} evaluations (guard {guard}); use a smaller p or r")
    h = emap.subspace()
    return [x for x in (h.at(t) for t in product(range(p), repeat=r)) if v.member(x)]


def _univariate(v: BlockVariety, emap: EchelonMap, guard: int) -> list[Vector]:
    p = v.field.p
    gs = [poly.u_from_sparse(g, p) for g in v.restrict(emap)]
    g = []
    for gi in gs:
        g = poly.u_gcd(g, gi, p) if g else poly.u_monic(gi, p)
    if not g:
        # every restricted polynomial vanishes identically on the line
        return _exhaustive(v, emap, guard)
    return [emap((t,)) for t in poly.u_roots(g, p)]


def solve_block(v: BlockVariety, h: AffineSubspace, solver: Union[str, SolverKind] = SolverKind.EXHAUSTIVE,
                guard: int = ENUM_GUARD) -> list[Vector]:
    """All points of ``h`` (inside F^m) on the block variety, sorted."""
    solver = SolverKind(solver)
    if h.ambient_dim != v.m:
        raise ParameterError(f"subspace must live in F^{v.m}")
    r = h.dim
    if r > v.k:
        raise DimensionError(f"subspace dimension {r} exceeds k={v.k}")
    emap = normalize(h)
    if r == 0:
        out = [emap.offset] if v.member(emap.offset) else []
    elif solver is SolverKind.UNIVARIATE:
        if r != 1:
            raise ParameterError("the univariate solver only handles one-dimensional subspaces")
        out = _univariate(v, emap, guard)
    else:
        out = _exhaustive(v, emap, guard)
    out.sort()
    if len(out) > v.degrees[0] ** r:
        raise AssertionError(f"{len(out)} block solutions exceed the bound {v.degrees[0]}^{r}")
    return out


def intersect_set(s: EvasiveSet, h: AffineSubspace, solver: Union[str, SolverKind] = SolverKind.EXHAUSTIVE,
                  guard: int = ENUM_GUARD, trace: Optional[list] = None) -> list[Vector]:
    """S ∩ H, lexicographically sorted.

    ``solver="univariate"`` uses polynomial root finding on blocks where the
    projected subspace is a line and falls back to enumeration elsewhere.
    If ``trace`` is a list, (block index, projected dimension) pairs are
    appended to it along the first branch of the recursion.
    """
    solver = SolverKind(solver)
    if h.field != s.field or h.ambient_dim != s.n:
        raise ParameterError(f"subspace must live in F_{s.field.p}^{s.n}")
    if h.dim > s.params.k:
        raise DimensionError(f"subspace dimension {h.dim} exceeds k={s.params.k}")
    emap = normalize(h)
    m, blocks, field = s.params.m, s.blocks, s.field
    p = field.p
    out: list[Vector] = []
    traced = set()

    def walk(t: int, offset: Vector, basis: Matrix, pivots: tuple[int, ...], prefix: tuple):
        if t == blocks:
            out.append(prefix)
            return
        r1 = sum(1 for j in pivots if j < m)
        if trace is not None and t not in traced:
            traced.add(t)
            trace.append((t, r1))
        proj = AffineSubspace(field, offset[:m], [row[:m] for row in basis[:r1]])
        kind = solver if (solver is SolverKind.UNIVARIATE and r1 == 1) else SolverKind.EXHAUSTIVE
        rest_basis = tuple(row[m:] for row in basis[r1:])
        rest_pivots = tuple(j - m for j in pivots[r1:])
        for x in solve_block(s.block, proj, kind, guard):
            tail = list(offset[m:])
            for row, j in zip(basis[:r1], pivots[:r1]):
                c = x[j]
                if c:
                    tail = [(a + c * b) % p for a, b in zip(tail, row[m:])]
            walk(t + 1, tuple(tail), rest_basis, rest_pivots, prefix + x)

    walk(0, emap.offset, emap.basis, emap.pivots, ())
    out.sort()
    bound = s.params.degrees[0] ** h.dim
    if len(out) > bound:
        raise AssertionError(f"|S ∩ H| = {len(out)} exceeds the bound {bound}")
    return out


def count_solutions(hs: Sequence[poly.Poly], nvars: int, p: int) -> int:
    """Number of common zeros in F_p^nvars, by enumeration."""
    return sum(1 for t in product(range(p), repeat=nvars) if all(poly.evaluate(h, t, p) == 0 for h in hs))
