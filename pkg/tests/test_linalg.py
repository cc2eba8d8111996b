from itertools import combinations, product

import pytest
from hypothesis import given, settings, strategies as st

from evasive import AffineSubspace, ParameterError, PrimeField, SingularMatrixError
from evasive.errors import GuardExceeded
from evasive.linalg import det, inverse, is_strongly_regular, matvec, normalize, rank, solve, submatrix, vandermonde

F7 = PrimeField(7)


def det_by_permutations(p, a):
    """Leibniz expansion; independent of the elimination-based det."""
    from itertools import permutations
    n = len(a)
    total = 0
    for perm in permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = -1 if inversions % 2 else 1
        for i in range(n):
            term *= a[i][perm[i]]
        total += term
    return total % p


def test_vandermonde_examples():
    assert vandermonde(F7, 2, [1, 2, 3]) == ((1, 2, 3), (1, 4, 2))
    assert vandermonde(PrimeField(17), 1, [1, 2, 3, 4]) == ((1, 2, 3, 4),)
    with pytest.raises(ParameterError):
        vandermonde(F7, 2, [1, 1, 2])
    with pytest.raises(ParameterError):
        vandermonde(F7, 2, [0, 1, 2])


def test_strong_regularity_examples():
    a = ((1, 2, 3), (1, 4, 2))
    # oracle: all 1x1 and 2x2 minors by Leibniz
    assert all(x for row in a for x in row)
    assert all(det_by_permutations(7, submatrix(a, (0, 1), c)) for c in combinations(range(3), 2))
    assert is_strongly_regular(F7, a)
    assert is_strongly_regular(F7, a, all_rows=True)
    assert not is_strongly_regular(F7, ((1, 0), (0, 1)))
    assert is_strongly_regular(F7, ((1,),))


@pytest.mark.parametrize("p", [7, 11, 13, 17])
def test_vandermonde_is_strongly_regular(p):
    f = PrimeField(p)
    for k in range(1, 4):
        for m in range(k, 6):
            a = vandermonde(f, k, range(1, m + 1))
            assert is_strongly_regular(f, a)
            # the leading-row minors checked one by one with the Leibniz oracle
            for r in range(1, k + 1):
                for cols in combinations(range(m), r):
                    assert det_by_permutations(p, submatrix(a, range(r), cols)) != 0


def test_vandermonde_can_fail_all_row_minors():
    # rows {1, 3}, generators 2 and 5 = -2: det = 2*5*(5^2 - 2^2) = 0 mod 7
    a = vandermonde(F7, 3, range(1, 6))
    assert det(F7, submatrix(a, (0, 2), (1, 4))) == 0
    assert not is_strongly_regular(F7, a, all_rows=True)
    assert is_strongly_regular(F7, a)


def test_strong_regularity_guard():
    f = PrimeField(10007)
    a = vandermonde(f, 6, range(1, 60))
    with pytest.raises(GuardExceeded):
        is_strongly_regular(f, a)


@given(st.lists(st.lists(st.integers(0, 10), min_size=3, max_size=3), min_size=3, max_size=3))
def test_det_matches_leibniz(rows):
    for p in (2, 7, 11):
        f = PrimeField(p)
        a = tuple(tuple(x % p for x in r) for r in rows)
        assert det(f, a) == det_by_permutations(p, a)


def test_solve_examples():
    assert solve(F7, ((1,),), (3,)) == (3,)
    assert solve(F7, ((1, 2), (1, 4)), (0, 0)) == (0, 0)
    with pytest.raises(SingularMatrixError):
        solve(F7, ((1, 1), (2, 2)), (1, 0))


@settings(max_examples=200)
@given(st.integers(1, 4), st.data())
def test_solve_reproduces_rhs(n, data):
    p = data.draw(st.sampled_from([2, 5, 7, 17, 101]))
    f = PrimeField(p)
    a = tuple(tuple(data.draw(st.integers(0, p - 1)) for _ in range(n)) for _ in range(n))
    b = tuple(data.draw(st.integers(0, p - 1)) for _ in range(n))
    if det(f, a) == 0:
        with pytest.raises(SingularMatrixError):
            solve(f, a, b)
        return
    x = solve(f, a, b)
    assert matvec(f, a, x) == b
    ai = inverse(f, a)
    assert matvec(f, ai, b) == x


def image(h):
    return set(h.points())


def test_normalize_line_example():
    h = AffineSubspace(F7, (2, 1, 0), [(0, 1, 3)])  # t -> (2, t+1, 3t)
    e = normalize(h)
    assert e.pivots == (1,)
    assert [e((s,)) for s in range(7)] == [(2, s, (3 * s + 4) % 7) for s in range(7)]
    assert set(e((s,)) for s in range(7)) == image(h)


def test_normalize_full_plane_and_point():
    e = normalize(AffineSubspace(F7, (3, 5), [(2, 1), (1, 1)]))
    assert e.pivots == (0, 1)
    assert all(e((a, b)) == (a, b) for a in range(7) for b in range(7))
    e = normalize(AffineSubspace.point(F7, (5, 0, 1)))
    assert e.pivots == () and e(()) == (5, 0, 1)


def test_dependent_basis_rejected_but_span_reduces():
    with pytest.raises(ParameterError):
        AffineSubspace(F7, (0, 0, 0), [(1, 2, 3), (2, 4, 6)])
    h = AffineSubspace.span(F7, (0, 0, 0), [(1, 2, 3), (2, 4, 6)])
    assert h.dim == 1


def affine_subspaces(p, n, max_r):
    def build(draw):
        r = draw(st.integers(0, max_r))
        while True:
            basis = [[draw(st.integers(0, p - 1)) for _ in range(n)] for _ in range(r)]
            if rank(PrimeField(p), basis) == r:
                break
        off = [draw(st.integers(0, p - 1)) for _ in range(n)]
        return AffineSubspace(PrimeField(p), off, basis)
    return st.composite(lambda draw: build(draw))()


@settings(max_examples=150, deadline=None)
@given(st.data())
def test_normalize_image_and_pivot_structure(data):
    p = data.draw(st.sampled_from([2, 3, 5, 7]))
    n = data.draw(st.integers(1, 5))
    h = data.draw(affine_subspaces(p, n, min(2, n)))
    e = normalize(h)
    r = h.dim
    assert e.dim == r
    assert list(e.pivots) == sorted(set(e.pivots))
    # image equality by enumerating both parametrizations
    assert {e(t) for t in product(range(p), repeat=r)} == image(h)
    for i, j in enumerate(e.pivots):
        const, coeffs = e.form(j)
        assert const == 0 and coeffs == tuple(int(l == i) for l in range(r))
        for jj in range(j):
            assert all(c == 0 for c in e.form(jj)[1][i:])
    # lexicographically earliest pivots: the first non-constant coordinate of h
    if r:
        first = min(j for j in range(n) if any(row[j] for row in h.basis))
        assert e.pivots[0] == first


def test_subspace_json_roundtrip():
    h = AffineSubspace(F7, (1, 2, 3, 4), [(1, 1, 0, 0)])
    d = h.to_dict()
    assert d == {"p": 7, "ambient_dim": 4, "dim": 1, "offset": [1, 2, 3, 4], "basis": [[1, 1, 0, 0]]}
    assert AffineSubspace.loads(h.dumps()) == h
    with pytest.raises(ParameterError):
        AffineSubspace.from_dict({**d, "dim": 2})


def test_contains_and_projection():
    h = AffineSubspace(F7, (0, 0, 6, 1), [(1, 1, 0, 0)])
    assert (3, 3, 6, 1) in h and (3, 4, 6, 1) not in h
    t = h.project(range(2))
    assert t.dim == 1 and (5, 5) in t
