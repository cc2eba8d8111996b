import random
from itertools import product

import pytest

from evasive import (AffineSubspace, BlockVariety, DimensionError, EvasiveSet, ParameterError, explicit_params,
                     intersect_set, normalize, poly, solve_block, triangularize)
from evasive.intersect import count_solutions
from evasive.oracle import GuardExceeded, brute_intersection
from evasive.verify import sample_subspace, uniform_subspace

from conftest import p7_k2_instance, small_instance

F7 = small_instance().field


@pytest.fixture
def v():
    return BlockVariety(small_instance())


def mixed_restriction(v, ts, emap, t):
    """Oracle: sum_l u_i[l] f_l(emap(t_1^{D_1}, ..., t_r^{D_r})) evaluated numerically."""
    p = v.field.p
    tt = tuple(pow(a, e, p) for a, e in zip(t, ts.exponents))
    fx = v.evaluate(emap(tt))
    return tuple(sum(u * f for u, f in zip(row, fx)) % p for row in ts.mixing)


def test_triangularize_diagonal_line(v):
    e = normalize(AffineSubspace(F7, (0, 0), [(1, 1)]))
    ts = triangularize(v, e)
    assert ts.pivots == (0,) and ts.mixing == ((1,),) and ts.D == 5 and ts.exponents == (1,)
    assert ts.h == ({(5,): 1, (2,): 1},)
    assert ts.residual_degrees() == [2]
    for t in range(7):
        assert ts.evaluate((t,)) == mixed_restriction(v, ts, e, (t,))


def test_triangularize_offset_line(v):
    e = normalize(AffineSubspace(F7, (0, 3), [(1, 4)]))
    ts = triangularize(v, e)
    # t^5 + (4t + 3)^2 = t^5 + 2t^2 + 3t + 2 mod 7
    assert ts.h == ({(5,): 1, (2,): 2, (1,): 3, (0,): 2},)
    assert ts.residual_degrees() == [2]
    for t in range(7):
        assert ts.evaluate((t,)) == ((t**5 + (4 * t + 3) ** 2) % 7,)


def test_triangularize_point(v):
    ts = triangularize(v, normalize(AffineSubspace.point(F7, (6, 1))))
    assert ts.dim == 0 and ts.h == ()


def test_triangularize_rejects_high_dimension(v):
    with pytest.raises(DimensionError):
        triangularize(v, normalize(AffineSubspace(F7, (0, 0), [(1, 0), (0, 1)])))


@pytest.mark.parametrize("params", [p7_k2_instance(3), p7_k2_instance(4), small_instance()])
def test_triangular_form_random(params):
    v = BlockVariety(params)
    rng = random.Random(3)
    for _ in range(150):
        r = rng.randint(1, params.k)
        e = normalize(uniform_subspace(rng, params.field, params.m, r))
        ts = triangularize(v, e)
        assert all(d < ts.D for d in ts.residual_degrees())
        for i, h in enumerate(ts.h):
            lead = tuple(ts.D if l == i else 0 for l in range(r))
            assert h.get(lead) == 1
        for t in product(range(7), repeat=r):
            assert ts.evaluate(t) == mixed_restriction(v, ts, e, t)


def test_lemma_example():
    assert count_solutions([{(2,): 1, (1,): 1}], 1, 5) == 2  # t^2 + t has roots 0, 4


def test_solve_block_examples(v):
    h = AffineSubspace(F7, (0, 0), [(1, 1)])
    # t^5 + t^2 = 0  <=>  t = 0 or t^3 = 6
    assert [t for t in range(7) if (t**5 + t**2) % 7 == 0] == [0, 3, 5, 6]
    assert solve_block(v, h) == [(0, 0), (3, 3), (5, 5), (6, 6)]
    assert solve_block(v, h, "univariate") == [(0, 0), (3, 3), (5, 5), (6, 6)]
    assert solve_block(v, AffineSubspace.point(F7, (6, 1))) == [(6, 1)]
    assert solve_block(v, AffineSubspace.point(F7, (1, 1))) == []


def test_solve_block_errors(v):
    with pytest.raises(DimensionError):
        solve_block(v, AffineSubspace(F7, (0, 0), [(1, 0), (0, 1)]))
    v17 = BlockVariety(p7_k2_instance(4))
    with pytest.raises(GuardExceeded):
        solve_block(v17, AffineSubspace(v17.field, (0,) * 4, [(1, 0, 0, 0), (0, 1, 0, 0)]), guard=10)
    with pytest.raises(ParameterError):
        solve_block(v17, AffineSubspace(v17.field, (0,) * 4, [(1, 0, 0, 0), (0, 1, 0, 0)]), "univariate")


def test_univariate_matches_exhaustive(p17):
    v = BlockVariety(p17)
    rng = random.Random(11)
    for _ in range(300):
        h = uniform_subspace(rng, p17.field, 4, 1)
        if rng.random() < 0.5:
            # put a known member on the line
            x = v.encode_block((rng.randrange(17), rng.randrange(17)))
            h = AffineSubspace(p17.field, x, h.basis)
        assert solve_block(v, h, "univariate") == solve_block(v, h)


def test_intersect_examples(small_set):
    h = AffineSubspace(F7, (0, 0, 6, 1), [(1, 1, 0, 0)])
    want = [(0, 0, 6, 1), (3, 3, 6, 1), (5, 5, 6, 1), (6, 6, 6, 1)]
    assert brute_intersection(small_set.params, h.offset, h.basis) == want
    assert intersect_set(small_set, h) == want
    assert intersect_set(small_set, AffineSubspace(F7, (0, 0, 1, 1), [(1, 1, 0, 0)])) == []
    assert intersect_set(small_set, AffineSubspace.point(F7, (0, 0, 0, 0))) == [(0, 0, 0, 0)]


def test_intersect_dimension_error(small_set):
    with pytest.raises(DimensionError):
        intersect_set(small_set, AffineSubspace(F7, (0,) * 4, [(1, 0, 0, 0), (0, 0, 1, 0)]))


@pytest.mark.parametrize("params", [small_instance(), p7_k2_instance(3, 6), p7_k2_instance(4, 8)],
                         ids=["p7k1", "p7k2m3", "p7k2m4"])
@pytest.mark.parametrize("solver", ["exhaustive", "univariate"])
def test_intersect_matches_enumeration(params, solver):
    s = EvasiveSet(params)
    rng = random.Random(5)
    for _ in range(120):
        h = sample_subspace(rng, s, rng.randint(0, params.k))
        got = intersect_set(s, h, solver)
        assert got == brute_intersection(params, h.offset, h.basis)
        assert len(got) <= params.bound(h.dim)


def test_intersect_matches_enumeration_p17(p17_set):
    rng = random.Random(9)
    for _ in range(150):
        h = sample_subspace(rng, p17_set, rng.randint(0, 2))
        assert intersect_set(p17_set, h) == brute_intersection(p17_set.params, h.offset, h.basis)


def test_recursion_dimensions_sum_to_dim(p17_set):
    rng = random.Random(2)
    for _ in range(100):
        h = sample_subspace(rng, p17_set, rng.randint(0, 2))
        trace = []
        intersect_set(p17_set, h, trace=trace)
        if trace and len(trace) == p17_set.blocks:
            assert sum(r for _, r in trace) == h.dim
    # a subspace spread over both blocks
    f = p17_set.field
    h = AffineSubspace(f, p17_set.encode((1, 2, 3, 4)), [(1, 0, 0, 0, 0, 0, 0, 0), (0, 0, 0, 0, 0, 1, 0, 0)])
    trace = []
    out = intersect_set(p17_set, h, trace=trace)
    assert trace == [(0, 1), (1, 1)]
    assert p17_set.encode((1, 2, 3, 4)) in out
