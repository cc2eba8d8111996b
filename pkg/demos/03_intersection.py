"""Intersecting the set with a low-dimensional affine subspace.

Run with:  python demos/03_intersection.py
"""
import random

from evasive import AffineSubspace, BlockVariety, EvasiveSet, gen_params, intersect_set, normalize, triangularize
from evasive.oracle import brute_intersection

params = gen_params(2, 4, 8)
S = EvasiveSet(params)
f = params.field
rng = random.Random(0)

# A plane through two points of S.
a = S.encode((1, 2, 3, 4))
b = S.encode((1, 2, 9, 9))
direction = [(u - v) % f.p for u, v in zip(b, a)]
H = AffineSubspace.span(f, a, [direction, [rng.randrange(f.p) for _ in range(8)]])
print("H:", H)

# Block-by-block algorithm vs. enumerating all 17^2 points of H.
fast = intersect_set(S, H, trace=(trace := []))
slow = brute_intersection(params, H.offset, H.basis)
print("S ∩ H =", fast)
print("agrees with enumeration:", fast == slow, " per-block dimensions:", trace)
print("bound:", params.bound(H.dim))

# The triangular form behind the bound, on the first block.
v = BlockVariety(params)
line = normalize(AffineSubspace(f, (0, 0, 0, 0), [(1, 1, 1, 1)]))
ts = triangularize(v, line)
print("D =", ts.D, " h_1 =", ts.h[0], " residual degrees:", ts.residual_degrees())

# Lines can also be solved by root finding instead of enumeration.
print(intersect_set(S, H, "univariate") == fast)
