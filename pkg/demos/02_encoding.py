"""Encoding messages into the evasive set and decoding them back.

Run with:  python demos/02_encoding.py
"""
from itertools import product

from evasive import EvasiveSet, gen_params

params = gen_params(2, 4, 8)
S = EvasiveSet(params)
print(S, "has", len(S), "points =", params.p, "^", params.message_length)

# Each block of 4 coordinates keeps 2 message symbols verbatim on the
# coordinates whose degree is not coprime to p-1; the other 2 are solved for.
msg = (1, 2, 3, 4)
x = S.encode(msg)
print("message", msg, "->", x)
print("member:", S.member_set(x), " decoded:", S.decode(x))

# One block has exactly p^(m-k) = 289 points; check against brute force.
block = S.block
pts = block.enumerate_block()
print("block points:", len(pts), " first few:", pts[:4])
assert sorted(block.encode_block(z) for z in product(range(17), repeat=2)) == pts
