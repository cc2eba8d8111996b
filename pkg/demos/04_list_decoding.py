"""Using the set as a filter after a subspace list decoder.

The decoder is replaced by an oracle that returns a random k-dimensional
subspace containing the transmitted word; intersecting with S shrinks the
candidate list from p^k to at most d_1^k.

Run with:  python demos/04_list_decoding.py
"""
from collections import Counter
from fractions import Fraction

from evasive import SimConfig, composed_rate, gen_params, simulate
from evasive.listdec import summary_line

params = gen_params(2, 4, 8)
results = list(simulate(SimConfig(params, trials=200, seed=1)))
print(summary_line(results))
print("list sizes:", dict(sorted(Counter(r.list_size for r in results).items())))
print("subspace size without the filter:", params.p ** params.k)

# Rate paid for restricting messages to S.
for R in (Fraction(1, 2), Fraction(9, 10)):
    print(f"R={R}  eps={params.eps}  R'={composed_rate(R, params.eps)}")
