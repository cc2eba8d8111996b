"""Choosing a field and degrees for an evasive set.

Run with:  python demos/01_parameters.py
"""
from math import gcd

from evasive import gen_field_plan, gen_params

# The intersection bound is d_1^k, so we want small degrees. Degrees must be
# coprime to p - 1 for the encoding to work, so the prime is picked from the
# progression p = 2 mod K, where K is a product of small odd primes.
for k in range(1, 7):
    plan = gen_field_plan(k, 100)
    print(f"k={k}: K={plan.K:4d}  p={plan.p:6d}  degrees={plan.special_degrees}")

# A full instance: 2-dimensional subspaces, blocks of length 4, ambient F^8.
params = gen_params(k=2, m=4, n=8)
print()
print(params.dumps())
print("eps =", params.eps, " message length =", params.message_length)
print("coprime to p-1:", [d for d in params.degrees if gcd(d, params.p - 1) == 1])
print("bound on |S ∩ H| for dim H = 2:", params.bound())
