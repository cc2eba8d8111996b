"""Black-box list-decoding filter.

A real folded Reed-Solomon decoder hands back a k-dimensional affine subspace
known to contain every close message. Here that decoder is replaced by an
oracle that plants the encoded message in a pseudo-random subspace; the filter
then intersects with S and decodes the survivors.

Randomness comes from ``random.Random`` (Mersenne Twister) seeded with an
integer, so every trial is reproducible bit for bit.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence, Union

from .errors import ParameterError
from .evasive import EvasiveSet
from .intersect import SolverKind, intersect_set
from .linalg import AffineSubspace, Vector, rank
from .params import EvasiveParams

Rational = Union[Fraction, int, str, float]


def oracle_subspace(s: EvasiveSet, x: Sequence[int], seed: int) -> AffineSubspace:
    """Random k-dimensional affine subspace of F^n through ``x``."""
    if not s.member_set(x):
        raise ParameterError("oracle point must lie in S")
    rng = random.Random(seed)
    p, n, k = s.field.p, s.n, s.params.k
    if k > n:
        raise ParameterError("k exceeds the ambient dimension")
    while True:
        dirs = [[rng.randrange(p) for _ in range(n)] for _ in range(k)]
        if rank(s.field, dirs) == k:
            break
    shift = [rng.randrange(p) for _ in range(k)]
    offset = list(x)
    for c, d in zip(shift, dirs):
        offset = [(a - c * b) % p for a, b in zip(offset, d)]
    return AffineSubspace(s.field, offset, dirs)


def composed_rate(rate: Rational, eps: Rational) -> Fraction:
    """Rate (1 - eps) * R of the code pre-composed with the evasive encoding."""
    r, e = Fraction(rate), Fraction(eps)
    if not 0 < r < 1:
        raise ParameterError(f"rate must be in (0, 1), got {r}")
    if not 0 < e < 1:
        raise ParameterError(f"eps must be in (0, 1), got {e}")
    out = (1 - e) * r
    if out < r - e:
        raise AssertionError("composed rate fell below R - eps")
    return out


@dataclass(frozen=True)
class SimConfig:
    params: EvasiveParams
    trials: int = 100
    seed: int = 0
    base_rate: Fraction = Fraction(1, 2)
    solver: SolverKind = SolverKind.EXHAUSTIVE

    def __post_init__(self):
        if self.trials < 1:
            raise ParameterError("trials must be at least 1")
        object.__setattr__(self, "base_rate", Fraction(self.base_rate))
        object.__setattr__(self, "solver", SolverKind(self.solver))


@dataclass(frozen=True)
class TrialResult:
    seed: int
    planted_message: Vector
    messages: tuple[Vector, ...]
    contained: bool

    @property
    def list_size(self) -> int:
        return len(self.messages)


def run_trial(cfg: SimConfig, msg: Sequence[int], seed: int, s: EvasiveSet | None = None,
              check: bool = True) -> TrialResult:
    """Encode, ask the oracle for a subspace, filter it through S, decode the list.

    With ``check`` the planted message must come back and the list must obey
    the d_1^k bound, otherwise AssertionError.
    """
    s = s or EvasiveSet(cfg.params)
    msg = tuple(int(v) % s.field.p for v in msg)
    x = s.encode(msg)
    h = oracle_subspace(s, x, seed)
    found = tuple(s.decode(y) for y in intersect_set(s, h, cfg.solver))
    res = TrialResult(seed, msg, found, msg in found)
    if check and not res.contained:
        raise AssertionError(f"planted message {msg} missing from the list (seed {seed})")
    if check and res.list_size > cfg.params.bound():
        raise AssertionError(f"list of size {res.list_size} exceeds {cfg.params.bound()}")
    return res


def simulate(cfg: SimConfig) -> Iterator[TrialResult]:
    s = EvasiveSet(cfg.params)
    rng = random.Random(cfg.seed)
    p = cfg.params.p
    for _ in range(cfg.trials):
        msg = tuple(rng.randrange(p) for _ in range(s.message_length))
        yield run_trial(cfg, msg, rng.getrandbits(32), s, check=False)


def summary_line(results: Sequence[TrialResult]) -> str:
    max_list = max((r.list_size for r in results), default=0)
    ok = all(r.contained for r in results)
    return f"trials={len(results)} max_list={max_list} all_contained={'true' if ok else 'false'}"
