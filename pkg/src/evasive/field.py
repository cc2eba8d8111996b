"""Prime field arithmetic.

Elements are handled as plain ``int`` residues by :class:`PrimeField`, which is
what the rest of the package uses internally. :class:`FieldElement` wraps a
residue together with its field for callers that want operator syntax.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import FieldMismatchError, ParameterError, SingularMatrixError

# Deterministic Miller-Rabin: these bases are sufficient for n < 3.3 * 10**24,
# which covers every 64-bit integer.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Exact primality test for 64-bit integers (deterministic Miller-Rabin)."""
    if n < 2:
        return False
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class PrimeField:
    """The field F_p. Immutable; equality is by modulus."""

    __slots__ = ("_p",)

    def __init__(self, p: int):
        p = int(p)
        if p >= 1 << 64:
            raise ParameterError(f"modulus {p} does not fit in 64 bits")
        if not is_prime(p):
            raise ParameterError(f"{p} is not prime")
        self._p = p

    @property
    def p(self) -> int:
        return self._p

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other._p == self._p

    def __hash__(self):
        return hash(("PrimeField", self._p))

    def __repr__(self):
        return f"PrimeField({self._p})"

    def __call__(self, value: int) -> "FieldElement":
        return FieldElement(int(value) % self._p, self)

    def reduce(self, a: int) -> int:
        return a % self._p

    def add(self, a: int, b: int) -> int:
        return (a + b) % self._p

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self._p

    def neg(self, a: int) -> int:
        return -a % self._p

    def mul(self, a: int, b: int) -> int:
        return a * b % self._p

    def inv(self, a: int) -> int:
        a %= self._p
        if a == 0:
            raise SingularMatrixError("inverse of zero")
        return pow(a, -1, self._p)

    def div(self, a: int, b: int) -> int:
        return a * self.inv(b) % self._p

    def pow(self, a: int, e: int) -> int:
        """a**e in F_p, with pow(0, 0) == 1."""
        if e < 0:
            raise ParameterError("negative exponent; use inv() first")
        return pow(a % self._p, e, self._p)

    def inverse_exponent(self, d: int) -> int:
        """e with d*e == 1 mod (p-1), so that x -> x**e undoes x -> x**d."""
        if d < 1 or gcd(d, self._p - 1) != 1:
            raise ParameterError(f"degree {d} is not coprime to p-1 = {self._p - 1}")
        if self._p == 2:
            return 1
        return pow(d, -1, self._p - 1)

    def root(self, a: int, d: int) -> int:
        """The unique d-th root of a; requires gcd(d, p-1) == 1."""
        return pow(a % self._p, self.inverse_exponent(d), self._p)

    def elements(self):
        return range(self._p)


@dataclass(frozen=True, slots=True)
class FieldElement:
    value: int
    field: PrimeField

    def __post_init__(self):
        if not 0 <= self.value < self.field.p:
            raise ParameterError(f"{self.value} is not a canonical residue mod {self.field.p}")

    def _other(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldMismatchError(f"cannot combine elements of {self.field} and {other.field}")
            return other.value
        if isinstance(other, int):
            return other % self.field.p
        return NotImplemented

    def _wrap(self, v: int) -> "FieldElement":
        return FieldElement(v, self.field)

    def __add__(self, other):
        b = self._other(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.field.add(self.value, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._other(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.field.sub(self.value, b))

    def __rsub__(self, other):
        b = self._other(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.field.sub(b, self.value))

    def __mul__(self, other):
        b = self._other(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.field.mul(self.value, b))

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._other(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.field.div(self.value, b))

    def __neg__(self):
        return self._wrap(self.field.neg(self.value))

    def __pow__(self, e: int):
        return self._wrap(self.field.pow(self.value, e))

    def inv(self) -> "FieldElement":
        return self._wrap(self.field.inv(self.value))

    def root(self, d: int) -> "FieldElement":
        return self._wrap(self.field.root(self.value, d))

    def __int__(self):
        return self.value

    def __str__(self):
        return str(self.value)
