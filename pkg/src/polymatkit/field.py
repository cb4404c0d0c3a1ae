"""Word-sized prime field arithmetic.

The default prime 2013265921 = 15 * 2**27 + 1 is NTT-friendly: it supports
evaluation/interpolation grids of length up to 2**27 while keeping all
products of canonical representatives inside 64-bit words.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from sympy import factorint, isprime

from .errors import UnsupportedOrder, ZeroInverse

DEFAULT_PRIME = 2013265921


class PrimeField:
    """The field Z/pZ for a word-sized prime p.

    Elements are represented by their canonical residues in [0, p). The
    field caches its two-adicity (largest k with 2**k | p-1) and a fixed
    primitive root, which together provide roots of unity for NTT grids.
    """

    def __init__(self, p: int = DEFAULT_PRIME):
        if not isprime(p):
            raise ValueError(f"modulus {p} is not prime")
        self.p = int(p)
        k, q = 0, self.p - 1
        while q % 2 == 0:
            q //= 2
            k += 1
        self.two_adicity = k
        self.generator = self._find_generator()

    def _find_generator(self) -> int:
        if self.p == 2:
            return 1
        prime_divisors = list(factorint(self.p - 1))
        for g in range(2, self.p):
            if all(pow(g, (self.p - 1) // q, self.p) != 1 for q in prime_divisors):
                return g
        raise AssertionError("no primitive root found (p not prime?)")

    def __eq__(self, other):
        return isinstance(other, PrimeField) and self.p == other.p

    def __hash__(self):
        return hash(("PrimeField", self.p))

    def __repr__(self):
        return f"PrimeField({self.p})"

    # -- arithmetic on canonical residues --

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.p

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.p

    def mul(self, a: int, b: int) -> int:
        return (a * b) % self.p

    def neg(self, a: int) -> int:
        return (-a) % self.p

    def inv(self, a: int) -> int:
        a %= self.p
        if a == 0:
            raise ZeroInverse("0 has no multiplicative inverse")
        return pow(a, -1, self.p)

    def pow(self, a: int, e: int) -> int:
        return pow(a, e, self.p)

    def element(self, value: int) -> "FieldElement":
        return FieldElement(value % self.p, self)

    def root_of_unity(self, order: int) -> "FieldElement":
        """A primitive root of unity of the given power-of-two order."""
        if order < 1 or order & (order - 1) != 0:
            raise UnsupportedOrder(f"order {order} is not a power of two")
        log = order.bit_length() - 1
        if log > self.two_adicity:
            raise UnsupportedOrder(
                f"order {order} exceeds 2**{self.two_adicity} supported by p={self.p}"
            )
        w = pow(self.generator, (self.p - 1) >> log, self.p)
        return FieldElement(w, self)


@dataclass(frozen=True)
class FieldElement:
    """A canonical residue in [0, p), tied to its field."""

    value: int
    field: PrimeField

    def __post_init__(self):
        object.__setattr__(self, "value", self.value % self.field.p)

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise ValueError("field mismatch")
            return other.value
        return int(other) % self.field.p

    def __add__(self, other):
        return FieldElement(self.value + self._coerce(other), self.field)

    __radd__ = __add__

    def __sub__(self, other):
        return FieldElement(self.value - self._coerce(other), self.field)

    def __rsub__(self, other):
        return FieldElement(self._coerce(other) - self.value, self.field)

    def __mul__(self, other):
        return FieldElement(self.value * self._coerce(other), self.field)

    __rmul__ = __mul__

    def __neg__(self):
        return FieldElement(-self.value, self.field)

    def __pow__(self, e: int):
        return FieldElement(pow(self.value, e, self.field.p), self.field)

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.field.p
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.field.p))

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"{self.value} (mod {self.field.p})"

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field.inv(self.value), self.field)


def ff_inv(a: FieldElement) -> FieldElement:
    """Multiplicative inverse; raises ZeroInverse on a = 0."""
    return a.inverse()


def root_of_unity(field: PrimeField, order: int) -> FieldElement:
    """Primitive root of unity of power-of-two ``order`` in ``field``."""
    return field.root_of_unity(order)


@lru_cache(maxsize=None)
def default_field() -> PrimeField:
    return PrimeField(DEFAULT_PRIME)


@lru_cache(maxsize=32)
def get_field(p: int) -> PrimeField:
    """Cached field constructor (generator search is not free)."""
    return PrimeField(p)
