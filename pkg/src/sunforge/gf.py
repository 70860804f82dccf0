"""Finite field arithmetic GF(p^m) on a polynomial basis.

Elements are encoded as integers in [0, q): the base-p digits of the code,
least significant first, are the coefficients of the representing polynomial.
The canonical element order is therefore plain integer order, which lists the
p constants first.  Extension moduli come from a fixed shipped table
(GF(2^m) for m <= 16 and GF(p^2) for odd p <= 13); every modulus is
re-verified irreducible at construction by trial division.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

# smallest monic irreducible polynomial per (p, m); coefficients low to high
IRREDUCIBLE_TABLE: dict[tuple[int, int], tuple[int, ...]] = {
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (2, 5): (1, 0, 1, 0, 0, 1),
    (2, 6): (1, 1, 0, 0, 0, 0, 1),
    (2, 7): (1, 1, 0, 0, 0, 0, 0, 1),
    (2, 8): (1, 1, 0, 1, 1, 0, 0, 0, 1),
    (2, 9): (1, 1, 0, 0, 0, 0, 0, 0, 0, 1),
    (2, 10): (1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1),
    (2, 11): (1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (2, 12): (1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (2, 13): (1, 1, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (2, 14): (1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (2, 15): (1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (2, 16): (1, 1, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (3, 2): (1, 0, 1),
    (5, 2): (2, 0, 1),
    (7, 2): (1, 0, 1),
    (11, 2): (1, 0, 1),
    (13, 2): (2, 0, 1),
}


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


def _poly_remainder(num: Sequence[int], den: Sequence[int], p: int) -> list[int]:
    """Remainder of num by monic-normalizable den, coefficients mod p."""
    num = list(num)
    dd = len(den) - 1
    inv_lead = pow(den[-1], p - 2, p)
    while True:
        while num and num[-1] == 0:
            num.pop()
        if len(num) - 1 < dd:
            return num
        shift = len(num) - 1 - dd
        lead = num[-1] * inv_lead % p
        for i, c in enumerate(den):
            num[shift + i] = (num[shift + i] - lead * c) % p


def is_irreducible(coeffs: Sequence[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree <= m/2."""
    m = len(coeffs) - 1
    if m < 1 or coeffs[-1] % p == 0:
        return False
    for d in range(1, m // 2 + 1):
        for idx in range(p**d):
            den = []
            t = idx
            for _ in range(d):
                den.append(t % p)
                t //= p
            den.append(1)
            if not _poly_remainder(coeffs, den, p):
                return False
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Characteristic, extension degree, and modulus of a finite field."""

    p: int
    m: int
    modulus: tuple[int, ...]  # length m+1, low to high, monic

    def __post_init__(self) -> None:
        if not is_prime(self.p):
            raise ValueError(f"characteristic {self.p} is not prime")
        if self.m < 1:
            raise ValueError(f"degree {self.m} must be >= 1")
        if len(self.modulus) != self.m + 1 or self.modulus[-1] % self.p != 1:
            raise ValueError("modulus must be monic of degree m")
        if any(not 0 <= c < self.p for c in self.modulus):
            raise ValueError("modulus coefficients must be reduced mod p")
        if self.m > 1 and not is_irreducible(self.modulus, self.p):
            raise ValueError(f"modulus {self.modulus} is reducible over GF({self.p})")

    @property
    def q(self) -> int:
        return self.p**self.m


class Field:
    """Arithmetic for GF(p^m); elements are ints in [0, q)."""

    def __init__(self, spec: FieldSpec):
        self.spec = spec
        self.p = spec.p
        self.m = spec.m
        self.q = spec.q

    @classmethod
    def of_order(cls, q: int) -> "Field":
        """Field of the given prime-power order, modulus from the table."""
        p, m = _factor_prime_power(q)
        if m == 1:
            return cls(FieldSpec(p, 1, (0, 1)))
        key = (p, m)
        if key not in IRREDUCIBLE_TABLE:
            raise ValueError(
                f"no shipped modulus for GF({p}^{m}); supported extensions: "
                "GF(2^m) m<=16 and GF(p^2) p<=13"
            )
        return cls(FieldSpec(p, m, IRREDUCIBLE_TABLE[key]))

    # -- element codecs ------------------------------------------------

    def coeffs(self, a: int) -> tuple[int, ...]:
        """Coefficient vector of an element, constant term first."""
        self._check(a)
        out = []
        for _ in range(self.m):
            out.append(a % self.p)
            a //= self.p
        return tuple(out)

    def element(self, coeffs: Sequence[int]) -> int:
        if len(coeffs) > self.m:
            raise ValueError(f"too many coefficients for degree {self.m}")
        a = 0
        for c in reversed(coeffs):
            if not 0 <= c < self.p:
                raise ValueError(f"coefficient {c} not reduced mod {self.p}")
            a = a * self.p + c
        return a

    def elements(self):
        """All field elements in canonical order (constants first)."""
        return range(self.q)

    def _check(self, a: int) -> None:
        if not 0 <= a < self.q:
            raise ValueError(f"element {a} outside [0, {self.q})")

    # -- arithmetic ----------------------------------------------------

    def add(self, a: int, b: int) -> int:
        self._check(a)
        self._check(b)
        if self.m == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        out = 0
        mul = 1
        for _ in range(self.m):
            out += (a % self.p + b % self.p) % self.p * mul
            a //= self.p
            b //= self.p
            mul *= self.p
        return out

    def neg(self, a: int) -> int:
        self._check(a)
        if self.m == 1:
            return (-a) % self.p
        if self.p == 2:
            return a
        out = 0
        mul = 1
        for _ in range(self.m):
            out += (-(a % self.p)) % self.p * mul
            a //= self.p
            mul *= self.p
        return out

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        self._check(a)
        self._check(b)
        if self.m == 1:
            return a * b % self.p
        ca, cb = self.coeffs(a), self.coeffs(b)
        prod = [0] * (2 * self.m - 1)
        for i, x in enumerate(ca):
            if x:
                for j, y in enumerate(cb):
                    prod[i + j] = (prod[i + j] + x * y) % self.p
        rem = _poly_remainder(prod, self.spec.modulus, self.p)
        rem += [0] * (self.m - len(rem))
        return self.element(rem)

    def inv(self, a: int) -> int:
        self._check(a)
        if a == 0:
            raise ZeroDivisionError("inverse of the zero element")
        if self.m == 1:
            return pow(a, self.p - 2, self.p)
        return self.pow(a, self.q - 2)

    def pow(self, a: int, e: int) -> int:
        self._check(a)
        if e < 0:
            return self.pow(self.inv(a), -e)
        out = 1 if self.m == 1 else self.element([1])
        base = a
        while e:
            if e & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            e >>= 1
        return out

    def eval_poly(self, coeffs: Sequence[int], point: int) -> int:
        """Evaluate sum coeffs[i] * point^i by Horner's rule."""
        acc = 0
        for c in reversed(coeffs):
            acc = self.add(self.mul(acc, point), c)
        return acc


def _factor_prime_power(q: int) -> tuple[int, int]:
    if q < 2:
        raise ValueError(f"order {q} is not a prime power")
    for p in range(2, q + 1):
        if q % p == 0:
            m = 0
            t = q
            while t % p == 0:
                t //= p
                m += 1
            if t != 1:
                raise ValueError(f"order {q} is not a prime power")
            return p, m
    raise ValueError(f"order {q} is not a prime power")


def field_ops(spec: FieldSpec) -> Field:
    """Bundle of field operations (add, mul, neg, inv, eval_poly)."""
    return Field(spec)
