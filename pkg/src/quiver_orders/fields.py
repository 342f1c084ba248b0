"""Exact coefficient fields: the rationals, F_p, and small F_{p^r}.

Every field exposes zero/one/add/sub/mul/neg/inv/from_int and an `order`
attribute (None for the rationals).  Elements are hashable: Fractions for the
rationals and plain ints for the finite fields.  Extension field elements are
integer codes 0..q-1 whose base-p digits are the coefficients of the residue
polynomial, with arithmetic from precomputed tables, so the prime subfield is
the set of codes 0..p-1 and from_int lands there.
"""

from __future__ import annotations

import functools
from fractions import Fraction


class Rationals:
    order = None
    char = 0

    zero = Fraction(0)
    one = Fraction(1)

    def from_int(self, n: int) -> Fraction:
        return Fraction(n)

    def add(self, a: Fraction, b: Fraction) -> Fraction:
        return a + b

    def sub(self, a: Fraction, b: Fraction) -> Fraction:
        return a - b

    def mul(self, a: Fraction, b: Fraction) -> Fraction:
        return a * b

    def neg(self, a: Fraction) -> Fraction:
        return -a

    def inv(self, a: Fraction) -> Fraction:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / a

    def spec(self) -> str:
        return "rationals"

    def __repr__(self) -> str:
        return "Q"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Rationals)

    def __hash__(self) -> int:
        return hash("rationals")


class PrimeField:
    def __init__(self, p: int):
        if p < 2 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.order = p
        self.char = p
        self.zero = 0
        self.one = 1 % p

    def from_int(self, n: int) -> int:
        return n % self.p

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.p

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.p

    def mul(self, a: int, b: int) -> int:
        return (a * b) % self.p

    def neg(self, a: int) -> int:
        return (-a) % self.p

    def inv(self, a: int) -> int:
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, self.p - 2, self.p)

    def elements(self) -> range:
        return range(self.p)

    def spec(self) -> str:
        return f"prime {self.p}"

    def __repr__(self) -> str:
        return f"F{self.p}"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self) -> int:
        return hash(("prime", self.p))


def _poly_mul_mod(a: tuple[int, ...], b: tuple[int, ...], modulus: tuple[int, ...], p: int) -> tuple[int, ...]:
    """Multiply coefficient tuples mod (modulus, p); modulus is monic."""
    r = len(modulus) - 1
    prod = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                prod[i + j] = (prod[i + j] + ca * cb) % p
    for d in range(len(prod) - 1, r - 1, -1):
        c = prod[d]
        if c:
            for k in range(r + 1):
                prod[d - r + k] = (prod[d - r + k] - c * modulus[k]) % p
    return tuple(prod[:r])


def _is_irreducible(poly: tuple[int, ...], p: int) -> bool:
    """Trial division by all monic polynomials of degree 1..deg//2."""
    deg = len(poly) - 1
    for d in range(1, deg // 2 + 1):
        for code in range(p**d):
            divisor = _decode(code, p, d) + (1,)
            if _poly_divides(divisor, poly, p):
                return False
    return True


def _poly_divides(d: tuple[int, ...], a: tuple[int, ...], p: int) -> bool:
    rem = list(a)
    dd = len(d) - 1
    while len(rem) - 1 >= dd and any(rem):
        while rem and rem[-1] == 0:
            rem.pop()
        if len(rem) - 1 < dd:
            break
        lead = rem[-1]
        shift = len(rem) - 1 - dd
        for k in range(dd + 1):
            rem[shift + k] = (rem[shift + k] - lead * d[k]) % p
    return not any(rem)


def _decode(code: int, p: int, length: int) -> tuple[int, ...]:
    digits = []
    for _ in range(length):
        digits.append(code % p)
        code //= p
    return tuple(digits)


def _encode(digits: tuple[int, ...], p: int) -> int:
    code = 0
    for d in reversed(digits):
        code = code * p + d
    return code


class ExtensionField:
    """F_{p^r} for small p^r, with table-driven arithmetic on codes 0..q-1."""

    def __init__(self, p: int, r: int):
        if r < 2:
            raise ValueError("use PrimeField for r = 1")
        PrimeField(p)  # validates primality
        self.p = p
        self.r = r
        self.order = p**r
        self.char = p
        self.zero = 0
        self.one = 1
        self.modulus = self._find_modulus()
        q = self.order
        decode = {c: _decode(c, p, r) for c in range(q)}
        self._add = [
            [
                _encode(tuple((x + y) % p for x, y in zip(decode[a], decode[b])), p)
                for b in range(q)
            ]
            for a in range(q)
        ]
        self._mul = [
            [
                _encode(_poly_mul_mod(decode[a], decode[b], self.modulus, p), p)
                for b in range(q)
            ]
            for a in range(q)
        ]
        self._neg = [_encode(tuple((-x) % p for x in decode[a]), p) for a in range(q)]
        self._inv = [0] * q
        for a in range(1, q):
            for b in range(1, q):
                if self._mul[a][b] == 1:
                    self._inv[a] = b
                    break

    def _find_modulus(self) -> tuple[int, ...]:
        # least monic irreducible of degree r, by code order
        for code in range(self.p**self.r):
            poly = _decode(code, self.p, self.r) + (1,)
            if _is_irreducible(poly, self.p):
                return poly
        raise RuntimeError("no irreducible polynomial found")

    def from_int(self, n: int) -> int:
        return n % self.p

    def add(self, a: int, b: int) -> int:
        return self._add[a][b]

    def sub(self, a: int, b: int) -> int:
        return self._add[a][self._neg[b]]

    def mul(self, a: int, b: int) -> int:
        return self._mul[a][b]

    def neg(self, a: int) -> int:
        return self._neg[a]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return self._inv[a]

    def elements(self) -> range:
        return range(self.order)

    def spec(self) -> str:
        return f"gf {self.p}^{self.r}"

    def __repr__(self) -> str:
        return f"F{self.order}"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, ExtensionField) and (other.p, other.r) == (self.p, self.r)

    def __hash__(self) -> int:
        return hash(("gf", self.p, self.r))


RATIONALS = Rationals()

Field = Rationals | PrimeField | ExtensionField


def factor_prime_power(q: int) -> tuple[int, int]:
    """Return (p, r) with q = p^r, or raise ValueError."""
    if q < 2:
        raise ValueError(f"{q} is not a prime power")
    for p in range(2, q + 1):
        if q % p == 0:
            r = 0
            m = q
            while m % p == 0:
                m //= p
                r += 1
            if m != 1:
                raise ValueError(f"{q} is not a prime power")
            return p, r
    raise ValueError(f"{q} is not a prime power")


@functools.cache
def galois_field(q: int) -> PrimeField | ExtensionField:
    """The field with q elements (q a prime power; tables cached)."""
    p, r = factor_prime_power(q)
    return PrimeField(p) if r == 1 else ExtensionField(p, r)


def field_from_spec(spec: str) -> Field:
    """Parse "rationals" or "prime p" (the serialization field tags)."""
    parts = spec.strip().split()
    if parts == ["rationals"]:
        return RATIONALS
    if len(parts) == 2 and parts[0] == "prime":
        return PrimeField(int(parts[1]))
    raise ValueError(f"unknown field spec: {spec!r}")
