"""Exact scalar arithmetic: rationals, residue rings, Laurent polynomials in q.

Every scalar is an immutable Python object supporting +, -, * (and, where it
exists, exact inversion).  A small ring-tag object describes the structure a
matrix lives over, so the permanent/determinant engines stay generic: the
same code path serves Z, Q, Z/m, F_p, Q(zeta_m) and Laurent polynomials.
"""

from __future__ import annotations

import math
from typing import Any

from .errors import DomainError, NonInvertibleError, UnsupportedRingError

try:
    from gmpy2 import mpq as Rat
except ImportError:  # pragma: no cover - gmpy2 is a declared dependency
    from fractions import Fraction as Rat


def rat(num, den=1) -> Rat:
    """Exact rational num/den in lowest terms."""
    return Rat(num, den)


def is_integral(x) -> bool:
    """True for ints and rationals with denominator 1."""
    if isinstance(x, int):
        return True
    return x.denominator == 1


def scalar_str(x) -> str:
    """Canonical decimal or num/den string for an exact scalar."""
    return str(x)


# ---------------------------------------------------------------------------
# Residue rings Z/m
# ---------------------------------------------------------------------------

class ModInt:
    """Least nonnegative residue modulo a fixed integer m >= 2.

    Arithmetic between two ModInt values requires equal moduli; plain ints
    mix freely (they are reduced first).
    """

    __slots__ = ("value", "modulus")

    def __init__(self, value: int, modulus: int):
        if modulus < 2:
            raise DomainError(f"modulus must be >= 2, got {modulus}")
        self.value = value % modulus
        self.modulus = modulus

    def _coerce(self, other) -> "ModInt":
        if isinstance(other, ModInt):
            if other.modulus != self.modulus:
                raise DomainError(
                    f"modulus mismatch: {self.modulus} vs {other.modulus}")
            return other
        if isinstance(other, int):
            return ModInt(other, self.modulus)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return ModInt(self.value + o.value, self.modulus)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return ModInt(self.value - o.value, self.modulus)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return ModInt(o.value - self.value, self.modulus)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return ModInt(self.value * o.value, self.modulus)

    __rmul__ = __mul__

    def __neg__(self):
        return ModInt(-self.value, self.modulus)

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        return ModInt(pow(self.value, e, self.modulus), self.modulus)

    def inverse(self) -> "ModInt":
        g = math.gcd(self.value, self.modulus)
        if g != 1:
            raise NonInvertibleError(
                f"{self.value} is not invertible mod {self.modulus}")
        return ModInt(pow(self.value, -1, self.modulus), self.modulus)

    def __eq__(self, other):
        if isinstance(other, ModInt):
            return self.modulus == other.modulus and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.modulus
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.modulus))

    def __str__(self):
        return f"{self.value} (mod {self.modulus})"

    def __repr__(self):
        return f"ModInt({self.value}, {self.modulus})"


# ---------------------------------------------------------------------------
# Laurent polynomials in q over Q
# ---------------------------------------------------------------------------

class LPoly:
    """Laurent polynomial in q with exact rational coefficients.

    Stored as {exponent: coefficient} with no zero coefficients; exponents
    may be negative.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        cleaned = {}
        if coeffs:
            for e, c in coeffs.items():
                if c != 0:
                    cleaned[int(e)] = c
        self.coeffs = cleaned

    @classmethod
    def const(cls, c) -> "LPoly":
        return cls({0: c})

    @classmethod
    def term(cls, c, e: int) -> "LPoly":
        return cls({e: c})

    @classmethod
    def q(cls) -> "LPoly":
        return cls({1: 1})

    def is_zero(self) -> bool:
        return not self.coeffs

    def _coerce(self, other):
        if isinstance(other, LPoly):
            return other
        if isinstance(other, (int, Rat)):
            return LPoly.const(other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        out = dict(self.coeffs)
        for e, c in o.coeffs.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        res = LPoly.__new__(LPoly)
        res.coeffs = out
        return res

    __radd__ = __add__

    def __neg__(self):
        res = LPoly.__new__(LPoly)
        res.coeffs = {e: -c for e, c in self.coeffs.items()}
        return res

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        out: dict[int, Any] = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in o.coeffs.items():
                e = e1 + e2
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        res = LPoly.__new__(LPoly)
        res.coeffs = out
        return res

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise DomainError("negative powers of a Laurent polynomial are not closed")
        result = LPoly.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        return hash(tuple(sorted(self.coeffs.items())))

    def at_one(self):
        """Value at q = 1 (the classical specialization)."""
        return sum(self.coeffs.values())

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for e in sorted(self.coeffs):
            c = self.coeffs[e]
            if e == 0:
                term = scalar_str(c)
            else:
                qp = "q" if e == 1 else f"q^{e}"
                if c == 1:
                    term = qp
                elif c == -1:
                    term = f"-{qp}"
                else:
                    term = f"{scalar_str(c)}*{qp}"
            parts.append(term)
        out = parts[0]
        for term in parts[1:]:
            out += f" - {term[1:]}" if term.startswith("-") else f" + {term}"
        return out

    def __repr__(self):
        return f"LPoly({self})"


def qint(m: int) -> LPoly:
    """q-analogue of the integer m: (1 - q^m)/(1 - q), exact for any sign of m.

    For m >= 0 this is 1 + q + ... + q^(m-1); for m < 0 it is
    -q^m - q^(m+1) - ... - q^(-1).
    """
    if m >= 0:
        return LPoly({e: 1 for e in range(m)})
    return LPoly({e: -1 for e in range(m, 0)})


# ---------------------------------------------------------------------------
# Ring tags
# ---------------------------------------------------------------------------

class Ring:
    """Commutative ring descriptor: identities plus optional inversion.

    Elements themselves carry the arithmetic via operators; the tag supplies
    zero/one, integer embedding, inversion where available, and random
    elements for law testing.
    """

    name = "ring"
    is_field = False

    @property
    def zero(self):
        raise NotImplementedError

    @property
    def one(self):
        raise NotImplementedError

    def from_int(self, k: int):
        raise NotImplementedError

    def inv(self, a):
        raise UnsupportedRingError(f"{self.name} has no exact division")

    def rand(self, rng, span: int = 10):
        raise NotImplementedError

    def __repr__(self):
        return f"<{self.name}>"


class IntegerRing(Ring):
    name = "Z"
    zero = 0
    one = 1

    def from_int(self, k: int):
        return k

    def rand(self, rng, span: int = 10):
        return rng.randint(-span, span)


class RationalField(Ring):
    name = "Q"
    is_field = True
    zero = Rat(0)
    one = Rat(1)

    def from_int(self, k: int):
        return Rat(k)

    def inv(self, a):
        if a == 0:
            raise NonInvertibleError("division by zero in Q")
        return 1 / Rat(a)

    def rand(self, rng, span: int = 10):
        return Rat(rng.randint(-span, span), rng.randint(1, span))


class ResidueRing(Ring):
    """Z/m with m >= 2; a field exactly when m is prime."""

    def __init__(self, m: int):
        if m < 2:
            raise DomainError(f"modulus must be >= 2, got {m}")
        self.m = m
        self.name = f"Z/{m}"
        self._zero = ModInt(0, m)
        self._one = ModInt(1, m)
        from .ntheory import is_prime
        self.is_field = is_prime(m)

    @property
    def zero(self):
        return self._zero

    @property
    def one(self):
        return self._one

    def from_int(self, k: int):
        return ModInt(k, self.m)

    def inv(self, a):
        if not self.is_field:
            g = math.gcd(a.value, self.m)
            if g != 1:
                raise NonInvertibleError(f"{a.value} not invertible mod {self.m}")
        return a.inverse()

    def rand(self, rng, span: int = 10):
        return ModInt(rng.randrange(self.m), self.m)

    def __eq__(self, other):
        return isinstance(other, ResidueRing) and other.m == self.m

    def __hash__(self):
        return hash(("ResidueRing", self.m))


def Zmod(m: int) -> ResidueRing:
    return ResidueRing(m)


def GF(p: int) -> ResidueRing:
    ring = ResidueRing(p)
    if not ring.is_field:
        raise DomainError(f"{p} is not prime")
    return ring


class LaurentRing(Ring):
    name = "Q[q,q^-1]"
    zero = LPoly()
    one = LPoly.const(1)

    def from_int(self, k: int):
        return LPoly.const(k)

    def rand(self, rng, span: int = 10):
        n_terms = rng.randint(0, 3)
        return LPoly({rng.randint(-3, 3): rng.randint(-span, span)
                      for _ in range(n_terms)})


ZZ = IntegerRing()
QQ = RationalField()
QPOLY = LaurentRing()
