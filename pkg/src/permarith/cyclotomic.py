"""Exact arithmetic in cyclotomic fields Q(zeta_m).

Elements are stored as length-m coefficient vectors on the exponent lattice
(reduced mod x^m - 1), so products of root-of-unity monomials are cyclic
convolutions: cheap inside permanent loops.  Canonicalization modulo the
m-th cyclotomic polynomial happens only for equality, rational recognition
and inversion.

Square roots of integers never become floats here: for odd n the quadratic
Gauss sum g = sum_x zeta^(x^2) satisfies g^2 = (-1)^((n-1)/2) n, and
(-1)^floor(n/4) * g is the exact field element playing the role of
i^((n-1)/2) * sqrt(n).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .errors import (DomainError, NonInvertibleError, SearchExhaustedError)
from .ntheory import divisors, is_prime, prime_factors
from .rings import ModInt, Rat, Ring, ResidueRing, scalar_str

# ---------------------------------------------------------------------------
# Cyclotomic polynomials
# ---------------------------------------------------------------------------

_phi_cache: dict[int, tuple[int, ...]] = {}


def _poly_div_exact_int(num: list[int], den: list[int]) -> list[int]:
    # Exact division of integer polynomials, den monic; ascending coefficients.
    num = num[:]
    dd = len(den) - 1
    out = [0] * (len(num) - dd)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        if c:
            out[i - dd] = c
            for t in range(dd + 1):
                num[i - dd + t] -= c * den[t]
    if any(num):
        raise ArithmeticError("non-exact polynomial division")
    return out


def cyclotomic_poly(m: int) -> tuple[int, ...]:
    """Coefficients (ascending) of the m-th cyclotomic polynomial."""
    if m < 1:
        raise DomainError(f"cyclotomic order must be >= 1, got {m}")
    cached = _phi_cache.get(m)
    if cached is not None:
        return cached
    poly = [-1] + [0] * (m - 1) + [1]  # x^m - 1
    for d in divisors(m):
        if d != m:
            poly = _poly_div_exact_int(poly, list(cyclotomic_poly(d)))
    result = tuple(poly)
    _phi_cache[m] = result
    return result


def euler_phi(m: int) -> int:
    return len(cyclotomic_poly(m)) - 1


def prime_cyclotomic_cache(m: int) -> None:
    """Populate the cyclotomic-polynomial cache before parallel sections."""
    cyclotomic_poly(m)


# ---------------------------------------------------------------------------
# Field elements
# ---------------------------------------------------------------------------

def _demote(c):
    # Integral rationals become plain ints so hot loops stay in int arithmetic.
    if isinstance(c, int):
        return c
    if c.denominator == 1:
        return int(c)
    return c


class Cyc:
    """Element of Q(zeta_m), as sum of c_e * zeta^e for e = 0..m-1."""

    __slots__ = ("order", "coeffs", "_canon")

    def __init__(self, order: int, coeffs):
        if order < 1:
            raise DomainError(f"order must be >= 1, got {order}")
        coeffs = list(coeffs)
        if len(coeffs) != order:
            raise DomainError(f"need {order} coefficients, got {len(coeffs)}")
        self.order = order
        self.coeffs = coeffs
        self._canon = None

    @classmethod
    def rational(cls, order: int, value) -> "Cyc":
        coeffs = [0] * order
        coeffs[0] = _demote(value) if not isinstance(value, int) else value
        return cls(order, coeffs)

    @classmethod
    def zeta(cls, order: int, e: int = 1) -> "Cyc":
        coeffs = [0] * order
        coeffs[e % order] = 1
        return cls(order, coeffs)

    # -- ring operations ---------------------------------------------------

    def _check(self, other: "Cyc"):
        if other.order != self.order:
            raise DomainError(
                f"cyclotomic order mismatch: {self.order} vs {other.order}")

    def __add__(self, other):
        if isinstance(other, Cyc):
            self._check(other)
            a, b = self.coeffs, other.coeffs
            return Cyc(self.order, [x + y for x, y in zip(a, b)])
        if isinstance(other, (int, Rat)):
            out = self.coeffs[:]
            out[0] = out[0] + other
            return Cyc(self.order, out)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return Cyc(self.order, [-c for c in self.coeffs])

    def __sub__(self, other):
        if isinstance(other, Cyc):
            self._check(other)
            return Cyc(self.order,
                       [x - y for x, y in zip(self.coeffs, other.coeffs)])
        if isinstance(other, (int, Rat)):
            out = self.coeffs[:]
            out[0] = out[0] - other
            return Cyc(self.order, out)
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Cyc):
            self._check(other)
            m = self.order
            a, b = self.coeffs, other.coeffs
            # outer loop over the sparser operand
            na = sum(1 for c in a if c)
            nb = sum(1 for c in b if c)
            if nb < na:
                a, b = b, a
            out = [0] * m
            for i in range(m):
                ai = a[i]
                if ai:
                    for j in range(m):
                        bj = b[j]
                        if bj:
                            k = i + j
                            if k >= m:
                                k -= m
                            out[k] += ai * bj
            return Cyc(m, out)
        if isinstance(other, (int, Rat)):
            if other == 0:
                return Cyc(self.order, [0] * self.order)
            return Cyc(self.order, [c * other for c in self.coeffs])
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = Cyc.rational(self.order, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- canonical form ------------------------------------------------------

    def canonical(self) -> tuple:
        """Remainder modulo the m-th cyclotomic polynomial, degree < phi(m)."""
        if self._canon is None:
            phi = cyclotomic_poly(self.order)
            deg = len(phi) - 1
            rem = list(self.coeffs)
            for i in range(len(rem) - 1, deg - 1, -1):
                c = rem[i]
                if c:
                    rem[i] = 0
                    base = i - deg
                    for t in range(deg):
                        pt = phi[t]
                        if pt:
                            rem[base + t] -= c * pt
            self._canon = tuple(_demote(c) for c in rem[:deg])
        return self._canon

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.canonical())

    def __eq__(self, other):
        if isinstance(other, Cyc):
            if other.order != self.order:
                return False
            return self.canonical() == other.canonical()
        if isinstance(other, (int, Rat)):
            can = self.canonical()
            return can[0] == other and all(c == 0 for c in can[1:])
        return NotImplemented

    __hash__ = None

    def as_rational(self):
        """The value as a Rat if the canonical form has degree 0, else None."""
        can = self.canonical()
        if any(c != 0 for c in can[1:]):
            return None
        return Rat(can[0])

    def demoted(self) -> "Cyc":
        """Copy with integral rational coefficients demoted to ints."""
        return Cyc(self.order, [_demote(c) for c in self.coeffs])

    def inverse(self) -> "Cyc":
        """Multiplicative inverse, by extended gcd with the cyclotomic polynomial."""
        can = self.canonical()
        if all(c == 0 for c in can):
            raise NonInvertibleError("inverse of zero in a cyclotomic field")
        phi = [Rat(c) for c in cyclotomic_poly(self.order)]
        a = [Rat(c) for c in can]
        g, u = _poly_xgcd(a, phi)
        # g is a nonzero constant since the cyclotomic polynomial is irreducible
        scale = 1 / g[0]
        coeffs = [0] * self.order
        for i, c in enumerate(u):
            if c:
                coeffs[i] = _demote(c * scale)
        return Cyc(self.order, coeffs)

    def galois(self, a: int) -> "Cyc":
        """Field automorphism zeta -> zeta^a; requires gcd(a, m) = 1."""
        m = self.order
        if math.gcd(a, m) != 1:
            raise DomainError(f"gcd({a}, {m}) != 1: not a Galois automorphism")
        out = [0] * m
        for e, c in enumerate(self.coeffs):
            if c:
                out[(a * e) % m] = c
        return Cyc(m, out)

    def embed(self) -> complex:
        """Float approximation at zeta = exp(2*pi*i/m); diagnostics only."""
        m = self.order
        total = 0j
        for e, c in enumerate(self.coeffs):
            if c:
                total += float(c) * cmath.exp(2j * cmath.pi * e / m)
        return total

    def __str__(self):
        can = self.canonical()
        parts = []
        for e, c in enumerate(can):
            if c == 0:
                continue
            if e == 0:
                parts.append(scalar_str(c))
            else:
                zp = "z" if e == 1 else f"z^{e}"
                if c == 1:
                    parts.append(zp)
                elif c == -1:
                    parts.append(f"-{zp}")
                else:
                    parts.append(f"{scalar_str(c)}*{zp}")
        if not parts:
            return "0"
        out = parts[0]
        for term in parts[1:]:
            out += f" - {term[1:]}" if term.startswith("-") else f" + {term}"
        return out

    def __repr__(self):
        return f"Cyc({self.order}; {self})"


def _poly_trim(p: list) -> list:
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_sub(a: list, b: list) -> list:
    out = list(a) + [Rat(0)] * (len(b) - len(a))
    for i, c in enumerate(b):
        out[i] -= c
    return _poly_trim(out)


def _poly_mul(a: list, b: list) -> list:
    if not a or not b:
        return []
    out = [Rat(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _poly_trim(out)


def _poly_divmod(num: list, den: list) -> tuple[list, list]:
    num = list(num)
    q = [Rat(0)] * max(0, len(num) - len(den) + 1)
    inv_lead = 1 / den[-1]
    for i in range(len(num) - 1, len(den) - 2, -1):
        c = num[i] * inv_lead
        if c:
            q[i - len(den) + 1] = c
            for t in range(len(den)):
                num[i - len(den) + 1 + t] -= c * den[t]
    return _poly_trim(q), _poly_trim(num)


def _poly_xgcd(a: list, b: list) -> tuple[list, list]:
    """(g, u) with u*a = g modulo b, by the extended Euclidean algorithm."""
    r0, r1 = list(a), list(b)
    u0, u1 = [Rat(1)], []
    while r1:
        q, r = _poly_divmod(r0, r1)
        r0, r1 = r1, r
        u0, u1 = u1, _poly_sub(u0, _poly_mul(q, u1))
    return r0, u0


# ---------------------------------------------------------------------------
# Named constructions
# ---------------------------------------------------------------------------

def zeta_pow(m: int, e: int) -> Cyc:
    """zeta_m^e with the exponent reduced mod m."""
    return Cyc.zeta(m, e)


def gauss_sum(m: int) -> Cyc:
    """Quadratic Gauss sum sum_{x=0}^{m-1} zeta^(x^2) for odd m >= 3.

    Its square is (-1)^((m-1)/2) * m.
    """
    if m < 3 or m % 2 == 0:
        raise DomainError(f"Gauss sum needs odd m >= 3, got {m}")
    coeffs = [0] * m
    for x in range(m):
        coeffs[(x * x) % m] += 1
    return Cyc(m, coeffs)


def sqrt_element(n: int) -> Cyc:
    """The element of Q(zeta_n) equal to i^((n-1)/2) * sqrt(n), for odd n >= 3.

    Realized as (-1)^floor(n/4) times the quadratic Gauss sum; its square is
    (-1)^((n-1)/2) * n, which is how division by sqrt(n) is carried out
    exactly.
    """
    g = gauss_sum(n)
    return -g if (n // 4) % 2 else g


def as_rational(z: Cyc):
    return z.as_rational()


def embed_complex(z: Cyc) -> complex:
    return z.embed()


def galois(z: Cyc, a: int) -> Cyc:
    return z.galois(a)


def inverse(z: Cyc) -> Cyc:
    return z.inverse()


# ---------------------------------------------------------------------------
# Ring tag
# ---------------------------------------------------------------------------

class CyclotomicField(Ring):
    """Q(zeta_m) as a ring tag for the generic matrix engines."""

    is_field = True

    def __init__(self, m: int):
        if m < 1:
            raise DomainError(f"order must be >= 1, got {m}")
        self.m = m
        self.name = f"Q(zeta_{m})"
        prime_cyclotomic_cache(m)
        self._zero = Cyc.rational(m, 0)
        self._one = Cyc.rational(m, 1)

    @property
    def zero(self):
        return self._zero

    @property
    def one(self):
        return self._one

    def from_int(self, k: int):
        return Cyc.rational(self.m, k)

    def inv(self, a: Cyc) -> Cyc:
        return a.inverse()

    def zeta(self, e: int = 1) -> Cyc:
        return Cyc.zeta(self.m, e)

    def rand(self, rng, span: int = 10):
        coeffs = [0] * self.m
        for _ in range(rng.randint(1, 3)):
            coeffs[rng.randrange(self.m)] += rng.randint(-span, span)
        return Cyc(self.m, coeffs)

    def __eq__(self, other):
        return isinstance(other, CyclotomicField) and other.m == self.m

    def __hash__(self):
        return hash(("CyclotomicField", self.m))


# ---------------------------------------------------------------------------
# Finite-field roots of unity
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FqRoot:
    """An element of exact multiplicative order n in F_p (needs p = 1 mod n)."""

    prime: int
    element: int
    order: int

    def zeta_pow(self, e: int) -> ModInt:
        return ModInt(pow(self.element, e % self.order, self.prime), self.prime)

    def ring(self) -> ResidueRing:
        return ResidueRing(self.prime)


def find_fq_root(n: int, bound: int = 200_000) -> FqRoot:
    """Smallest prime p = 1 (mod n) under the bound, with an order-n element.

    Candidate generators are scanned in increasing order, so the result is
    deterministic.
    """
    if n < 1:
        raise DomainError(f"order must be >= 1, got {n}")
    if n == 1:
        return FqRoot(2, 1, 1)
    cofactors = [n // ell for ell in prime_factors(n)]
    p = n + 1
    while p <= bound:
        if is_prime(p):
            for g in range(2, p):
                c = pow(g, (p - 1) // n, p)
                if c != 1 and all(pow(c, co, p) != 1 for co in cofactors):
                    return FqRoot(p, c, n)
        p += n
    raise SearchExhaustedError(f"no prime p = 1 (mod {n}) below {bound}")
