"""Number-theoretic primitives: primality, Jacobi symbols, Bernoulli numbers,
factorial variants, and reduction of rationals into residue rings."""

from __future__ import annotations

import math

from .errors import DomainError, NonInvertibleError
from .rings import ModInt, Rat

factorial = math.factorial
binomial = math.comb


def is_prime(n: int) -> bool:
    """Deterministic primality by trial division (desk-scale inputs)."""
    if n < 1:
        raise DomainError(f"is_prime expects n >= 1, got {n}")
    if n < 4:
        return n > 1
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def primes_upto(limit: int) -> list[int]:
    return [n for n in range(2, limit + 1) if is_prime(n)]


def odd_primes_upto(limit: int) -> list[int]:
    return [p for p in primes_upto(limit) if p % 2]


def prime_factors(n: int) -> list[int]:
    """Distinct prime divisors of n >= 1, ascending."""
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1 if f == 2 else 2
    if n > 1:
        out.append(n)
    return out


def divisors(n: int) -> list[int]:
    small, large = [], []
    f = 1
    while f * f <= n:
        if n % f == 0:
            small.append(f)
            if f != n // f:
                large.append(n // f)
        f += 1
    return small + large[::-1]


def jacobi(a: int, n: int) -> int:
    """Jacobi symbol (a/n) for odd n >= 1."""
    if n <= 0 or n % 2 == 0:
        raise DomainError(f"Jacobi symbol needs positive odd n, got {n}")
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def double_factorial(n: int) -> int:
    """n!! with the conventions 0!! = (-1)!! = 1."""
    if n < -1:
        raise DomainError(f"double factorial needs n >= -1, got {n}")
    out = 1
    while n > 1:
        out *= n
        n -= 2
    return out


_bernoulli_cache: list = [Rat(1)]


def bernoulli(k: int) -> Rat:
    """Bernoulli number B_k, convention B_1 = -1/2.

    Computed from sum_{j=0}^{k} C(k+1, j) B_j = 0.
    """
    if k < 0:
        raise DomainError(f"bernoulli needs k >= 0, got {k}")
    while len(_bernoulli_cache) <= k:
        m = len(_bernoulli_cache)
        acc = Rat(0)
        for j in range(m):
            acc += binomial(m + 1, j) * _bernoulli_cache[j]
        _bernoulli_cache.append(-acc / (m + 1))
    return _bernoulli_cache[k]


def inv_mod(a: int, m: int) -> int:
    g = math.gcd(a, m)
    if g != 1:
        raise NonInvertibleError(f"{a} is not invertible mod {m}")
    return pow(a, -1, m)


def mod_reduce_rat(r, m: int) -> ModInt:
    """Image of a rational (or integer) in Z/m; denominator must be a unit."""
    if isinstance(r, int):
        return ModInt(r, m)
    num, den = r.numerator, r.denominator
    if math.gcd(den, m) != 1:
        raise NonInvertibleError(f"denominator {den} shares a factor with {m}")
    return ModInt(int(num) * inv_mod(int(den), m), m)
