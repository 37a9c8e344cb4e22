"""Cyclotomic arithmetic: canonical forms, Gauss sums, Galois action,
inversion, rational recognition, finite-field roots."""

import cmath
import math
import random

import pytest

from permarith.cyclotomic import (Cyc, CyclotomicField, cyclotomic_poly,
                                  embed_complex, euler_phi, find_fq_root,
                                  gauss_sum, sqrt_element, zeta_pow)
from permarith.errors import (DomainError, NonInvertibleError,
                              SearchExhaustedError)
from permarith.ntheory import jacobi
from permarith.rings import Rat


def test_cyclotomic_poly_known():
    assert cyclotomic_poly(1) == (-1, 1)
    assert cyclotomic_poly(2) == (1, 1)
    assert cyclotomic_poly(6) == (1, -1, 1)
    assert cyclotomic_poly(12) == (1, 0, -1, 0, 1)


def test_cyclotomic_poly_product_over_divisors():
    # prod_{d | m} Phi_d = x^m - 1, and deg Phi_m = phi(m)
    for m in range(1, 31):
        prod = [1]
        for d in range(1, m + 1):
            if m % d == 0:
                phi = cyclotomic_poly(d)
                out = [0] * (len(prod) + len(phi) - 1)
                for i, a in enumerate(prod):
                    for j, b in enumerate(phi):
                        out[i + j] += a * b
                prod = out
        want = [-1] + [0] * (m - 1) + [1]
        assert prod == want, m
        totient = sum(1 for k in range(1, m + 1) if math.gcd(k, m) == 1)
        assert euler_phi(m) == totient


def test_canonicalization():
    # zeta^m - 1 reduces to zero, canonicalization is idempotent
    for m in (1, 2, 3, 6, 9, 12):
        z = zeta_pow(m, 0)
        diff = zeta_pow(m, m) - z
        assert diff.is_zero()
        w = Cyc(m, [((-1) ** e) * (e + 1) for e in range(m)])
        assert Cyc(m, list(w.canonical()) + [0] * (m - euler_phi(m))).canonical() \
            == w.canonical()


def test_zeta_examples():
    assert zeta_pow(5, 7) == zeta_pow(5, 2)
    total = Cyc.rational(7, 0)
    for e in range(1, 7):
        total = total + zeta_pow(7, e)
    assert total == -1
    assert zeta_pow(4, 1) ** 2 == -1


def test_product_one_plus_zeta_is_one():
    for n in (3, 5, 9, 15):
        prod = Cyc.rational(n, 1)
        for k in range(1, n):
            prod = prod * (1 + zeta_pow(n, k))
        assert prod == 1, n


def test_gauss_sum_examples():
    g3 = gauss_sum(3)
    assert g3 == 1 + 2 * zeta_pow(3, 1)
    assert g3 * g3 == -3
    assert gauss_sum(9).as_rational() == 3
    assert gauss_sum(5) * gauss_sum(5) == 5
    with pytest.raises(DomainError):
        gauss_sum(4)
    with pytest.raises(DomainError):
        gauss_sum(1)


@pytest.mark.parametrize("m", range(3, 52, 2))
def test_gauss_sum_square(m):
    g = gauss_sum(m)
    assert g * g == ((-1) ** ((m - 1) // 2)) * m


def test_sqrt_element_matches_float():
    # sqrt_element(n) embeds to i^((n-1)/2) sqrt(n)
    for n in range(3, 20, 2):
        got = embed_complex(sqrt_element(n))
        want = 1j ** ((n - 1) // 2) * math.sqrt(n)
        assert abs(got - want) < 1e-9, n


def test_galois_properties():
    rng = random.Random("galois")
    for m in (5, 7, 8, 9, 12):
        ring = CyclotomicField(m)
        units = [a for a in range(1, m) if math.gcd(a, m) == 1]
        for _ in range(40):
            a = rng.choice(units)
            z, w = ring.rand(rng), ring.rand(rng)
            assert (z + w).galois(a) == z.galois(a) + w.galois(a)
            assert (z * w).galois(a) == z.galois(a) * w.galois(a)
        r = Cyc.rational(m, Rat(3, 7))
        assert r.galois(units[-1]) == r
    assert zeta_pow(7, 1).galois(2) == zeta_pow(7, 2)
    with pytest.raises(DomainError):
        zeta_pow(6, 1).galois(3)


@pytest.mark.parametrize("n", range(3, 26, 2))
def test_galois_on_gauss_sum_gives_jacobi(n):
    g = gauss_sum(n)
    for a in range(1, n):
        if math.gcd(a, n) == 1:
            assert g.galois(a) == jacobi(a, n) * g, (n, a)


def test_inverse_random():
    rng = random.Random("inverse")
    done = 0
    while done < 200:
        m = rng.randint(3, 24)
        ring = CyclotomicField(m)
        z = ring.rand(rng)
        if z.is_zero():
            continue
        assert z.inverse() * z == 1
        done += 1
    assert (1 + zeta_pow(3, 1)).inverse() == -zeta_pow(3, 1)
    assert Cyc.rational(5, 2).inverse() == Rat(1, 2)
    with pytest.raises(NonInvertibleError):
        Cyc.rational(5, 0).inverse()


@pytest.mark.parametrize("n", range(3, 26, 2))
def test_half_product_identity(n):
    # prod_{k<=(n-1)/2} (1 - zeta^k) = (-2/n) * i^((n-1)/2) sqrt(n) * zeta^e
    prod = Cyc.rational(n, 1)
    for k in range(1, (n - 1) // 2 + 1):
        prod = prod * (1 - zeta_pow(n, k))
    e = ((n + 1) // 2) * ((n * n - 1) // 8)
    assert prod == jacobi(-2, n) * sqrt_element(n) * zeta_pow(n, e)


def test_as_rational():
    m = 11
    total = Cyc.rational(m, 0)
    for e in range(1, m):
        total = total + zeta_pow(m, e)
    assert total.as_rational() == -1
    assert zeta_pow(m, 1).as_rational() is None
    assert Cyc.rational(m, Rat(3, 4)).as_rational() == Rat(3, 4)


def test_embed_complex():
    assert abs(embed_complex(Cyc.rational(5, 1)) - 1) < 1e-12
    assert abs(embed_complex(zeta_pow(4, 1)) - 1j) < 1e-12
    assert abs(abs(embed_complex(gauss_sum(7))) - math.sqrt(7)) < 1e-9
    z = zeta_pow(12, 5)
    assert abs(embed_complex(z) - cmath.exp(2j * cmath.pi * 5 / 12)) < 1e-12


def test_find_fq_root():
    r = find_fq_root(4)
    assert (r.prime, r.element) == (5, 2)
    assert find_fq_root(6).prime == 7
    assert find_fq_root(10).prime == 11
    for n in (1, 2, 3, 6, 9, 12):
        r = find_fq_root(n)
        assert r.prime % n == 1 % n
        assert pow(r.element, n, r.prime) == 1
        for d in range(1, n):
            if n % d == 0:
                assert pow(r.element, d, r.prime) != 1, (n, d)
    with pytest.raises(SearchExhaustedError):
        find_fq_root(9973 * 2, bound=100)


def test_zeta_x_order_mismatch():
    with pytest.raises(DomainError):
        zeta_pow(5, 1) + zeta_pow(7, 1)
    with pytest.raises(DomainError):
        zeta_pow(5, 1) * zeta_pow(7, 1)
