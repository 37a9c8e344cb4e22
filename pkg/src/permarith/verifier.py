"""Registry of executable identity/congruence checks producing Reports.

Each check id maps to a runner that computes both sides of one claim
exactly and compares.  Theorem-tier ids gate exit codes; conjecture-tier
ids (conj.*) report consistency evidence only.  Congruence checks compute
the permanent exactly over Z or Q and reduce afterwards; rank-2 integer
families use the collapsed subset-sum form of Ryser's formula so the full
d-grids stay cheap, with the generic engine as a small-p cross-check.
"""

from __future__ import annotations

import random
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache

from .cyclotomic import (Cyc, CyclotomicField, find_fq_root, gauss_sum,
                         sqrt_element, zeta_pow)
from .errors import DomainError, SingularFamilyError, UnknownCheckError
from .families import (build_cyclotomic, build_integer, build_qpoly,
                       build_rational, sum_structure)
from .matrices import Mat, det_divfree, det_field, per_ryser, per_sum_matrix
from .ntheory import (bernoulli, binomial, double_factorial, factorial,
                      inv_mod, is_prime, jacobi, mod_reduce_rat,
                      odd_primes_upto)
from .rings import QQ, LPoly, ModInt, Rat
from .sequences import (derangement_sum, masked_sum, seq_c, seq_c_prime,
                        seq_d, seq_s, seq_s_prime, seq_t, seq_t_prime, seq_T)

FAST, FULL = "fast", "full"
TIERS = (FAST, FULL)


class SkipCheck(Exception):
    """Raised by a runner when parameters fall outside the claim's domain."""


@dataclass
class Report:
    check_id: str
    params: dict
    status: str            # PASS | FAIL | SKIP
    computed: str = ""
    expected: str = ""
    modulus: str | None = None
    ms: float = 0.0
    kind: str = "theorem"
    note: str | None = None

    def sort_key(self):
        return (self.check_id, param_str(self.params))

    def row(self, with_ms: bool = False) -> dict:
        out = {"id": self.check_id, "params": self.params,
               "status": self.status, "computed": self.computed,
               "expected": self.expected, "modulus": self.modulus,
               "kind": self.kind, "note": self.note}
        if with_ms:
            out["ms"] = round(self.ms, 3)
        return out


def param_str(params: dict) -> str:
    return ",".join(f"{k}={params[k]}" for k in sorted(params))


@dataclass(frozen=True)
class Item:
    computed: str
    expected: str
    ok: bool
    label: str | None = None


def _eq(got, want, label=None) -> Item:
    return Item(str(got), str(want), got == want, label)


def _true(flag: bool, computed: str, expected: str, label=None) -> Item:
    return Item(computed, expected, bool(flag), label)


def _modint_eq(got: ModInt, want: ModInt, label=None) -> Item:
    return Item(str(got.value), str(want.value), got == want, label)


def _int_item(value: Rat, label: str) -> Item:
    return Item(str(value), "integer", value.denominator == 1, label)


def _rng(seed, check_id, params) -> random.Random:
    return random.Random(f"{seed}|{check_id}|{param_str(params)}")


# ---------------------------------------------------------------------------
# Cached exact permanents for the rank-2 congruence grids
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _structured_per(family: str, p: int, d: int, rng_name: str) -> int:
    u, v = sum_structure(family, p=p, d=d, range=rng_name)
    return per_sum_matrix(u, v)


def _wilson(p: int) -> int:
    return factorial(p - 1)


# ---------------------------------------------------------------------------
# Runners (each returns (items, modulus, note))
# ---------------------------------------------------------------------------

def _run_thq_floor(params, rng):
    n = params["n"]
    got = per_ryser(build_integer("floor_shift", n=n))
    return [_eq(got, 1)], None, None


def _run_thq_qfloor(params, rng):
    n = params["n"]
    got = per_ryser(build_qpoly("qfloor", n=n))
    want = LPoly({0: 2 ** (n - 1), 1: 1})
    return [_eq(got, want)], None, None


def _run_thq_det(params, rng):
    n = params["n"]
    items = [_eq(det_divfree(build_integer("floor_shift", n=n)),
                 (-1) ** (n * (n - 1) // 2), "int")]
    if n > 1:
        want = LPoly({1: (-1) ** (n * (n + 1) // 2 - 1)})
        items.append(_eq(det_divfree(build_qpoly("qfloor", n=n)), want, "q"))
    return items, None, None


def _run_rootlinear(params, rng):
    n, backend = params["n"], params["backend"]
    items = []
    for trial in range(5):
        if backend == "cyc":
            xs = tuple(Rat(rng.randint(-9, 9), rng.randint(1, 9))
                       for _ in range(n))
            mat, _ = build_cyclotomic("root_linear", n=n, x=xs)
            got = per_ryser(mat).as_rational()
            prod = Rat(1)
            for x in xs:
                prod *= x
            want = factorial(n) * (1 - prod)
        else:
            root = find_fq_root(n)
            p = root.prime
            xs = tuple(rng.randrange(p) for _ in range(n))
            mat, _ = build_cyclotomic("root_linear", n=n, x=xs, backend="fq",
                                      fq=root)
            got = per_ryser(mat)
            prod = 1
            for x in xs:
                prod = prod * x % p
            want = ModInt(factorial(n) * (1 - prod), p)
        items.append(_eq(got, want, f"x{trial}"))
    return items, None, None


def _run_rootexp(params, rng):
    n = params["n"]
    items = []
    for x in range(1, n + 1):
        mat, _ = build_cyclotomic("root_exp_shift", n=n, x=x)
        got = per_ryser(mat).as_rational()
        want = sum(Rat(factorial(n - 1), binomial(n - 1, k)) * x ** k
                   for k in range(n))
        items.append(_eq(got, want, f"x={x}"))
    return items, None, "degree n-1 identity checked at n points"


def _run_jxk(params, rng):
    p = params["p"]
    items = []
    for trial in range(3):
        xs = [rng.randrange(p) for _ in range(p - 1)]
        per = per_sum_matrix(list(range(1, p)), xs)
        prod = 1
        for x in xs:
            prod = prod * x % p
        items.append(_modint_eq(ModInt(per, p), ModInt(1 - prod, p),
                                f"trial{trial}"))
    return items, str(p), None


def _run_jdk(params, rng, rng_name, expected_fn):
    p, d = params["p"], params["d"]
    m = p * p
    per = _structured_per("linear", p, d, rng_name)
    return [_modint_eq(ModInt(per, m), expected_fn(p, d, m))], str(m), None


def _run_jdk1(params, rng):
    return _run_jdk(params, rng, "1..p-1",
                    lambda p, d, m: ModInt(pow(d, p - 1, m) - 3
                                           - 4 * _wilson(p), m))


def _run_jdk2(params, rng):
    return _run_jdk(params, rng, "1..p",
                    lambda p, d, m: ModInt((d + 1) * inv_mod(2, m) * p, m))


def _run_jdk3(params, rng):
    return _run_jdk(params, rng, "0..p-1",
                    lambda p, d, m: ModInt(-(d + 1) * inv_mod(2, m) * p, m))


def _run_quad(params, rng):
    p, d = params["p"], params["d"]
    if p <= 3:
        raise SkipCheck("claim requires p > 3")
    m = p * p
    per = _structured_per("quad", p, d, "1..h")
    want = ModInt((pow(d, (p - 1) // 2, m) + 1)
                  * factorial((p - 1) // 2) ** 3, m)
    return [_modint_eq(ModInt(per, m), want)], str(m), None


def _run_quad0(params, rng):
    p, d = params["p"], params["d"]
    if p <= 3:
        raise SkipCheck("claim requires p > 3")
    m = p * p
    per = _structured_per("quad", p, d, "0..h")
    want = ModInt((-1) ** ((p - 1) // 2) * p * inv_mod(24, m)
                  * (d + jacobi(d, p)) * factorial((p - 1) // 2), m)
    return [_modint_eq(ModInt(per, m), want)], str(m), None


def _run_cor_jdk(params, rng):
    p, d = params["p"], params["d"]
    per = _structured_per("linear", p, d, "1..p-1")
    return [_modint_eq(ModInt(per, p), ModInt(2, p))], str(p), None


def _run_cor_quadmod(params, rng):
    p, d = params["p"], params["d"]
    per = _structured_per("quad", p, d, "1..h")
    want = ModInt((-1) ** ((p + 1) // 2) * (1 + jacobi(d, p))
                  * factorial((p - 1) // 2), p)
    return [_modint_eq(ModInt(per, p), want)], str(p), None


def _run_cor_sin(params, rng):
    n = params["n"]
    mat, _ = build_cyclotomic("root_exp_shift", n=n, x=-1)
    per = per_ryser(mat)
    if n % 2 == 0:
        return [_true(per.is_zero(), str(per), "0")], None, None
    got = Rat(per.as_rational() * (-1) ** ((n - 1) // 2), 2 ** (n - 1))
    want = Rat((-1) ** ((n - 1) // 2) * factorial(n), 2 ** (n - 2) * (n + 1))
    return [_eq(got, want)], None, None


def _run_cor_cos(params, rng):
    n = params["n"]
    mat, _ = build_cyclotomic("root_exp_shift", n=n, x=1)
    got = Rat(per_ryser(mat).as_rational() * (-1) ** (n - 1), 2 ** (n - 1))
    want = Rat(factorial(n - 1), (-2) ** (n - 1)) * sum(
        Rat(1, binomial(n - 1, k)) for k in range(n))
    return [_eq(got, want)], None, None


def _run_cauchyroot(params, rng):
    n = params["n"]
    x = Rat(params["x"])
    try:
        mat, _ = build_cyclotomic("cauchy_root", n=n, x=x)
    except SingularFamilyError as exc:
        raise SkipCheck(str(exc))
    got = per_ryser(mat).as_rational()
    base = Rat(n * x ** n, 1 - x ** n)
    want = Rat(1)
    for r in range(1, n + 1):
        want *= base + r
    return [_eq(got, want)], None, None


def _run_invsumsq(params, rng):
    p = params["p"]
    if p % 4 != 3:
        raise SkipCheck("claim requires p = 3 (mod 4)")
    per = per_ryser(build_rational("inv_sum_sq", p=p))
    got = mod_reduce_rat(per, p)
    q = (p + 1) // 4
    want = mod_reduce_rat(Rat((-1) ** q, 4 * factorial(q) ** 2), p)
    return [_modint_eq(got, want)], str(p), None


def _run_thjk_int(params, rng):
    n = params["n"]
    v = seq_T(n)
    return [_int_item(v.value, f"T({n})")], None, None


def _run_thjk_cong(params, rng):
    p = params["p"]
    m = p * p
    got = mod_reduce_rat(seq_T(p).value, m)
    want = ModInt((-1) ** ((p + 1) // 2) * 2 * p, m)
    return [_modint_eq(got, want)], str(m), None


def _run_thcos_int(params, rng):
    n = params["n"]
    items = [_int_item(seq_c(n).value, f"c({n})")]
    v = seq_c_prime(n)
    items.append(_true(v.denominator_bound % v.value.denominator == 0,
                       f"denominator {v.value.denominator}",
                       f"divisor of {v.denominator_bound}", f"c'({n})"))
    return items, None, f"c'({n}) = {v.value}, d = {int(seq_d(n).value)}"


def _run_thcos_cong(params, rng):
    p = params["p"]
    h = (p - 1) // 2
    want = ModInt(factorial(h), p)
    per_cos = mod_reduce_rat(seq_c(p).value * Rat(1, 2 ** h), p)
    per_sec = mod_reduce_rat(seq_c_prime(p).value * 2 ** h, p)
    return [_modint_eq(per_cos, want, "cos"),
            _modint_eq(per_sec, want, "sec")], str(p), None


def _run_thsin_int(params, rng):
    n = params["n"]
    items = [_int_item(seq_s(n).value, f"s({n})")]
    if is_prime(n):
        items.append(_int_item(seq_s_prime(n).value, f"s'({n})"))
    return items, None, None


def _run_thsin_cong(params, rng):
    p = params["p"]
    got_s = mod_reduce_rat(seq_s(p).value, p)
    got_sp = mod_reduce_rat(seq_s_prime(p).value, p)
    return [_modint_eq(got_s, ModInt((-1) ** ((p + 1) // 2), p), "s"),
            _modint_eq(got_sp, ModInt(1, p), "s'")], str(p), None


def _run_thtan_int(params, rng):
    n = params["n"]
    items = [_int_item(seq_t(n).value, f"t({n})")]
    if is_prime(n):
        items.append(_int_item(seq_t_prime(n).value, f"t'({n})"))
    return items, None, None


def _run_thtan_cong(params, rng):
    p = params["p"]
    got_t = mod_reduce_rat(seq_t(p).value, p)
    got_tp = mod_reduce_rat(seq_t_prime(p).value, p)
    return [_modint_eq(got_t, ModInt((-1) ** ((p + 1) // 2), p), "t"),
            _modint_eq(got_tp, ModInt(1, p), "t'")], str(p), None


def _distinct_rationals(rng, count, taboo=()):
    out = []
    while len(out) < count:
        x = Rat(rng.randint(-30, 30), rng.randint(1, 12))
        if x not in out and x not in taboo:
            out.append(x)
    return out


def _run_lem_cauchy(params, rng):
    n = params["n"]
    items = []
    for trial in range(3):
        while True:
            xs = _distinct_rationals(rng, n)
            ys = _distinct_rationals(rng, n)
            if all(x + y != 0 for x in xs for y in ys):
                break
        mat = Mat(QQ, [[Rat(1, x + y) for y in ys] for x in xs])
        got = det_field(mat)
        num = Rat(1)
        for j in range(n):
            for k in range(j + 1, n):
                num *= (xs[k] - xs[j]) * (ys[k] - ys[j])
        den = Rat(1)
        for x in xs:
            for y in ys:
                den *= x + y
        items.append(_eq(got, num / den, f"trial{trial}"))
    return items, None, None


def _run_lem_borchardt(params, rng):
    n = params["n"]
    items = []
    for trial in range(3):
        while True:
            xs = _distinct_rationals(rng, n)
            ys = _distinct_rationals(rng, n)
            if all(x != y for x in xs for y in ys):
                break
        cauchy = Mat(QQ, [[Rat(1, x - y) for y in ys] for x in xs])
        squared = Mat(QQ, [[Rat(1, (x - y) ** 2) for y in ys] for x in xs])
        got = det_field(squared)
        want = det_field(cauchy) * per_ryser(cauchy)
        items.append(_eq(got, want, f"trial{trial}"))
    return items, None, None


def _run_lem_circulant(params, rng):
    n = params["n"]
    ring = CyclotomicField(n)
    items = []
    for trial in range(3):
        a = [rng.randint(-9, 9) for _ in range(n)]
        mat = Mat(ring, [[Cyc.rational(n, a[(k - i) % n]) for k in range(n)]
                         for i in range(n)])
        got = det_field(mat)
        want = ring.one
        for r in range(n):
            want = want * sum((a[k] * ring.zeta((k * r) % n)
                               for k in range(n)), ring.zero)
        items.append(_eq(got, want, f"trial{trial}"))
    return items, None, None


def _run_lem_oneplus(params, rng):
    n = params["n"]
    if n % 2 == 0:
        raise SkipCheck("claim requires odd n")
    prod = Cyc.rational(n, 1)
    for k in range(1, n):
        prod = prod * (1 + zeta_pow(n, k))
    return [_eq(prod, Cyc.rational(n, 1))], None, None


def _run_lem_gauss(params, rng):
    n = params["n"]
    g = gauss_sum(n)
    want = Cyc.rational(n, n if (n - 1) // 2 % 2 == 0 else -n)
    return [_eq(g * g, want)], None, None


def _run_lem_half(params, rng):
    n = params["n"]
    if n % 2 == 0:
        raise SkipCheck("claim requires odd n")
    prod = Cyc.rational(n, 1)
    for k in range(1, (n - 1) // 2 + 1):
        prod = prod * (1 - zeta_pow(n, k))
    e = ((n + 1) // 2) * ((n * n - 1) // 8)
    want = jacobi(-2, n) * sqrt_element(n) * zeta_pow(n, e)
    return [_eq(prod, want)], None, None


def _run_det_sec2(params, rng):
    n = params["n"]
    if n % 2 == 0:
        raise SkipCheck("claim requires odd n")
    mat, _ = build_cyclotomic("sec2_diff", n=n)
    got = det_field(mat).as_rational()
    want = n ** (n - 1) * double_factorial(n) ** 2
    return [_eq(got, want)], None, None


def _run_det_tan2(params, rng):
    n = params["n"]
    if n % 2 == 0:
        raise SkipCheck("claim requires odd n")
    mat, _ = build_cyclotomic("tan2_diff", n=n)
    got = det_field(mat).as_rational()
    want = 0 if n == 1 else (n - 1) * n ** (n - 2) * double_factorial(n) ** 2
    return [_eq(got, want)], None, None


def _run_conj_qdet(params, rng):
    n, a = params["n"], params["a"]
    if n % 2 == 0 or n < 3:
        raise SkipCheck("conjecture requires odd n > 1")
    ja = jacobi(a * (a + 1), n)
    got_floor = det_divfree(build_qpoly("qfloor_gen", n=n, a=a))
    got_ceil = det_divfree(build_qpoly("qceil_gen", n=n, a=a))
    want_floor = LPoly({(1 - 3 * n) // 2: -ja})
    want_ceil = LPoly({(n - 1) // 2: ja})
    return [_eq(got_floor, want_floor, "floor"),
            _eq(got_ceil, want_ceil, "ceil")], None, None


def _run_conj_bernoulli(params, rng):
    n = params["n"]
    got = Rat(per_ryser(build_integer("floor_2jk", n=n)))
    want = 2 * (2 ** (n + 1) - 1) * bernoulli(n + 1)
    return [_eq(got, want)], None, None


def _run_conj_absjk(params, rng):
    p = params["p"]
    inv2 = inv_mod(2, p)
    got0 = per_ryser(build_integer("abs", n=p, shift=0))
    got1 = per_ryser(build_integer("abs", n=p, shift=1))
    return [_modint_eq(ModInt(got0, p), ModInt(-inv2, p), "|j-k|"),
            _modint_eq(ModInt(got1, p), ModInt(inv2, p), "|j-k+1|")], str(p), None


def _run_conj_maskper(params, rng):
    p, a = params["p"], params["a"]
    if p <= 3:
        raise SkipCheck("conjecture requires p > 3")
    if a % p == 0:
        raise SkipCheck("conjecture requires a nonzero mod p")
    got = masked_sum(p, a, signed=False, family="recip_aj_k")
    return [_modint_eq(got, ModInt(0, p * p))], str(p * p), None


def _run_conj_derange(params, rng):
    n = params["n"]
    items = []
    if n % 2 == 0:
        got = derangement_sum(n, "unsigned_recip")
        want = Rat(double_factorial(n - 1) ** 2, 2 ** n)
        items.append(_eq(got, want, "unsigned"))
    else:
        h = (n - 1) // 2
        got = derangement_sum(n, "unsigned_recip")
        items.append(_eq(got, Rat(factorial(h) ** 2, n), "unsigned"))
        got = derangement_sum(n, "signed_recip")
        items.append(_eq(got, Rat((-1) ** h * factorial(h) ** 2, n), "signed"))
        got = derangement_sum(n, "signed_cot_ratio")
        items.append(_eq(got, Rat((-1) ** h * double_factorial(n - 2) ** 2, n),
                         "cot"))
    return items, None, None


def _run_conj_maskdet(params, rng):
    p, a = params["p"], params["a"]
    if p <= 3:
        raise SkipCheck("conjecture requires p > 3")
    m = p * p
    items = []
    got = masked_sum(p, a, signed=True, family="recip_ajk")
    want = ModInt(jacobi(a, p) * (3 - pow(a, p - 1, m)) * inv_mod(2, m), m)
    items.append(_modint_eq(got, want, "signed"))
    note = None
    if a % p != 0:
        got_u = masked_sum(p, a, signed=False, family="recip_ajk")
        want_u = ModInt((-1) ** ((p + 1) // 2)
                        * (3 - pow(a, p - 1, m)) * inv_mod(2, m), m)
        items.append(_modint_eq(got_u, want_u, "unsigned"))
    else:
        note = "unsigned claim void for p | a; signed side evaluated"
    return items, str(m), note


def _run_conj_sqdiff(params, rng):
    p = params["p"]
    if p % 4 != 1:
        raise SkipCheck("conjecture requires p = 1 (mod 4)")
    per = per_ryser(build_rational("inv_sqdiff", p=p))
    got = mod_reduce_rat(per, p)
    want = mod_reduce_rat(Rat(1, factorial((p - 1) // 4) ** 2), p)
    return [_modint_eq(got, want)], str(p), None


def _run_conj_csign(params, rng):
    p = params["p"]
    if not is_prime(p):
        raise SkipCheck("claim is about primes")
    sign = (-1) ** ((p - 1) // 2)
    c = sign * seq_c(p).value
    cp = sign * seq_c_prime(p).value
    return [_true(c > 0 and c % 2 == 1, str(c), "positive odd", "c"),
            _true(cp > 0, str(cp), "positive", "c'")], None, None


def _run_conj_ssign(params, rng):
    n = params["n"]
    if is_prime(n):
        s = seq_s(n).value
        sp = seq_s_prime(n).value
        return [_true((s < 0) == (n % 12 == 5), str(s),
                      "s < 0 iff p = 5 (mod 12)", "s"),
                _true((sp < 0) == (n % 8 == 7), str(sp),
                      "s' < 0 iff p = 7 (mod 8)", "s'")], None, None
    got = mod_reduce_rat(seq_s(n).value, n)
    return [_modint_eq(got, ModInt(0, n), "s mod n")], str(n), None


def _run_conj_tsign(params, rng):
    n = params["n"]
    if is_prime(n):
        t = jacobi(2, n) * seq_t(n).value
        tp = jacobi(-1, n) * seq_t_prime(n).value
        return [_true(t < 0, str(t), "negative", "(2/p) t"),
                _true(tp < 0, str(tp), "negative", "(-1/p) t'")], None, None
    got = mod_reduce_rat(seq_t(n).value, n)
    return [_modint_eq(got, ModInt(0, n), "t mod n")], str(n), None


def _run_rem_qdetabs(params, rng):
    n = params["n"]
    if n < 2:
        raise SkipCheck("claims require n >= 2")
    one_plus_q = LPoly({0: 1, 1: 1})
    items = [
        _eq(det_divfree(build_qpoly("qabs", n=n, shift=1)),
            one_plus_q ** (n - 2), "|j-k+1|_q"),
        _eq(det_divfree(build_qpoly("qabs", n=n, shift=0)),
            ((-1) ** (n - 1) * (n - 1)) * one_plus_q ** (n - 2), "|j-k|_q"),
        _eq(det_divfree(build_integer("abs", n=n, shift=0)),
            (-1) ** (n - 1) * (n - 1) * 2 ** (n - 2), "|j-k|"),
    ]
    return items, None, None


def _run_rem_perhalf(params, rng):
    n = params["n"]
    if n % 2 == 0:
        raise SkipCheck("claim requires odd n")
    mat, _ = build_cyclotomic("cauchy_root", n=n, x=-1)
    got = per_ryser(mat).as_rational()
    want = Rat((-1) ** ((n - 1) // 2) * double_factorial(n) ** 2, 2 ** n * n)
    return [_eq(got, want)], None, None


def _run_rem_cp(params, rng):
    n = params["n"]
    got = derangement_sum(n, "signed_recip_full")
    if n % 2 == 0:
        want = Rat((-1) ** (n // 2) * double_factorial(n - 1) ** 2, 2 ** n)
    else:
        want = Rat(0)
    return [_eq(got, want)], None, None


# ---------------------------------------------------------------------------
# Parameter grids
# ---------------------------------------------------------------------------

def _odds(lo, hi):
    return [n for n in range(lo, hi + 1) if n % 2]


def _d_grid(p, tier):
    if tier == FULL:
        return range(1, p)
    return sorted({1, 2, p - 1} & set(range(1, p)))


def _ns(tier, fast_hi, full_hi, lo=1):
    return [{"n": n} for n in range(lo, (fast_hi if tier == FAST else full_hi) + 1)]


def _odd_ns(tier, fast_hi, full_hi, lo=3):
    return [{"n": n} for n in _odds(lo, fast_hi if tier == FAST else full_hi)]


def _ps(tier, fast_hi, full_hi, lo=3):
    return [{"p": p} for p in odd_primes_upto(fast_hi if tier == FAST else full_hi)
            if p >= lo]


def _pd_grid(tier, fast_hi, full_hi, lo=3):
    out = []
    for p in odd_primes_upto(fast_hi if tier == FAST else full_hi):
        if p >= lo:
            out.extend({"p": p, "d": d} for d in _d_grid(p, tier))
    return out


# ---------------------------------------------------------------------------
# Registry
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Check:
    check_id: str
    kind: str
    claim: str
    runner: object
    grid: object = field(repr=False, default=None)


REGISTRY: dict[str, Check] = {}


def _register(check_id, kind, claim, runner, grid):
    REGISTRY[check_id] = Check(check_id, kind, claim, runner, grid)


_register("thq.floor", "theorem",
          "per[floor((j+k-1)/n)] (n x n) = 1",
          _run_thq_floor, lambda tier: _ns(tier, 9, 12))
_register("thq.qfloor", "theorem",
          "per[[floor((j+k)/n)]_q] = 2^(n-1) + q",
          _run_thq_qfloor, lambda tier: _ns(tier, 9, 12))
_register("thq.det", "theorem",
          "det[floor((j+k-1)/n)] = (-1)^(n(n-1)/2); "
          "det[[floor((j+k)/n)]_q] = (-1)^(n(n+1)/2-1) q for n > 1",
          _run_thq_det, lambda tier: _ns(tier, 9, 12))
_register("thper.rootlinear", "theorem",
          "per[1 - zeta^j x_k] = n! (1 - x_1...x_n), zeta of order n",
          _run_rootlinear,
          lambda tier: [{"n": n, "backend": b}
                        for n in range(1, (8 if tier == FAST else 11))
                        for b in ("cyc", "fq")])
_register("thper.rootexp", "theorem",
          "per[1 + zeta^(j+k) x] (size n-1) = sum_k (n-1)!/C(n-1,k) x^k",
          _run_rootexp, lambda tier: _ns(tier, 8, 10, lo=2))
_register("thper.jxk", "theorem",
          "per[j + x_k] (size p-1) = 1 - x_1...x_(p-1) (mod p)",
          _run_jxk, lambda tier: _ps(tier, 13, 19))
_register("thper.jdk1", "theorem",
          "per[j+dk] (1..p-1) = d^(p-1) - 3 - 4(p-1)! (mod p^2)",
          _run_jdk1, lambda tier: _pd_grid(tier, 13, 19))
_register("thper.jdk2", "theorem",
          "per[j+dk] (1..p) = (d+1)/2 p (mod p^2)",
          _run_jdk2, lambda tier: _pd_grid(tier, 13, 19))
_register("thper.jdk3", "theorem",
          "per[j+dk] (0..p-1) = -(d+1)/2 p (mod p^2)",
          _run_jdk3, lambda tier: _pd_grid(tier, 13, 19))
_register("thper.quad", "theorem",
          "per[j^2+dk^2] (1..(p-1)/2) = (d^((p-1)/2)+1) ((p-1)/2)!^3 (mod p^2)",
          _run_quad, lambda tier: _pd_grid(tier, 13, 19, lo=5))
_register("thper.quad0", "theorem",
          "per[j^2+dk^2] (0..(p-1)/2) = (-1)^((p-1)/2) p/24 (d+(d/p)) "
          "((p-1)/2)! (mod p^2)",
          _run_quad0, lambda tier: _pd_grid(tier, 13, 19, lo=5))
_register("cor.jdk", "theorem",
          "per[j+dk] (1..p-1) = 2 (mod p)",
          _run_cor_jdk, lambda tier: _pd_grid(tier, 13, 19))
_register("cor.quadmod", "theorem",
          "per[j^2+dk^2] (1..(p-1)/2) = (-1)^((p+1)/2) (1+(d/p)) "
          "((p-1)/2)! (mod p)",
          _run_cor_quadmod, lambda tier: _pd_grid(tier, 13, 19))
_register("cor.sin", "theorem",
          "per[sin pi(j+k)/n] (size n-1): (-1)^((n-1)/2) n!/(2^(n-2)(n+1)) "
          "for odd n, 0 for even n",
          _run_cor_sin, lambda tier: _ns(tier, 9, 12, lo=2))
_register("cor.cos", "theorem",
          "per[cos pi(j+k)/n] (size n-1) = (n-1)!/(-2)^(n-1) sum 1/C(n-1,k)",
          _run_cor_cos, lambda tier: _ns(tier, 9, 12, lo=2))
_register("thnew.cauchyroot", "theorem",
          "per[1/(1 - zeta^(j-k) x)] = prod_r (n x^n/(1-x^n) + r)",
          _run_cauchyroot,
          lambda tier: [{"n": n, "x": x}
                        for n in range(1, (7 if tier == FAST else 11))
                        for x in ("2", "-1", "1/2", "3/5")])
_register("thnew.invsumsq", "theorem",
          "per[1/(j^2+k^2)] (size (p-1)/2) = (-1)^((p+1)/4)/(4 ((p+1)/4)!^2) "
          "(mod p) for p = 3 (mod 4)",
          _run_invsumsq,
          lambda tier: [{"p": p} for p in
                        ((3, 7, 11) if tier == FAST else (3, 7, 11, 19, 23))])
_register("thjk.int", "theorem",
          "T(n) = per[tan pi(j+k)/n] (size n-1) is an integer",
          _run_thjk_int, lambda tier: _odd_ns(tier, 9, 13))
_register("thjk.cong", "theorem",
          "T(p) = (-1)^((p+1)/2) 2p (mod p^2)",
          _run_thjk_cong, lambda tier: _ps(tier, 11, 13))
_register("thcos.int", "theorem",
          "c_n is an integer; denominator of c'_n divides 2^(d_n)",
          _run_thcos_int, lambda tier: _odd_ns(tier, 13, 23))
_register("thcos.cong", "theorem",
          "per[cos 2pi jk/p] = per[sec 2pi jk/p] = ((p-1)/2)! (mod p)",
          _run_thcos_cong, lambda tier: _ps(tier, 13, 19))
_register("thsin.int", "theorem",
          "s_n (and s'_p for prime index) are integers",
          _run_thsin_int, lambda tier: _odd_ns(tier, 13, 23))
_register("thsin.cong", "theorem",
          "s_p = (-1)^((p+1)/2), s'_p = 1 (mod p)",
          _run_thsin_cong, lambda tier: _ps(tier, 13, 19))
_register("thtan.int", "theorem",
          "t_n (and t'_p for prime index) are integers",
          _run_thtan_int, lambda tier: _odd_ns(tier, 13, 25))
_register("thtan.cong", "theorem",
          "t_p = (-1)^((p+1)/2), t'_p = 1 (mod p)",
          _run_thtan_cong, lambda tier: _ps(tier, 13, 19))
_register("lem.cauchy", "theorem",
          "Cauchy determinant det[1/(x_j+y_k)] product formula",
          _run_lem_cauchy, lambda tier: _ns(tier, 6, 6, lo=2))
_register("lem.borchardt", "theorem",
          "det[1/(x_j-y_k)^2] = det[1/(x_j-y_k)] per[1/(x_j-y_k)]",
          _run_lem_borchardt, lambda tier: _ns(tier, 6, 6, lo=2))
_register("lem.circulant", "theorem",
          "circulant determinant = prod_r sum_k a_k zeta^((k-1)r)",
          _run_lem_circulant, lambda tier: _ns(tier, 6, 8))
_register("lem.oneplus", "theorem",
          "prod_(k=1..n-1) (1 + zeta^k) = 1 for odd n",
          _run_lem_oneplus, lambda tier: _odd_ns(tier, 15, 25))
_register("lem.gauss", "theorem",
          "gauss_sum(n)^2 = (-1)^((n-1)/2) n",
          _run_lem_gauss, lambda tier: _odd_ns(tier, 25, 51))
_register("lem.half", "theorem",
          "prod_(k<=(n-1)/2) (1 - zeta^k) = (-2/n) i^((n-1)/2) sqrt(n) "
          "zeta^((n+1)/2 (n^2-1)/8)",
          _run_lem_half, lambda tier: _odd_ns(tier, 15, 25))
_register("det.sec2", "theorem",
          "det[sec^2 pi(j-k)/n] (n x n) = n^(n-1) (n!!)^2 for odd n",
          _run_det_sec2, lambda tier: _odd_ns(tier, 7, 11, lo=1))
_register("det.tan2", "theorem",
          "det[tan^2 pi(j-k)/n] (n x n) = (n-1) n^(n-2) (n!!)^2 for odd n",
          _run_det_tan2, lambda tier: _odd_ns(tier, 7, 11, lo=1))
_register("conj.qdet", "conjecture",
          "det[[floor((aj-(a+1)k)/n)]_q] = -(a(a+1)/n) q^((1-3n)/2); "
          "det[[ceil(((a+1)j-ak)/n)]_q] = (a(a+1)/n) q^((n-1)/2)",
          _run_conj_qdet,
          lambda tier: [{"n": n, "a": a}
                        for n in _odds(3, 7 if tier == FAST else 9)
                        for a in range(-2 if tier == FAST else -3,
                                       (3 if tier == FAST else 4))])
_register("conj.bernoulli", "theorem",
          "per[floor((2j-k)/n)] = 2 (2^(n+1) - 1) B_(n+1)",
          _run_conj_bernoulli, lambda tier: _ns(tier, 10, 10))
_register("conj.absjk", "conjecture",
          "per[|j-k|] = -1/2 and per[|j-k+1|] = 1/2 (mod p), size p",
          _run_conj_absjk, lambda tier: _ps(tier, 11, 13))
_register("conj.maskper", "conjecture",
          "sum over tau with p never dividing aj+tau(j) of "
          "prod 1/(aj+tau(j)) = 0 (mod p^2)",
          _run_conj_maskper,
          lambda tier: [{"p": p, "a": a} for p in (5, 7) for a in (1, 2, 3)])
_register("conj.derange", "conjecture",
          "derangement sums of 1/(1 - zeta^(j-tau(j))) "
          "and the cot-ratio variant match closed forms",
          _run_conj_derange, lambda tier: _ns(tier, 8, 10, lo=2))
_register("conj.maskdet", "conjecture",
          "signed/unsigned masked sums of 1/(a+j tau(j)) match "
          "(a/p)(3-a^(p-1))/2 and (-1)^((p+1)/2)(3-a^(p-1))/2 (mod p^2)",
          _run_conj_maskdet,
          lambda tier: [{"p": p, "a": a} for p in (5, 7)
                        for a in (1, 2, 3, 5)])
_register("conj.sqdiff", "conjecture",
          "derangement sum of 1/prod(j^2 - tau(j)^2) = ((p-1)/4)!^(-2) "
          "(mod p) for p = 1 (mod 4)",
          _run_conj_sqdiff,
          lambda tier: [{"p": p} for p in ((5, 13) if tier == FAST
                                           else (5, 13, 17))])
_register("conj.csign", "conjecture",
          "(-1)^((p-1)/2) c_p is a positive odd integer; "
          "(-1)^((p-1)/2) c'_p > 0",
          _run_conj_csign, lambda tier: _ps(tier, 13, 23))
_register("conj.ssign", "conjecture",
          "s_p < 0 iff p = 5 (mod 12); s'_p < 0 iff p = 7 (mod 8); "
          "s_n = 0 (mod n) for odd composite n",
          _run_conj_ssign, lambda tier: _odd_ns(tier, 13, 23))
_register("conj.tsign", "conjecture",
          "(2/p) t_p < 0; (-1/p) t'_p < 0; t_n = 0 (mod n) "
          "for odd composite n",
          _run_conj_tsign, lambda tier: _odd_ns(tier, 13, 25))
_register("rem.qdetabs", "theorem",
          "det[[|j-k+1|]_q] = (1+q)^(n-2); det[[|j-k|]_q] = "
          "(-1)^(n-1)(n-1)(1+q)^(n-2); det[|j-k|] = (-1)^(n-1)(n-1)2^(n-2)",
          _run_rem_qdetabs, lambda tier: _ns(tier, 8, 10, lo=2))
_register("rem.perhalf", "theorem",
          "per[1/(1 + zeta^(j-k))] = (-1)^((n-1)/2) (n!!)^2/(2^n n) for odd n",
          _run_rem_perhalf, lambda tier: _odd_ns(tier, 7, 9))
_register("rem.cp", "theorem",
          "signed derangement sum of 1/(1 - zeta^(j-tau(j))): "
          "(-1)^(n/2)((n-1)!!)^2/2^n for even n, 0 for odd n",
          _run_rem_cp, lambda tier: _ns(tier, 8, 10, lo=2))

ALL_CHECK_IDS = tuple(REGISTRY)


# ---------------------------------------------------------------------------
# Execution
# ---------------------------------------------------------------------------

def run_check(check_id: str, params: dict, seed: int = 0) -> Report:
    """Execute one registered check; errors become FAIL, domain gaps SKIP."""
    check = REGISTRY.get(check_id)
    if check is None:
        raise UnknownCheckError(check_id)
    rng = _rng(seed, check_id, params)
    start = time.perf_counter()
    try:
        items, modulus, note = check.runner(params, rng)
    except SkipCheck as exc:
        return Report(check_id, params, "SKIP", kind=check.kind,
                      note=str(exc), ms=(time.perf_counter() - start) * 1e3)
    except DomainError as exc:
        return Report(check_id, params, "SKIP", kind=check.kind,
                      note=f"out of domain: {exc}",
                      ms=(time.perf_counter() - start) * 1e3)
    except (ArithmeticError, ValueError, KeyError) as exc:
        return Report(check_id, params, "FAIL", kind=check.kind,
                      note=f"{type(exc).__name__}: {exc}",
                      ms=(time.perf_counter() - start) * 1e3)
    ms = (time.perf_counter() - start) * 1e3
    ok = all(item.ok for item in items)

    def fmt(v):
        return "; ".join(f"{i.label}={getattr(i, v)}" if i.label else
                         getattr(i, v) for i in items)

    return Report(check_id, params, "PASS" if ok else "FAIL",
                  computed=fmt("computed"), expected=fmt("expected"),
                  modulus=modulus, ms=ms, kind=check.kind, note=note)


def default_grid(check_id: str, tier: str = FAST) -> list[dict]:
    check = REGISTRY.get(check_id)
    if check is None:
        raise UnknownCheckError(check_id)
    if tier not in TIERS:
        raise DomainError(f"tier must be one of {TIERS}, got {tier!r}")
    return list(check.grid(tier))


def run_suite(tier: str = FAST, ids=None, seed: int = 0,
              threads: int = 1) -> list[Report]:
    """Run registered checks over their tier grids; reports sorted by id."""
    if ids is None:
        ids = ALL_CHECK_IDS
    tasks = []
    for check_id in ids:
        for params in default_grid(check_id, tier):
            tasks.append((check_id, params))
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            reports = list(pool.map(
                lambda t: run_check(t[0], t[1], seed=seed), tasks))
    else:
        reports = [run_check(cid, params, seed=seed) for cid, params in tasks]
    reports.sort(key=Report.sort_key)
    return reports
