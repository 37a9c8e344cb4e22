"""Matrix family constructors: spot values, symmetry, masking, scales,
float diagnostics, and the FamilySpec textual form."""

import math

import pytest

from permarith.cyclotomic import embed_complex
from permarith.errors import DomainError, SingularFamilyError
from permarith.families import (FamilySpec, Scale, build_cyclotomic,
                                build_integer, build_qpoly, build_rational,
                                build_family, sum_structure)
from permarith.matrices import per_naive, per_ryser
from permarith.rings import LPoly, Rat, qint


def test_floor_shift_example():
    m = build_integer("floor_shift", n=3)
    assert [list(r) for r in m.rows] == [[0, 0, 1], [0, 1, 1], [1, 1, 1]]


def test_linear_example_and_ranges():
    m = build_integer("linear", p=3, d=1, range="1..p")
    assert [list(r) for r in m.rows] == [[2, 3, 4], [3, 4, 5], [4, 5, 6]]
    assert build_integer("linear", p=3, d=1, range="1..p-1").n == 2
    assert build_integer("linear", p=3, d=1, range="0..p-1").entry(1, 1) == 0
    with pytest.raises(DomainError):
        build_integer("linear", p=9, d=1, range="1..p")
    with pytest.raises(DomainError):
        build_integer("linear", p=5, d=10, range="1..p")
    with pytest.raises(DomainError):
        build_integer("linear", p=5, d=1, range="2..p")


def test_abs_example():
    m = build_integer("abs", n=3, shift=0)
    assert [list(r) for r in m.rows] == [[0, 1, 2], [1, 0, 1], [2, 1, 0]]
    assert per_naive(m) == 4


def test_symmetry():
    assert build_integer("floor_shift", n=6).transpose() == \
        build_integer("floor_shift", n=6)
    assert build_integer("abs", n=7).transpose() == build_integer("abs", n=7)
    for fam in ("cos2", "sin2", "tan_jk"):
        mat, _ = build_cyclotomic(fam, n=9)
        assert mat.transpose() == mat, fam
    m = build_rational("inv_sum_sq", p=7)
    assert m.transpose() == m


def test_qfloor_example():
    m = build_qpoly("qfloor", n=2)
    one = LPoly.const(1)
    assert m.rows[0] == (one, one)
    assert m.rows[1] == (one, LPoly({0: 1, 1: 1}))
    assert per_ryser(m) == LPoly({0: 2, 1: 1})  # = 2^(n-1) + q at n = 2


def test_qabs_example():
    m = build_qpoly("qabs", n=2, shift=1)
    assert m.rows[0] == (qint(1), qint(0))
    assert m.rows[1] == (qint(2), qint(1))


def test_qfloor_gen_negative_entries():
    m = build_qpoly("qfloor_gen", n=3, a=1)
    # (j,k) = (1,2): floor((1-4)/3) = -1, whose q-analogue is -q^(-1)
    assert m.entry(1, 2) == LPoly({-1: -1})


def test_sum_structure_matches_matrices():
    for rng_name in ("1..p-1", "1..p", "0..p-1"):
        u, v = sum_structure("linear", p=5, d=3, range=rng_name)
        m = build_integer("linear", p=5, d=3, range=rng_name)
        assert [[uj + vk for vk in v] for uj in u] == [list(r) for r in m.rows]
    u, v = sum_structure("quad", p=11, d=2, range="0..h")
    m = build_integer("quad", p=11, d=2, range="0..h")
    assert [[uj + vk for vk in v] for uj in u] == [list(r) for r in m.rows]
    assert sum_structure("abs", n=4) is None


def test_cauchy_root_examples():
    mat, scale = build_cyclotomic("cauchy_root", n=4, x=0)
    assert scale == Scale(0, 0)
    assert per_ryser(mat).as_rational() == 24  # all-ones matrix, per = n!
    with pytest.raises(SingularFamilyError):
        build_cyclotomic("cauchy_root", n=4, x=1)
    with pytest.raises(SingularFamilyError):
        build_cyclotomic("cauchy_root", n=4, x=-1)
    with pytest.raises(SingularFamilyError):
        build_cyclotomic("cauchy_root", n=5, x=1, backend="fq")


def test_cos2_example():
    mat, scale = build_cyclotomic("cos2", n=3)
    assert mat.n == 1
    assert mat.entry(1, 1).as_rational() == -1  # zeta + zeta^2 = -1
    assert scale == Scale(-1, 0)


def test_prime_only_families_reject_composites():
    for fam in ("csc2", "cot_jk"):
        with pytest.raises(DomainError):
            build_cyclotomic(fam, n=9)
        build_cyclotomic(fam, n=7)
    with pytest.raises(DomainError):
        build_cyclotomic("tan_jk", n=8)


def test_masked_families():
    p, a = 5, 1
    m = build_rational("recip_ajk", p=p, a=a)
    assert m.n == p - 1
    for j in range(1, p):
        for k in range(1, p):
            if (a + j * k) % p == 0:
                assert m.entry(j, k) == 0, (j, k)
            else:
                assert m.entry(j, k) == Rat(1, a + j * k)
    assert m.entry(1, 4) == 0  # 1 + 4 = 5 masked
    m2 = build_rational("recip_aj_k", p=5, a=2)
    for j in range(1, 6):
        for k in range(1, 6):
            want = 0 if (2 * j + k) % 5 == 0 else Rat(1, 2 * j + k)
            assert m2.entry(j, k) == want
    with pytest.raises(DomainError):
        build_rational("recip_aj_k", p=5, a=5)


def test_inv_sum_sq_domain():
    m = build_rational("inv_sum_sq", p=3)
    assert m.n == 1 and m.entry(1, 1) == Rat(1, 2)
    with pytest.raises(DomainError):
        build_rational("inv_sum_sq", p=5)  # needs p = 3 (mod 4)


def test_inv_sqdiff_entries():
    m = build_rational("inv_sqdiff", p=7)
    assert m.n == 3
    assert m.entry(1, 2) == Rat(-1, 3)
    assert all(m.entry(j, j) == 0 for j in range(1, 4))


@pytest.mark.parametrize("n", range(3, 16, 2))
def test_trig_families_match_float(n):
    # diagnostic: exact entries, times the per-entry scale whose size-th
    # power is the aggregate Scale record, embed to the trigonometric values
    h = (n - 1) // 2
    cases = [
        ("cos2", lambda j, k: math.cos(2 * math.pi * j * k / n), 0.5, h),
        ("sin2", lambda j, k: math.sin(2 * math.pi * j * k / n), -0.5j, h),
        ("tan_jk", lambda j, k: math.tan(math.pi * j * k / n), -1j, h),
        ("tan_shift", lambda j, k: math.tan(math.pi * (j + k) / n), -1j, n - 1),
    ]
    for fam, trueval, entry_scale, size in cases:
        mat, scale = build_cyclotomic(fam, n=n)
        assert mat.n == size
        agg = entry_scale ** size
        want_agg = 2 ** scale.pow2 * 1j ** scale.ipow
        assert abs(agg - want_agg) < 1e-9 * abs(agg), fam
        for j in range(1, size + 1):
            for k in range(1, size + 1):
                got = embed_complex(mat.entry(j, k)) * entry_scale
                assert abs(got - trueval(j, k)) < 1e-9, (fam, j, k)


@pytest.mark.parametrize("n", (3, 5, 7, 9))
def test_sec_csc_cot_float(n):
    h = (n - 1) // 2
    mat, scale = build_cyclotomic("sec2", n=n)
    for j in range(1, h + 1):
        for k in range(1, h + 1):
            got = embed_complex(mat.entry(j, k)) * 2
            assert abs(got - 1 / math.cos(2 * math.pi * j * k / n)) < 1e-9
    if n in (3, 5, 7):
        mat, _ = build_cyclotomic("cot_jk", n=n)
        for j in range(1, h + 1):
            for k in range(1, h + 1):
                got = embed_complex(mat.entry(j, k)) * (1j ** 1)
                want = 1 / math.tan(math.pi * j * k / n)
                assert abs(got - want) < 1e-9


def test_sec2_diff_entries_are_true_values():
    n = 5
    mat, scale = build_cyclotomic("sec2_diff", n=n)
    assert scale == Scale(0, 0)
    for j in range(1, n + 1):
        for k in range(1, n + 1):
            want = 1 / math.cos(math.pi * (j - k) / n) ** 2
            assert abs(embed_complex(mat.entry(j, k)) - want) < 1e-9
    mat2, _ = build_cyclotomic("tan2_diff", n=n)
    assert mat2.entry(1, 1).as_rational() == 0


def test_recip_root_diff_sizes():
    for size_kw, want in (({"size": 5}, 5), ({"size": 4}, 4), ({}, 5)):
        mat, _ = build_cyclotomic("recip_root_diff", n=5, **size_kw)
        assert mat.n == want
        assert all(mat.entry(j, j).is_zero() for j in range(1, want + 1))
    with pytest.raises(DomainError):
        build_cyclotomic("recip_root_diff", n=5, size=3)


def test_familyspec_roundtrip():
    spec = FamilySpec.parse("linear:d=2,p=7,range=1..p")
    assert str(spec) == "linear:d=2,p=7,range=1..p"
    mat, scale = build_family(spec)
    assert mat.entry(1, 1) == 3
    spec2 = FamilySpec.parse("cauchy_root:n=3,x=1/2")
    assert spec2.params == (("n", 3), ("x", Rat(1, 2)))
    mat2, _ = build_family("cos2:n=9")
    assert mat2.n == 4
    with pytest.raises(DomainError):
        FamilySpec.parse("nosuch:n=3")
    with pytest.raises(DomainError):
        FamilySpec.parse("linear:p")


def test_qabs_determinant_example():
    from permarith.matrices import det_divfree
    one_plus_q = LPoly({0: 1, 1: 1})
    assert det_divfree(build_qpoly("qabs", n=4, shift=1)) == one_plus_q ** 2
