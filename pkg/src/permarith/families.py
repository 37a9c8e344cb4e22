"""Constructors for every structured matrix family under study.

Families are grouped by scalar ring (integer, Laurent-polynomial, cyclotomic,
rational).  Trigonometric families are built over Q(zeta) with powers of 2
and i kept OUT of the entries, in a Scale record: folding i into entries
would force order lcm(4, n) on every matrix, while for odd n all i-powers
collapse to signs after the permanent is taken.

Convention: per(true matrix) = 2^scale.pow2 * i^scale.ipow * per(built Mat).
"""

from __future__ import annotations

from dataclasses import dataclass

from .cyclotomic import CyclotomicField, FqRoot, find_fq_root
from .errors import DomainError, SingularFamilyError
from .matrices import Mat
from .ntheory import is_prime
from .rings import QPOLY, QQ, ZZ, Rat, qint

LINEAR_RANGES = ("1..p-1", "1..p", "0..p-1")
QUAD_RANGES = ("1..h", "0..h")


@dataclass(frozen=True)
class Scale:
    """Power of 2 and residue class mod 4 of the power of i relating the
    permanent of the built matrix to the permanent of the true matrix."""

    pow2: int = 0
    ipow: int = 0


def _require(cond: bool, family: str, msg: str):
    if not cond:
        raise DomainError(f"{family}: {msg}")


def _indices(range_name: str, p: int) -> list[int]:
    if range_name == "1..p-1":
        return list(range(1, p))
    if range_name == "1..p":
        return list(range(1, p + 1))
    if range_name == "0..p-1":
        return list(range(p))
    if range_name == "1..h":
        return list(range(1, (p - 1) // 2 + 1))
    if range_name == "0..h":
        return list(range((p - 1) // 2 + 1))
    raise DomainError(f"unknown index range {range_name!r}")


def sum_structure(family: str, **params):
    """(u, v) vectors for rank-2 families with entries u_j + v_k, else None.

    per[u_j + v_k] collapses to a subset-sum count (see per_sum_matrix), which
    is what makes the mod-p^2 congruence grids affordable.
    """
    if family == "linear":
        idx = _indices(params.get("range", "1..p-1"), params["p"])
        d = params["d"]
        return idx, [d * k for k in idx]
    if family == "quad":
        idx = _indices(params.get("range", "1..h"), params["p"])
        d = params["d"]
        return [j * j for j in idx], [d * k * k for k in idx]
    return None


# ---------------------------------------------------------------------------
# Integer families
# ---------------------------------------------------------------------------

def build_integer(family: str, **params) -> Mat:
    if family == "floor_shift":
        n = params["n"]
        _require(n >= 1, family, f"n must be >= 1, got {n}")
        return Mat.from_fn(ZZ, n, lambda j, k: (j + k - 1) // n)
    if family == "linear":
        p, d = params["p"], params["d"]
        rng = params.get("range", "1..p-1")
        _require(is_prime(p) and p % 2, family, f"p must be an odd prime, got {p}")
        _require(d % p != 0, family, f"d must be nonzero mod p, got d={d}")
        _require(rng in LINEAR_RANGES, family, f"bad range {rng!r}")
        idx = _indices(rng, p)
        return Mat(ZZ, [[j + d * k for k in idx] for j in idx])
    if family == "quad":
        p, d = params["p"], params["d"]
        rng = params.get("range", "1..h")
        _require(is_prime(p) and p % 2, family, f"p must be an odd prime, got {p}")
        _require(d % p != 0, family, f"d must be nonzero mod p, got d={d}")
        _require(rng in QUAD_RANGES, family, f"bad range {rng!r}")
        idx = _indices(rng, p)
        return Mat(ZZ, [[j * j + d * k * k for k in idx] for j in idx])
    if family == "abs":
        n, shift = params["n"], params.get("shift", 0)
        _require(n >= 1, family, f"n must be >= 1, got {n}")
        _require(shift in (0, 1), family, f"shift must be 0 or 1, got {shift}")
        return Mat.from_fn(ZZ, n, lambda j, k: abs(j - k + shift))
    if family == "floor_2jk":
        n = params["n"]
        _require(n >= 1, family, f"n must be >= 1, got {n}")
        return Mat.from_fn(ZZ, n, lambda j, k: (2 * j - k) // n)
    raise DomainError(f"unknown integer family {family!r}")


# ---------------------------------------------------------------------------
# Laurent-polynomial families
# ---------------------------------------------------------------------------

def build_qpoly(family: str, **params) -> Mat:
    n = params["n"]
    _require(n >= 1, family, f"n must be >= 1, got {n}")
    if family == "qfloor":
        return Mat.from_fn(QPOLY, n, lambda j, k: qint((j + k) // n))
    if family == "qabs":
        shift = params.get("shift", 0)
        _require(shift in (0, 1), family, f"shift must be 0 or 1, got {shift}")
        return Mat.from_fn(QPOLY, n, lambda j, k: qint(abs(j - k + shift)))
    if family == "qfloor_gen":
        a = params["a"]
        return Mat.from_fn(QPOLY, n,
                           lambda j, k: qint((a * j - (a + 1) * k) // n))
    if family == "qceil_gen":
        a = params["a"]
        return Mat.from_fn(QPOLY, n,
                           lambda j, k: qint(-((-((a + 1) * j - a * k)) // n)))
    raise DomainError(f"unknown q-polynomial family {family!r}")


# ---------------------------------------------------------------------------
# Cyclotomic families
# ---------------------------------------------------------------------------

def _parse_x(x):
    if isinstance(x, str):
        return Rat(x)
    return x


def _fq_backend(family: str, params) -> FqRoot | None:
    backend = params.get("backend", "cyc")
    if backend == "cyc":
        return None
    if backend == "fq":
        return params.get("fq") or find_fq_root(params["n"])
    raise DomainError(f"{family}: unknown backend {backend!r}")


def build_cyclotomic(family: str, **params) -> tuple[Mat, Scale]:
    n = params["n"]
    _require(n >= 1, family, f"n must be >= 1, got {n}")

    if family == "root_linear":
        xs = [_parse_x(x) for x in params["x"]]
        _require(len(xs) == n, family, f"need {n} values x_1..x_n")
        fq = _fq_backend(family, params)
        if fq is not None:
            ring = fq.ring()
            one = ring.one
            return Mat(ring, [[one - fq.zeta_pow(j) * int(x)
                               for x in xs] for j in range(1, n + 1)]), Scale()
        ring = CyclotomicField(n)
        return Mat(ring, [[(1 - ring.zeta(j) * x).demoted() for x in xs]
                          for j in range(1, n + 1)]), Scale()

    if family == "root_exp_shift":
        _require(n >= 2, family, f"n must be >= 2, got {n}")
        x = _parse_x(params["x"])
        fq = _fq_backend(family, params)
        if fq is not None:
            ring = fq.ring()
            return Mat(ring, [[ring.one + fq.zeta_pow(j + k) * int(x)
                               for k in range(1, n)]
                              for j in range(1, n)]), Scale()
        ring = CyclotomicField(n)
        table = {r: (1 + ring.zeta(r) * x).demoted() for r in range(n)}
        return Mat(ring, [[table[(j + k) % n] for k in range(1, n)]
                          for j in range(1, n)]), Scale()

    if family == "cauchy_root":
        x = _parse_x(params["x"])
        fq = _fq_backend(family, params)
        if fq is not None:
            ring = fq.ring()
            xel = ring.from_int(int(x))
            if xel ** n == ring.one:
                raise SingularFamilyError(f"{family}: x^n = 1 for x={x}, n={n}")
            table = {r: (ring.one - fq.zeta_pow(r) * xel).inverse()
                     for r in range(n)}
            return Mat(ring, [[table[(j - k) % n] for k in range(1, n + 1)]
                              for j in range(1, n + 1)]), Scale()
        if x ** n == 1:
            raise SingularFamilyError(f"{family}: x^n = 1 for x={x}, n={n}")
        ring = CyclotomicField(n)
        table = {r: (1 - ring.zeta(r) * x).inverse().demoted() for r in range(n)}
        return Mat(ring, [[table[(j - k) % n] for k in range(1, n + 1)]
                          for j in range(1, n + 1)]), Scale()

    if family == "tan_shift":
        _require(n % 2 == 1 and n >= 3, family, f"n must be odd >= 3, got {n}")
        ring = CyclotomicField(n)
        table = {r: ((ring.zeta(r) - 1)
                     * (ring.zeta(r) + 1).inverse()).demoted()
                 for r in range(n)}
        return Mat(ring, [[table[(j + k) % n] for k in range(1, n)]
                          for j in range(1, n)]), Scale(0, (n - 1) % 4)

    if family in ("cos2", "sec2", "sin2", "csc2", "tan_jk", "cot_jk"):
        _require(n % 2 == 1 and n >= 3, family, f"n must be odd >= 3, got {n}")
        if family in ("csc2", "cot_jk"):
            _require(is_prime(n), family,
                     f"n must be prime (composite n hits zero entries), got {n}")
        h = (n - 1) // 2
        ring = CyclotomicField(n)
        residues = {(j * k) % n for j in range(1, h + 1) for k in range(1, h + 1)}
        if family == "cos2":
            table = {r: ring.zeta(r) + ring.zeta(-r) for r in residues}
            scale = Scale(-h, 0)
        elif family == "sec2":
            table = {r: (ring.zeta(r) + ring.zeta(-r)).inverse().demoted()
                     for r in residues}
            scale = Scale(h, 0)
        elif family == "sin2":
            table = {r: ring.zeta(r) - ring.zeta(-r) for r in residues}
            scale = Scale(-h, (-h) % 4)
        elif family == "csc2":
            table = {r: (ring.zeta(r) - ring.zeta(-r)).inverse().demoted()
                     for r in residues}
            scale = Scale(h, h % 4)
        elif family == "tan_jk":
            table = {r: ((ring.zeta(r) - 1)
                         * (ring.zeta(r) + 1).inverse()).demoted()
                     for r in residues}
            scale = Scale(0, (3 * h) % 4)
        else:  # cot_jk
            table = {r: ((ring.zeta(r) + 1)
                         * (ring.zeta(r) - 1).inverse()).demoted()
                     for r in residues}
            scale = Scale(0, h % 4)
        return Mat(ring, [[table[(j * k) % n] for k in range(1, h + 1)]
                          for j in range(1, h + 1)]), scale

    if family in ("sec2_diff", "tan2_diff"):
        _require(n % 2 == 1, family, f"n must be odd, got {n}")
        m = 2 * n
        ring = CyclotomicField(m)
        table = {}
        for r in range(m):
            c = ring.zeta(r) + ring.zeta(-r)
            table[r] = ((c * c).inverse() * 4).demoted()
            if family == "tan2_diff":
                table[r] = (table[r] - 1).demoted()
        return Mat(ring, [[table[(j - k) % m] for k in range(1, n + 1)]
                          for j in range(1, n + 1)]), Scale()

    if family == "recip_root_diff":
        size = params.get("size", n)
        _require(size in (n, n - 1), family,
                 f"size must be n or n-1, got {size}")
        _require(size >= 1, family, "empty matrix")
        ring = CyclotomicField(n)
        table = {r: (1 - ring.zeta(r)).inverse().demoted()
                 for r in range(1, n)}
        zero = ring.zero
        return Mat(ring, [[zero if j == k else table[(j - k) % n]
                           for k in range(1, size + 1)]
                          for j in range(1, size + 1)]), Scale()

    if family == "cot_ratio":
        size = params.get("size", n - 1)
        _require(size in (n, n - 1), family,
                 f"size must be n or n-1, got {size}")
        _require(size >= 1, family, "empty matrix")
        ring = CyclotomicField(n)
        table = {r: ((1 + ring.zeta(r))
                     * (1 - ring.zeta(r)).inverse()).demoted()
                 for r in range(1, n)}
        zero = ring.zero
        return Mat(ring, [[zero if j == k else table[(j - k) % n]
                           for k in range(1, size + 1)]
                          for j in range(1, size + 1)]), Scale()

    raise DomainError(f"unknown cyclotomic family {family!r}")



# ---------------------------------------------------------------------------
# Rational families
# ---------------------------------------------------------------------------

def build_rational(family: str, **params) -> Mat:
    p = params["p"]
    _require(is_prime(p) and p % 2, family, f"p must be an odd prime, got {p}")
    zero = Rat(0)
    if family == "inv_sum_sq":
        _require(p % 4 == 3, family,
                 f"p = 3 (mod 4) keeps j^2+k^2 off zero, got p={p}")
        h = (p - 1) // 2
        return Mat(QQ, [[Rat(1, j * j + k * k) for k in range(1, h + 1)]
                        for j in range(1, h + 1)])
    if family == "recip_ajk":
        a = params["a"]
        return Mat(QQ, [[zero if (a + j * k) % p == 0 else Rat(1, a + j * k)
                         for k in range(1, p)] for j in range(1, p)])
    if family == "recip_aj_k":
        a = params["a"]
        _require(a % p != 0, family, f"a must be nonzero mod p, got a={a}")
        return Mat(QQ, [[zero if (a * j + k) % p == 0 else Rat(1, a * j + k)
                         for k in range(1, p + 1)] for j in range(1, p + 1)])
    if family == "inv_sqdiff":
        h = (p - 1) // 2
        _require(h >= 1, family, "empty matrix")
        return Mat(QQ, [[zero if j == k else Rat(1, j * j - k * k)
                         for k in range(1, h + 1)] for j in range(1, h + 1)])
    raise DomainError(f"unknown rational family {family!r}")


# ---------------------------------------------------------------------------
# FamilySpec: canonical textual form used by the CLI
# ---------------------------------------------------------------------------

_BUILDERS = {
    "floor_shift": build_integer, "linear": build_integer,
    "quad": build_integer, "abs": build_integer, "floor_2jk": build_integer,
    "qfloor": build_qpoly, "qabs": build_qpoly,
    "qfloor_gen": build_qpoly, "qceil_gen": build_qpoly,
    "root_linear": build_cyclotomic, "root_exp_shift": build_cyclotomic,
    "cauchy_root": build_cyclotomic, "tan_shift": build_cyclotomic,
    "cos2": build_cyclotomic, "sec2": build_cyclotomic,
    "sin2": build_cyclotomic, "csc2": build_cyclotomic,
    "tan_jk": build_cyclotomic, "cot_jk": build_cyclotomic,
    "sec2_diff": build_cyclotomic, "tan2_diff": build_cyclotomic,
    "recip_root_diff": build_cyclotomic, "cot_ratio": build_cyclotomic,
    "inv_sum_sq": build_rational, "recip_ajk": build_rational,
    "recip_aj_k": build_rational, "inv_sqdiff": build_rational,
}

FAMILY_NAMES = tuple(sorted(_BUILDERS))


@dataclass(frozen=True)
class FamilySpec:
    """A family name plus parameters; textual form `family:key=value,...`."""

    family: str
    params: tuple  # sorted (key, value) pairs

    @classmethod
    def make(cls, family: str, **params) -> "FamilySpec":
        if family not in _BUILDERS:
            raise DomainError(f"unknown family {family!r}")
        return cls(family, tuple(sorted(params.items())))

    @classmethod
    def parse(cls, text: str) -> "FamilySpec":
        family, _, rest = text.partition(":")
        params = {}
        if rest:
            for piece in rest.split(","):
                key, _, value = piece.partition("=")
                if not key or not value:
                    raise DomainError(f"bad family parameter {piece!r}")
                params[key.strip()] = _parse_value(value.strip())
        return cls.make(family.strip(), **params)

    def __str__(self):
        if not self.params:
            return self.family
        body = ",".join(f"{k}={_format_value(v)}" for k, v in self.params)
        return f"{self.family}:{body}"

    def build(self):
        """Build the matrix; cyclotomic families return (Mat, Scale)."""
        return _BUILDERS[self.family](self.family, **dict(self.params))


def _parse_value(text: str):
    if ";" in text:
        return tuple(_parse_value(t) for t in text.split(";"))
    if "/" in text:
        return Rat(text)
    try:
        return int(text)
    except ValueError:
        return text


def _format_value(v) -> str:
    if isinstance(v, tuple):
        return ";".join(_format_value(x) for x in v)
    return str(v)


def build_family(spec) -> tuple[Mat, Scale]:
    """Uniform entry point: always returns (Mat, Scale)."""
    if isinstance(spec, str):
        spec = FamilySpec.parse(spec)
    built = spec.build()
    if isinstance(built, tuple):
        return built
    return built, Scale()
