"""Generic exact permanents and determinants over any ring tag.

per_ryser walks the 2^n - 1 column subsets in Gray-code order, maintaining
row sums incrementally (one column toggled per step).  The subset range can
be partitioned into contiguous blocks; each block rebuilds its row sums from
its first subset, so partial results are exact and their sum is independent
of the partitioning - that is what makes parallel execution deterministic.

det_divfree is Bird's iterated-matrix-product determinant (only +, -, *),
valid over rings with zero divisors such as Z/p^2.  det_field is ordinary
elimination with exact pivots for genuine fields.
"""

from __future__ import annotations

import operator
from concurrent.futures import ThreadPoolExecutor
from functools import reduce
from itertools import permutations

from .errors import DomainError, SizeLimitError, UnsupportedRingError
from .rings import Ring

NAIVE_LIMIT = 9


class Mat:
    """Immutable dense square matrix over a tagged ring."""

    __slots__ = ("ring", "n", "rows")

    def __init__(self, ring: Ring, rows):
        rows = tuple(tuple(r) for r in rows)
        n = len(rows)
        if n == 0:
            raise DomainError("empty matrix")
        if any(len(r) != n for r in rows):
            raise DomainError("matrix must be square")
        self.ring = ring
        self.n = n
        self.rows = rows

    @classmethod
    def from_fn(cls, ring: Ring, n: int, fn) -> "Mat":
        """Entries fn(j, k) with 1-based indices."""
        return cls(ring, [[fn(j, k) for k in range(1, n + 1)]
                          for j in range(1, n + 1)])

    def entry(self, j: int, k: int):
        """1-based access."""
        return self.rows[j - 1][k - 1]

    def columns(self) -> list[list]:
        return [[self.rows[i][k] for i in range(self.n)] for k in range(self.n)]

    def transpose(self) -> "Mat":
        return Mat(self.ring, list(zip(*self.rows)))

    def map_entries(self, fn) -> "Mat":
        return Mat(self.ring, [[fn(x) for x in row] for row in self.rows])

    def __eq__(self, other):
        return (isinstance(other, Mat) and other.n == self.n
                and other.rows == self.rows)

    __hash__ = None

    def __repr__(self):
        return f"Mat({self.ring.name}, {self.n}x{self.n})"


def zero_diagonal(mat: Mat) -> Mat:
    """Copy with ring zeros on the diagonal; its permanent/determinant sum
    over derangements only, since any fixed point picks up a zero factor."""
    z = mat.ring.zero
    return Mat(mat.ring, [[z if i == k else x for k, x in enumerate(row)]
                          for i, row in enumerate(mat.rows)])


def mask(mat: Mat, predicate) -> Mat:
    """Zero out entries where predicate(j, k, entry) holds (1-based j, k)."""
    z = mat.ring.zero
    return Mat(mat.ring,
               [[z if predicate(i + 1, k + 1, x) else x
                 for k, x in enumerate(row)]
                for i, row in enumerate(mat.rows)])


# ---------------------------------------------------------------------------
# Permanents
# ---------------------------------------------------------------------------

def _ryser_block(cols, n, zero, s_lo, s_hi):
    """Signed Gray-code partial sum over subset indices s in [s_lo, s_hi)."""
    prev = (s_lo - 1) ^ ((s_lo - 1) >> 1)
    row = [zero] * n
    for k in range(n):
        if prev >> k & 1:
            col = cols[k]
            row = [r + c for r, c in zip(row, col)]
    parity = prev.bit_count() & 1
    acc = zero
    mul = operator.mul
    for s in range(s_lo, s_hi):
        k = (s & -s).bit_length() - 1
        col = cols[k]
        if prev >> k & 1:
            row = [r - c for r, c in zip(row, col)]
            prev &= ~(1 << k)
        else:
            row = [r + c for r, c in zip(row, col)]
            prev |= 1 << k
        parity ^= 1
        prod = reduce(mul, row)
        acc = acc - prod if parity else acc + prod
    return acc


def per_ryser(mat: Mat, threads: int = 1, partitions=None):
    """Permanent via Ryser's inclusion-exclusion with Gray-code updates.

    `partitions` may be an int (number of contiguous blocks) or an explicit
    list of (lo, hi) ranges covering [1, 2^n); block results are summed in
    block order, so the value never depends on the partitioning or on
    `threads`.
    """
    n = mat.n
    cols = mat.columns()
    zero = mat.ring.zero
    top = 1 << n
    if partitions is None:
        partitions = 1 if threads <= 1 else 4 * threads
    if isinstance(partitions, int):
        count = max(1, min(partitions, top - 1))
        step = (top - 1 + count - 1) // count
        ranges = [(lo, min(lo + step, top)) for lo in range(1, top, step)]
    else:
        ranges = list(partitions)
        covered = sorted(ranges)
        if (not covered or covered[0][0] != 1 or covered[-1][1] != top
                or any(covered[i][1] != covered[i + 1][0]
                       for i in range(len(covered) - 1))):
            raise DomainError("partitions must tile the range [1, 2^n)")
    if threads > 1 and len(ranges) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(
                lambda r: _ryser_block(cols, n, zero, r[0], r[1]), ranges))
    else:
        parts = [_ryser_block(cols, n, zero, lo, hi) for lo, hi in ranges]
    acc = parts[0]
    for p in parts[1:]:
        acc = acc + p
    return acc if n % 2 == 0 else -acc


def per_naive(mat: Mat):
    """Permanent as the literal sum over all n! permutations (oracle, n <= 9)."""
    n = mat.n
    if n > NAIVE_LIMIT:
        raise SizeLimitError(f"naive permanent limited to n <= {NAIVE_LIMIT}")
    rows = mat.rows
    acc = mat.ring.zero
    mul = operator.mul
    for perm in permutations(range(n)):
        acc = acc + reduce(mul, [rows[j][perm[j]] for j in range(n)])
    return acc


def per_sum_matrix(u, v):
    """Exact integer permanent of the rank-2 matrix [u_j + v_k].

    Ryser's row sums depend only on (|S|, sum of v over S), so the subset
    enumeration collapses to a subset-sum counting table: far cheaper than
    2^n when n is around 20.  Equals per_ryser on the same matrix.
    """
    u = list(u)
    v = list(v)
    n = len(u)
    if n == 0 or len(v) != n:
        raise DomainError("need two equal-length nonempty integer vectors")
    ways: list[dict[int, int]] = [dict() for _ in range(n + 1)]
    ways[0][0] = 1
    for x in v:
        for s in range(n - 1, -1, -1):
            level = ways[s]
            if level:
                nxt = ways[s + 1]
                for sig, cnt in level.items():
                    key = sig + x
                    nxt[key] = nxt.get(key, 0) + cnt
    acc = 0
    for s in range(1, n + 1):
        sub = 0
        for sig, cnt in ways[s].items():
            prod = 1
            for uj in u:
                prod *= s * uj + sig
            sub += cnt * prod
        acc += -sub if s & 1 else sub
    return acc if n % 2 == 0 else -acc


# ---------------------------------------------------------------------------
# Determinants
# ---------------------------------------------------------------------------

def det_divfree(mat: Mat):
    """Determinant using only +, -, * (Bird's algorithm); safe over rings
    with zero divisors."""
    n = mat.n
    if n == 1:
        return mat.rows[0][0]
    zero = mat.ring.zero
    x = [list(r) for r in mat.rows]
    for _ in range(n - 1):
        # mu(x): strict upper triangle kept, diagonal entry i replaced by
        # -(x[i+1][i+1] + ... + x[n-1][n-1]), lower triangle zeroed.
        mu = [[zero] * n for _ in range(n)]
        tail = zero
        for i in range(n - 1, -1, -1):
            mu[i][i] = tail
            tail = tail - x[i][i]
            for j in range(i + 1, n):
                mu[i][j] = x[i][j]
        nxt = [[zero] * n for _ in range(n)]
        for i in range(n):
            mrow = mu[i]
            out = nxt[i]
            for t in range(i, n):
                c = mrow[t]
                if c == zero:
                    continue
                arow = mat.rows[t]
                for j in range(n):
                    out[j] = out[j] + c * arow[j]
        x = nxt
    return x[0][0] if n % 2 else -x[0][0]


def det_field(mat: Mat):
    """Determinant by Gaussian elimination with exact inversion; fields only."""
    ring = mat.ring
    if not ring.is_field:
        raise UnsupportedRingError(f"{ring.name} is not a field")
    n = mat.n
    a = [list(r) for r in mat.rows]
    zero = ring.zero
    det = ring.one
    sign = 1
    for col in range(n):
        pivot_row = None
        for r in range(col, n):
            if not a[r][col] == zero:
                pivot_row = r
                break
        if pivot_row is None:
            return zero
        if pivot_row != col:
            a[col], a[pivot_row] = a[pivot_row], a[col]
            sign = -sign
        pivot = a[col][col]
        det = det * pivot
        inv_p = ring.inv(pivot)
        for r in range(col + 1, n):
            factor = a[r][col]
            if factor == zero:
                continue
            scaled = factor * inv_p
            a[r] = [x - scaled * y for x, y in zip(a[r], a[col])]
    return det if sign == 1 else -det
