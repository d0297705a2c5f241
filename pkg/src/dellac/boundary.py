"""Dellac boards with trimmed corners and their q-counting polynomials.

A board of size n has n columns and 2n rows, two dots per column and one per
row.  Two partitions cut admissible boxes away: ``top`` removes leading boxes
from the highest rows, ``bottom`` removes trailing boxes from the lowest
rows.  When both partitions are the staircase (n-1, ..., 1) the admissible
region is exactly the window of the square-grid family at (1, 2, n), so these
boards interpolate between that family and the free two-dots-per-column
boards.

The q-partition function sums q^inv over all boards with given boundaries.
It satisfies a family of exact recurrences (expansion by the top row, part
shifts, splitting a doubled part) which this module verifies by enumerating
both sides; a memoized dynamic program over partitions evaluates the
staircase-bottom family without enumeration.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Iterable, Iterator, Sequence

from .qpoly import ONE, ZERO, QPoly, q_binomial, q_int
from .words import inv_word, invert

Partition = tuple[int, ...]


class PartitionOutOfStaircase(ValueError):
    """A boundary partition does not fit on the board."""


class HypothesisViolated(ValueError):
    """Recurrence arguments break the hypothesis of the named identity."""


# ---------------------------------------------------------------------------
# Partition helpers
# ---------------------------------------------------------------------------

def normalize(parts: Iterable[int]) -> Partition:
    """Drop zero parts and check the result is weakly decreasing."""
    out = tuple(int(p) for p in parts if p != 0)
    for a, b in zip(out, out[1:]):
        if a < b:
            raise ValueError(f"parts must be weakly decreasing, got {out}")
    if out and out[-1] < 0:
        raise ValueError("parts must be nonnegative")
    return out


def oplus(*pieces: Iterable[int] | int) -> Partition:
    """Concatenate parts; the result must still be a partition."""
    flat: list[int] = []
    for piece in pieces:
        if isinstance(piece, int):
            flat.append(piece)
        else:
            flat.extend(int(x) for x in piece)
    return normalize(flat)


def minus_one(lam: Sequence[int]) -> Partition:
    """Subtract 1 from every part, dropping parts that reach zero."""
    return normalize(p - 1 for p in lam)


def staircase(k: int) -> Partition:
    """(k, k-1, ..., 1); empty for k <= 0."""
    return tuple(range(k, 0, -1))


def staircase_gap(k: int, i: int) -> Partition:
    """The staircase with part i removed; i = 0 keeps all parts."""
    if i == 0:
        return staircase(k)
    if not 1 <= i <= k:
        raise ValueError(f"no part {i} in the staircase of size {k}")
    return tuple(p for p in range(k, 0, -1) if p != i)


def partitions_in_staircase(k: int) -> Iterator[Partition]:
    """All partitions fitting inside staircase(k), largest parts first."""
    def rec(prefix: list[int], i: int) -> Iterator[Partition]:
        yield tuple(prefix)
        if i > k:
            return
        cap = min(k + 1 - i, prefix[-1] if prefix else k)
        for p in range(cap, 0, -1):
            prefix.append(p)
            yield from rec(prefix, i + 1)
            prefix.pop()

    return rec([], 1)


def _drop(parts: Sequence[int], *positions: int) -> Partition:
    """Remove the given one-based positions and renormalize."""
    return normalize(v for k, v in enumerate(parts, start=1)
                     if k not in positions)


def _padded(lam: Partition, length: int) -> tuple[int, ...]:
    if len(lam) > length:
        raise ValueError(f"partition {lam} has more than {length} parts")
    return lam + (0,) * (length - len(lam))


# ---------------------------------------------------------------------------
# Boards
# ---------------------------------------------------------------------------

def _check_boundaries(n: int, top: Partition, bottom: Partition) -> None:
    if n < 0:
        raise ValueError("board size must be nonnegative")
    if top and (top[0] > n or len(top) > 2 * n):
        raise PartitionOutOfStaircase(
            f"top partition {top} does not fit on a board of size {n}")
    if bottom and (bottom[0] > n or len(bottom) > max(n - 1, 0)):
        raise PartitionOutOfStaircase(
            f"bottom partition {bottom} does not fit on a board of size {n}")


def allowed_rows(n: int, top: Partition = (),
                 bottom: Partition | None = None) -> tuple[Partition, ...]:
    """Admissible rows (bottom-based) of every column, left to right.

    ``top`` forbids, in the i-th highest row, the leftmost top_i columns;
    ``bottom`` forbids, in the r-th lowest row (r < n), the rightmost
    bottom_r columns.  ``bottom=None`` means the staircase.
    """
    top = normalize(top)
    bottom = staircase(n - 1) if bottom is None else normalize(bottom)
    _check_boundaries(n, top, bottom)
    cols = []
    for j in range(1, n + 1):
        rows = []
        for r in range(1, 2 * n + 1):
            i = 2 * n + 1 - r
            if i <= len(top) and j <= top[i - 1]:
                continue
            if r <= len(bottom) and r <= n - 1 and j >= n + 1 - bottom[r - 1]:
                continue
            rows.append(r)
        cols.append(tuple(rows))
    return tuple(cols)


@dataclass(frozen=True)
class BoundaryConfig:
    """A filled board: two dots per column, one per row, boundaries kept."""

    n: int
    top: Partition
    bottom: Partition
    columns: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        allowed = allowed_rows(self.n, self.top, self.bottom)
        if len(self.columns) != self.n:
            raise ValueError(f"expected {self.n} columns")
        seen: set[int] = set()
        for j, col in enumerate(self.columns, start=1):
            if len(col) != 2 or col[0] >= col[1]:
                raise ValueError(f"column {j} needs two increasing rows")
            for r in col:
                if r in seen:
                    raise ValueError(f"row {r} holds two dots")
                if r not in allowed[j - 1]:
                    raise ValueError(f"row {r} of column {j} is forbidden")
                seen.add(r)

    @classmethod
    def from_top_dots(cls, n: int, top: Iterable[int], bottom: Iterable[int],
                      dots: Iterable[tuple[int, int]]) -> "BoundaryConfig":
        """Build from (row-from-top, column) dot positions."""
        cols: list[list[int]] = [[] for _ in range(n)]
        for i, j in dots:
            cols[j - 1].append(2 * n + 1 - i)
        return cls(n, normalize(top), normalize(bottom),
                   tuple(tuple(sorted(c)) for c in cols))

    def top_dots(self) -> tuple[tuple[int, int], ...]:
        """Dots as (row-from-top, column), row-major from the top."""
        dots = [(2 * self.n + 1 - r, j) for r, j in self.dots_column_major()]
        return tuple(sorted(dots))

    def dots_column_major(self) -> tuple[tuple[int, int], ...]:
        """(row, column) pairs, columns left to right, lower dot first."""
        return tuple((r, j) for j, col in enumerate(self.columns, start=1)
                     for r in col)


def inversions(c: BoundaryConfig) -> int:
    """Dot pairs with one dot strictly higher and strictly left of the
    other."""
    dots = c.dots_column_major()
    total = 0
    for a in range(len(dots)):
        ra, ja = dots[a]
        for b in range(a + 1, len(dots)):
            rb, jb = dots[b]
            if jb > ja and rb < ra:
                total += 1
    return total


def enumerate_boundary(n: int, top: Iterable[int] = (),
                       bottom: Iterable[int] | None = None,
                       ) -> Iterator[BoundaryConfig]:
    """All boards with the given boundaries, in lexicographic column order.

    ``bottom=None`` means the staircase (n-1, ..., 1).
    """
    top = normalize(top)
    bottom = staircase(n - 1) if bottom is None else normalize(bottom)
    allowed = allowed_rows(n, top, bottom)
    # last admissible column of every row, for dead-end pruning
    last_col = {r: j for j, rows in enumerate(allowed, start=1) for r in rows}
    columns: list[tuple[int, int]] = []

    def rec(j: int, used: set[int]) -> Iterator[BoundaryConfig]:
        if j > n:
            if len(used) == 2 * n:
                yield BoundaryConfig(n, top, bottom, tuple(columns))
            return
        if any(last_col.get(r, 0) < j
               for r in range(1, 2 * n + 1) if r not in used):
            return
        free = [r for r in allowed[j - 1] if r not in used]
        for pair in combinations(free, 2):
            columns.append(pair)
            used.update(pair)
            yield from rec(j + 1, used)
            used.difference_update(pair)
            columns.pop()

    return rec(1, set())


def count_boundary(n: int, top: Iterable[int] = (),
                   bottom: Iterable[int] | None = None) -> int:
    return sum(1 for _ in enumerate_boundary(n, top, bottom))


# ---------------------------------------------------------------------------
# The q-partition function
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _qpf(n: int, top: Partition, bottom: Partition | None) -> QPoly:
    counts: dict[int, int] = {}
    for c in enumerate_boundary(n, top, bottom):
        k = inversions(c)
        counts[k] = counts.get(k, 0) + 1
    if not counts:
        return ZERO
    out = [0] * (max(counts) + 1)
    for k, v in counts.items():
        out[k] = v
    return QPoly(out)


def q_partition_function(n: int, top: Iterable[int] = (),
                         bottom: Iterable[int] | None = None) -> QPoly:
    """Sum of q^inversions over all boards, by direct enumeration."""
    return _qpf(n, normalize(top),
                None if bottom is None else normalize(bottom))


def max_inv(n: int, top: Iterable[int] = ()) -> int:
    """Largest inversion count over staircase-bottom boards:
    n(n-1) - |top|."""
    return n * (n - 1) - sum(normalize(top))


@lru_cache(maxsize=None)
def _qpf_dp(n: int, lam: Partition) -> QPoly:
    if lam and lam[0] >= n:
        return ZERO
    if n <= 1:
        return ONE
    padded = _padded(lam, n + 1)
    total = ZERO
    if lam and lam[0] == n - 1:
        for i in range(2, n + 2):
            total = total + _qpf_dp(n - 1, _drop(padded, 1, i)).shifted(i - 2)
    else:
        for i, j in combinations(range(1, n + 2), 2):
            total = total + _qpf_dp(n - 1, _drop(padded, i, j)).shifted(i + j - 3)
    return total


def q_partition_function_dp(n: int, top: Iterable[int] = ()) -> QPoly:
    """Enumeration-free evaluation for staircase-bottom boards.

    Expands by the top row: when the first part pins the top dot to the last
    column the expansion is linear in the removed part, otherwise quadratic
    over pairs of removed parts.
    """
    top = normalize(top)
    _check_boundaries(n, top, staircase(n - 1))
    return _qpf_dp(n, top)


def genocchi_numbers(max_n: int) -> list[int]:
    """Counts of staircase boards for n = 1 .. max_n (1, 2, 7, 38, 295...)."""
    return [q_partition_function_dp(n, staircase(n - 1)).at_one()
            for n in range(1, max_n + 1)]


# ---------------------------------------------------------------------------
# The boundary word and its statistic
# ---------------------------------------------------------------------------

def column_slack(n: int, top: Iterable[int] = (),
                 bottom: Iterable[int] | None = None) -> int:
    """Largest column admissibility count minus (n + 1); 0 on staircases."""
    return max(len(rows) for rows in allowed_rows(n, top, bottom)) - n - 1


def sigma_word(c: BoundaryConfig) -> tuple[int, ...]:
    """Label word of a board, padded by slack-many even and odd labels.

    Lower rows r <= n carry the even labels 2(r + s + 1), upper rows the odd
    labels 2(r - n) - 1, where s is the column slack; the prefix supplies the
    smallest evens and the suffix the largest odds, making the whole word a
    permutation of [2(n + s + 1)].
    """
    n = c.n
    s = column_slack(n, c.top, c.bottom)
    w1 = tuple(range(2, 2 * s + 3, 2))
    w2 = tuple(range(2 * n + 1, 2 * n + 2 * s + 2, 2))
    mid = tuple(2 * (r + s + 1) if r <= n else 2 * (r - n) - 1
                for r, _ in c.dots_column_major())
    return w1 + mid + w2


def boundary_st(c: BoundaryConfig) -> int:
    """The statistic of the inverse of the label word.

    With tau the inverse word and L half its length: L^2, minus the letters
    of tau at even positions, minus the inversions of the odd-position and
    even-position subwords of tau.
    """
    tau = invert(sigma_word(c))
    half = len(tau) // 2
    odd, even = tau[0::2], tau[1::2]
    return half * half - sum(even) - inv_word(odd) - inv_word(even)


def boundary_st_check(c: BoundaryConfig) -> bool:
    """st of the inverse label word equals C(L, 2) minus the inversions."""
    half = len(sigma_word(c)) // 2
    return boundary_st(c) == comb(half, 2) - inversions(c)


# ---------------------------------------------------------------------------
# Recurrences
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RecurrenceReport:
    identity: str
    n: int
    arguments: tuple[tuple[str, object], ...]
    lhs: QPoly
    rhs: QPoly

    @property
    def ok(self) -> bool:
        return self.lhs == self.rhs


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise HypothesisViolated(message)


def _check_pinned_row(n: int, lam: Partition) -> tuple[QPoly, QPoly]:
    _require(bool(lam) and lam[0] == n - 1,
             "first part must equal n - 1")
    padded = _padded(lam, n + 1)
    lhs = q_partition_function(n, lam)
    rhs = ZERO
    for i in range(2, n + 2):
        rhs = rhs + q_partition_function(n - 1, _drop(padded, 1, i)).shifted(i - 2)
    return lhs, rhs


def _check_free_row(n: int, lam: Partition) -> tuple[QPoly, QPoly]:
    _require(not lam or lam[0] <= n - 2,
             "first part must be at most n - 2")
    padded = _padded(lam, n + 1)
    lhs = q_partition_function(n, lam)
    rhs = ZERO
    for i, j in combinations(range(1, n + 2), 2):
        rhs = rhs + q_partition_function(n - 1, _drop(padded, i, j)).shifted(i + j - 3)
    return lhs, rhs


def _check_qtriple(n: int, lam: Partition) -> tuple[QPoly, QPoly]:
    _require(n >= 2, "needs n >= 2")
    _require(not lam or lam[0] <= n - 3,
             "first part must be at most n - 3")
    lhs = (q_partition_function(n, oplus((n - 1, n - 2), lam))
           + q_partition_function(n - 1, oplus((n - 2,), lam)).shifted(n))
    rhs = q_int(3) * q_partition_function(n - 1, lam)
    return lhs, rhs


def _check_append_one(n: int, lam: Partition) -> tuple[QPoly, QPoly]:
    _require(len(lam) < 2 or lam[-2:] != (1, 1),
             "partition already ends in two unit parts")
    alpha1 = 2 * n - 2 - len(lam)
    _require(alpha1 >= 0, "partition has too many parts")
    lhs = q_partition_function(n, lam)
    rhs = (q_partition_function(n, oplus(lam, (1,)))
           + q_partition_function(n - 1, minus_one(lam)).shifted(alpha1))
    return lhs, rhs


def _shift_parts(n: int, lam: Partition, m: int, nu: Partition,
                 ) -> tuple[QPoly, QPoly, QPoly, QPoly]:
    _require(m >= 1, "the moved part must be positive")
    _require(not lam or lam[-1] >= m + 1,
             "left parts must exceed the moved part")
    _require(not nu or nu[0] <= m - 1,
             "right parts must stay below the moved part")
    mid = q_partition_function(n, oplus(lam, (m,), nu))
    down = q_partition_function(n, oplus(lam, (m - 1,), nu))
    up = q_partition_function(n, oplus(lam, (m + 1,), nu))
    rest = q_partition_function(n - 1, oplus(minus_one(lam), nu))
    return mid, down, up, rest


def _check_shift1(n: int, lam: Partition, m: int, nu: Partition,
                  ) -> tuple[QPoly, QPoly]:
    # The 1+q weighting only balances without a right tail; with one, the
    # difference of the three n-level terms is not a monomial multiple of
    # any (n-1)-level partition function (it picks up negative
    # coefficients), so nu is pinned to the empty partition here.
    _require(not nu, "the linear shift needs an empty right tail")
    alpha0 = 2 * n - 2 * m - 1 - len(lam)
    _require(alpha0 >= 0, "exponent 2n - 2m - 1 - l(lam) is negative")
    mid, down, up, rest = _shift_parts(n, lam, m, nu)
    lhs = q_int(2) * mid
    rhs = down + up.shifted(1) + rest.shifted(alpha0)
    return lhs, rhs


def _check_shift2(n: int, lam: Partition, m: int, nu: Partition,
                  ) -> tuple[QPoly, QPoly]:
    alpha = 2 * n - len(lam) - m
    _require(alpha >= 0, "exponent 2n - l(lam) - m is negative")
    mid, down, up, rest = _shift_parts(n, lam, m, nu)
    lhs = (ONE + QPoly.monomial(2)) * mid
    rhs = down + up.shifted(2) + rest.shifted(alpha)
    return lhs, rhs


def _check_split_pair(n: int, lam: Partition, m: int, nu: Partition,
                      ) -> tuple[QPoly, QPoly]:
    _require(m >= 1, "the doubled part must be positive")
    _require(not lam or lam[-1] >= m + 1,
             "left parts must exceed the doubled part")
    _require(not nu or nu[0] <= m - 1,
             "right parts must stay below the doubled part")
    beta = 2 * (n - m - 1) - len(lam)
    _require(beta >= 0, "exponent 2(n - m - 1) - l(lam) is negative")
    lhs = q_partition_function(n, oplus(lam, (m, m), nu))
    rhs = (q_partition_function(n, oplus(lam, (m + 1, m - 1), nu))
           + q_partition_function(n - 1, oplus(minus_one(lam), nu)).shifted(beta))
    return lhs, rhs


def _check_six_term(n: int, lam: Partition, nu: Partition,
                    ) -> tuple[QPoly, QPoly]:
    _require(n >= 2, "needs n >= 2")
    _require(not lam or lam[0] <= n - 2,
             "first part must be at most n - 2")
    _require(not (lam and nu) or lam[-1] >= nu[0],
             "left and right parts must concatenate to a partition")
    la, ln_ = len(lam), len(nu)
    c1 = n - 1 - la - ln_
    _require(c1 >= 0, "n - 1 - l(lam) - l(nu) is negative")

    def f(top: Partition) -> QPoly:
        return q_partition_function(n - 2, top)

    lhs = ZERO
    for i, j in combinations(range(1, la + 1), 2):
        lhs = lhs + f(oplus(_drop(lam, i, j), nu)).shifted(i + j - 3)
    for i in range(1, la + 1):
        for j in range(1, ln_ + 1):
            lhs = lhs + f(oplus(_drop(lam, i), _drop(nu, j))).shifted(i + j + la - 3)
    for i in range(1, la + 1):
        lhs = lhs + (q_int(c1) * f(oplus(_drop(lam, i), nu))).shifted(i + la + ln_ - 2)
    for i in range(1, ln_ + 1):
        lhs = lhs + (q_int(c1) * f(oplus(lam, _drop(nu, i)))).shifted(i + 2 * la + ln_ - 2)
    for i, j in combinations(range(1, ln_ + 1), 2):
        lhs = lhs + f(oplus(lam, _drop(nu, i, j))).shifted(i + j + 2 * la - 3)
    lhs = lhs + (q_binomial(c1, 2) * f(oplus(lam, nu))).shifted(2 * (la + ln_))

    rhs = (q_partition_function(n - 1, oplus(lam, nu))
           - q_partition_function(n - 1, oplus((n - 2,), lam, nu)).shifted(n - 2))
    return lhs, rhs


_IDENTITIES = {
    "pinned-row": ("lam",),
    "free-row": ("lam",),
    "qtriple": ("lam",),
    "append-one": ("lam",),
    "shift1": ("lam", "m", "nu"),
    "shift2": ("lam", "m", "nu"),
    "split-pair": ("lam", "m", "nu"),
    "six-term": ("lam", "nu"),
}


def verify_recurrence(identity: str, n: int, lam: Iterable[int] = (),
                      nu: Iterable[int] = (), m: int | None = None,
                      ) -> RecurrenceReport:
    """Enumerate both sides of a named identity and report them.

    Raises HypothesisViolated when the arguments break the identity's
    hypothesis, and ValueError for unknown identity names.
    """
    if identity not in _IDENTITIES:
        raise ValueError(f"unknown identity {identity!r}")
    lam, nu = normalize(lam), normalize(nu)
    if identity == "pinned-row":
        lhs, rhs = _check_pinned_row(n, lam)
    elif identity == "free-row":
        lhs, rhs = _check_free_row(n, lam)
    elif identity == "qtriple":
        lhs, rhs = _check_qtriple(n, lam)
    elif identity == "append-one":
        lhs, rhs = _check_append_one(n, lam)
    elif identity == "six-term":
        lhs, rhs = _check_six_term(n, lam, nu)
    else:
        if m is None:
            raise HypothesisViolated("a moved part m is required")
        if identity == "shift1":
            lhs, rhs = _check_shift1(n, lam, m, nu)
        elif identity == "shift2":
            lhs, rhs = _check_shift2(n, lam, m, nu)
        else:
            lhs, rhs = _check_split_pair(n, lam, m, nu)
    args = [("lam", lam)]
    if "m" in _IDENTITIES[identity]:
        args.append(("m", m))
    if "nu" in _IDENTITIES[identity]:
        args.append(("nu", nu))
    return RecurrenceReport(identity, n, tuple(args), lhs, rhs)


def _splits_at_single(parts: Partition) -> Iterator[tuple[Partition, int, Partition]]:
    """(lam, m, nu) with lam > m > nu around every multiplicity-one part."""
    for i, m in enumerate(parts):
        if parts.count(m) == 1:
            yield parts[:i], m, parts[i + 1:]


def _splits_at_double(parts: Partition) -> Iterator[tuple[Partition, int, Partition]]:
    """(lam, m, nu) around every part appearing exactly twice."""
    for i, m in enumerate(parts):
        if parts.count(m) == 2 and i + 1 < len(parts) and parts[i + 1] == m:
            yield parts[:i], m, parts[i + 2:]


def recurrence_arguments(identity: str, n: int,
                         ) -> Iterator[dict[str, object]]:
    """Every admissible argument set with partitions inside staircases."""
    if identity == "pinned-row":
        for lam in partitions_in_staircase(n - 1):
            if lam and lam[0] == n - 1:
                yield {"lam": lam}
    elif identity == "free-row":
        for lam in partitions_in_staircase(n - 1):
            if not lam or lam[0] <= n - 2:
                yield {"lam": lam}
    elif identity == "qtriple":
        if n >= 2:
            for lam in partitions_in_staircase(n - 3):
                yield {"lam": lam}
    elif identity == "append-one":
        for lam in partitions_in_staircase(n - 1):
            if len(lam) < 2 or lam[-2:] != (1, 1):
                yield {"lam": lam}
    elif identity in ("shift1", "shift2", "split-pair"):
        split = _splits_at_single if identity != "split-pair" else _splits_at_double
        gap = {"shift1": lambda la, m: 2 * n - 2 * m - 1 - la,
               "shift2": lambda la, m: 2 * n - la - m,
               "split-pair": lambda la, m: 2 * (n - m - 1) - la}[identity]
        for parts in partitions_in_staircase(n - 1):
            for lam, m, nu in split(parts):
                if identity == "shift1" and nu:
                    continue
                if m >= 1 and gap(len(lam), m) >= 0:
                    yield {"lam": lam, "m": m, "nu": nu}
    elif identity == "six-term":
        if n < 2:
            return
        for parts in partitions_in_staircase(n - 1):
            if parts and parts[0] > n - 2:
                continue
            for cut in range(len(parts) + 1):
                yield {"lam": parts[:cut], "nu": parts[cut:]}
    else:
        raise ValueError(f"unknown identity {identity!r}")


def recurrence_suite(max_n: int, identities: Sequence[str] = (),
                     ) -> Iterator[RecurrenceReport]:
    """Reports for every identity at every admissible argument, n <= max_n."""
    names = tuple(identities) or tuple(_IDENTITIES)
    for n in range(1, max_n + 1):
        for name in names:
            for args in recurrence_arguments(name, n):
                yield verify_recurrence(name, n, **args)


# ---------------------------------------------------------------------------
# Rational expansion instances
# ---------------------------------------------------------------------------

def verify_expansion_instance(lhs: tuple[int, Iterable[int]],
                              terms: Iterable[tuple[Fraction | int, int, Iterable[int]]],
                              ) -> bool:
    """Check a rational linear expansion of counts at q = 1.

    ``lhs`` is (n, partition); ``terms`` are (coefficient, n, partition).
    Counts come from the dynamic program, which the test suite pins to direct
    enumeration.
    """
    n0, lam0 = lhs
    want = Fraction(q_partition_function_dp(n0, normalize(lam0)).at_one())
    total = Fraction(0)
    for coeff, n, lam in terms:
        total += Fraction(coeff) * q_partition_function_dp(n, normalize(lam)).at_one()
    return want == total
