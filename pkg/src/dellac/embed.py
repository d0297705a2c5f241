"""Inversion-preserving embeddings between configuration families.

``xi1`` spreads the l dots of each row over l fresh rows: the i-th dot in
row-major order keeps its column and moves to row i of a (1, m, ln) grid.
Its image is cut out by a per-block ordering of the dot columns, which makes
the inverse a membership test.

``xi2`` rewrites the dot permutation tau of a single-dot-per-row
configuration into that of a two-dots-per-column one.  Every value a that is
neither 0 nor 1 modulo m gets a duplicate inserted right after it, and the
letters a inverts with are shifted cyclically around the pair; the counts
v_a = (#InvL, #InvR) recorded per value make the rewriting reversible.
"""

from __future__ import annotations

from collections.abc import Sequence

from .grid import Config, Params, tau_of

# (value, tag): tag 0 for a plain letter, 1 and 2 for the two copies of a
# duplicated value.  Tuple order is the letter order (a1 < a2).
Letter = tuple[int, int]
VAData = tuple[tuple[int, int, int], ...]


class ImageNotDellac(RuntimeError):
    """The rewritten word is not the dot permutation of any configuration.

    Raised by :func:`xi2` only; it signals a bug, not bad input.
    """


def xi1(c: Config) -> Config:
    """Embed an (l, m, n) configuration into the (1, m, ln) grid."""
    p = c.params
    target = Params(1, p.m, p.l * p.n)
    cols: list[list[int]] = [[] for _ in range(target.cols)]
    for i, (_, j) in enumerate(c.dots_row_major(), start=1):
        cols[j - 1].append(i)
    return Config(target, tuple(tuple(col) for col in cols))


def xi1_inverse(d: Config, l: int) -> Config | None:
    """Preimage of d under xi1 with row-group size l, or None.

    d lives on a (1, m, N) grid with l dividing N.  It is an xi1 image
    exactly when the dot columns x_1, ..., x_mN read bottom to top increase
    strictly inside every block of l consecutive rows; collapsing each block
    back to one row then recovers the source.
    """
    p = d.params
    if p.l != 1:
        raise ValueError("xi1_inverse expects a single-dot-per-row configuration")
    if l < 1 or p.n % l:
        raise ValueError(f"row-group size {l} does not divide {p.n}")
    x = [j for _, j in d.dots_row_major()]
    for start in range(0, len(x), l):
        block = x[start:start + l]
        if any(a >= b for a, b in zip(block, block[1:])):
            return None
    source = Params(l, p.m, p.n // l)
    cols: list[list[int]] = [[] for _ in range(source.cols)]
    for i, j in enumerate(x, start=1):
        cols[j - 1].append((i + l - 1) // l)
    return Config(source, tuple(tuple(col) for col in cols))


def duplicated_values(m: int, n: int) -> tuple[int, ...]:
    """The values of [mn] that xi2 duplicates, in increasing order."""
    return tuple(a for a in range(1, m * n + 1) if a % m not in (0, 1))


def _step(word: list[Letter], a: int) -> tuple[list[Letter], tuple[int, int]]:
    """One rewriting pass: split a into a1 a2, then shift the letters it
    inverts with cyclically around the pair."""
    i = word.index((a, 0))
    word = word[:i] + [(a, 1), (a, 2)] + word[i + 1:]
    r = i + 1  # 1-based position of a1; a2 sits at r + 1
    inv_l = [s for s in range(1, r) if word[s - 1][0] > a]
    inv_r = [s for s in range(r + 2, len(word) + 1) if word[s - 1][0] < a]
    out = list(word)
    if inv_l:
        # a2 takes the leftmost offender's slot, the offenders rotate right
        # and the last one lands just after the pair
        for prev, cur in zip(inv_l, inv_l[1:]):
            out[cur - 1] = word[prev - 1]
        out[r] = word[inv_l[-1] - 1]
        out[inv_l[0] - 1] = (a, 2)
    if inv_r:
        # mirror image: a1 takes the rightmost offender's slot
        for cur, nxt in zip(inv_r, inv_r[1:]):
            out[cur - 1] = word[nxt - 1]
        out[r - 1] = word[inv_r[0] - 1]
        out[inv_r[-1] - 1] = (a, 1)
    return out, (len(inv_l), len(inv_r))


def _standardize(word: Sequence[Letter]) -> tuple[int, ...]:
    rank = {letter: k for k, letter in enumerate(sorted(word), start=1)}
    return tuple(rank[letter] for letter in word)


def _config_from_tau(tau: Sequence[int], params: Params) -> Config:
    """Rebuild the single-dot-per-row configuration with dot permutation
    tau.  ValueError when tau is not one."""
    m = params.m
    buckets: list[list[tuple[int, int]]] = [[] for _ in range(params.cols)]
    for i, v in enumerate(tau, start=1):
        if not 1 <= v <= len(tau):
            raise ValueError(f"letter {v} out of range")
        buckets[(v - 1) // m].append((i, v))
    columns = []
    for j, bucket in enumerate(buckets, start=1):
        bucket.sort()
        values = [v for _, v in bucket]
        if values != sorted(values):
            raise ValueError(f"column {j} numbers its dots out of order")
        columns.append(tuple(i for i, _ in bucket))
    return Config(params, tuple(columns))


def xi2(c: Config) -> tuple[Config, VAData]:
    """Embed a (1, m, n) configuration into the (1, 2, (m-1)n) grid.

    Returns the image together with the bookkeeping triples (a, #InvL,
    #InvR), one per duplicated value in increasing order.  For m = 2 no
    value is duplicated and the map is the identity.
    """
    p = c.params
    if p.l != 1:
        raise ValueError("xi2 expects a single-dot-per-row configuration")
    word: list[Letter] = [(v, 0) for v in tau_of(c)]
    va = []
    for a in duplicated_values(p.m, p.n):
        word, (t, u) = _step(word, a)
        va.append((a, t, u))
    target = Params(1, 2, (p.m - 1) * p.n)
    try:
        image = _config_from_tau(_standardize(word), target)
    except ValueError as exc:
        raise ImageNotDellac(str(exc)) from exc
    return image, tuple(va)


def undo_step(
    word: Sequence[Letter], a: int, t: int, u: int
) -> list[Letter] | None:
    """Reverse one rewriting pass, given v_a = (t, u).

    Returns the earlier word with the duplicate of a removed, or None when
    no pre-image replays to ``word`` under :func:`_step`.  The counts t and
    u pin down where a1 and a2 came from, which is what makes distinct v_a
    decode the same word differently.
    """
    word = list(word)
    if (a, 1) not in word or (a, 2) not in word:
        return None
    p1 = word.index((a, 1)) + 1
    p2 = word.index((a, 2)) + 1
    found = []
    for r in range(1, len(word)):
        pre = _undo_at(word, a, t, u, r, p1, p2)
        if pre is None:
            continue
        base = pre[:r - 1] + [(a, 0)] + pre[r + 1:]
        if _step(base, a) == (word, (t, u)):
            found.append(base)
    if len(found) == 1:
        return found[0]
    return None


def _undo_at(
    word: list[Letter], a: int, t: int, u: int, r: int, p1: int, p2: int
) -> list[Letter] | None:
    """Candidate pre-image with the pair a1 a2 at positions r, r + 1."""
    pre = list(word)
    if t == 0:
        if p2 != r + 1:
            return None
    else:
        # a2 ended on the leftmost in-left-inversion slot, so everything
        # greater than a before it would have been shifted too
        if p2 >= r:
            return None
        mids = [s for s in range(p2 + 1, r) if word[s - 1][0] > a]
        if len(mids) != t - 1 or any(word[s - 1][0] > a for s in range(1, p2)):
            return None
        b = [p2] + mids
        for prev, cur in zip(b, b[1:]):
            pre[prev - 1] = word[cur - 1]
        pre[b[-1] - 1] = word[r]
    if u == 0:
        if p1 != r:
            return None
    else:
        if p1 <= r + 1:
            return None
        mids = [s for s in range(r + 2, p1) if word[s - 1][0] < a]
        if len(mids) != u - 1 or any(
                word[s - 1][0] < a for s in range(p1 + 1, len(word) + 1)):
            return None
        c = mids + [p1]
        for cur, nxt in zip(c, c[1:]):
            pre[nxt - 1] = word[cur - 1]
        pre[c[0] - 1] = word[r - 1]
    pre[r - 1] = (a, 1)
    pre[r] = (a, 2)
    return pre


def xi2_inverse(
    d: Config, va: Sequence[tuple[int, int, int]]
) -> Config | None:
    """Reverse xi2, or None when (d, va) is not an admissible pair.

    The source shape is recovered from the grid of d and the number of
    bookkeeping triples; anything inconsistent (wrong triple count, wrong
    duplicated values, an undo step without a pre-image, or a final word
    that is no dot permutation) yields None.
    """
    p = d.params
    if p.l != 1 or p.m != 2:
        raise ValueError("xi2_inverse expects a two-dots-per-column configuration")
    n = p.n - len(va)
    if n <= 0 or p.n % n:
        return None
    m = p.n // n + 1
    dup = duplicated_values(m, n)
    if tuple(entry[0] for entry in va) != dup:
        return None
    alphabet: list[Letter] = []
    for v in range(1, m * n + 1):
        alphabet.extend([(v, 1), (v, 2)] if v in set(dup) else [(v, 0)])
    word = [alphabet[v - 1] for v in tau_of(d)]
    for a, t, u in reversed(va):
        undone = undo_step(word, a, t, u)
        if undone is None:
            return None
        word = undone
    try:
        return _config_from_tau([v for v, _ in word], Params(1, m, n))
    except ValueError:
        return None
