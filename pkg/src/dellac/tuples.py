"""Two set-theoretic models of configurations.

Both models record a configuration column by column through the wrapped row
labels of its dots.  The I-model keeps, after each of the first ln - 1
columns, a multiset of labels in [1, (m-1)n] (dots sitting above the
current diagonal, bottom-of-window and top-of-window dots folded together)
plus per-row dot counters J.  The K-model does the same without repeated
elements for the spread-out single-dot-per-row form, so it lives in
[1, l(m-1)n] and is reached through the row-spreading embedding.  In both
models the last column is forced, which is why it is not recorded.
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Iterator, Sequence
from itertools import combinations

from .embed import xi1, xi1_inverse
from .grid import Config, Params

IPair = tuple[tuple[int, ...], tuple[int, ...]]
ICollection = tuple[IPair, ...]
KCollection = tuple[tuple[int, ...], ...]


# ---------------------------------------------------------------------------
# I-collections: multisets with row counters
# ---------------------------------------------------------------------------

def _row_of_label(j: int, p: int, params: Params) -> int:
    """Row of the dot recorded as label j in a column of block p."""
    n, wrap = params.n, (params.m - 1) * params.n
    if p == n - 1:
        # the diagonal row n keeps its own label; smaller labels wrap up
        if j == n:
            return n
        return j + wrap if j < n else j
    return j if j > p + 1 else j + wrap


def _label_of_row(r: int, p: int, params: Params) -> int:
    n, wrap = params.n, (params.m - 1) * params.n
    if p == n - 1 and r == n:
        return n
    return r - wrap if r > wrap else r


def _bumped(labels, p: int, diagonal: bool, params: Params) -> set[int]:
    """Rows of [1, n] that gain a dot: the diagonal row when hit, plus
    un-wrapped label additions.  Wrapped additions live in other rows."""
    n = params.n
    if p == n - 1:
        return {n} if n in labels else set()
    out = {r for r in labels if p + 1 < r <= n}
    if diagonal:
        out.add(p + 1)
    return out


def config_to_i(c: Config) -> ICollection:
    """The I-collection of a configuration: ln pairs (multiset, counters)."""
    params = c.params
    l, m, n = params.l, params.m, params.n
    wrap = (m - 1) * n
    held: Counter = Counter()
    counts = [0] * wrap
    out: list[IPair] = [((), tuple(counts))]
    for i in range(1, l * n):
        p = (i - 1) // l
        rows = set(c.columns[i - 1])
        if p == n - 1:
            if m * n not in rows:
                raise ValueError(f"column {i} misses the forced top dot")
            labels = [_label_of_row(r, p, params) for r in rows - {m * n}]
            diagonal = False
        else:
            diag, top = p + 1, p + 1 + wrap
            diagonal = diag in rows
            if diagonal:
                labels = [_label_of_row(r, p, params) for r in rows - {diag}]
            elif top in rows:
                labels = [_label_of_row(r, p, params) for r in rows - {top}]
            else:
                labels = [_label_of_row(r, p, params) for r in rows]
                if not held[diag]:
                    raise ValueError(f"column {i} retires an unrecorded dot")
                held[diag] -= 1
        held.update(labels)
        for r in _bumped(labels, p, diagonal, params):
            counts[r - 1] += 1
        out.append((tuple(sorted(held.elements())), tuple(counts)))
    return tuple(out)


def i_to_config(entries: Sequence[IPair], params: Params) -> Config:
    """Rebuild the configuration whose I-collection is ``entries``."""
    l, m, n = params.l, params.m, params.n
    wrap = (m - 1) * n
    columns: list[tuple[int, ...]] = []
    placed = Counter()
    for i in range(1, l * n):
        p = (i - 1) // l
        prev = Counter(entries[i - 1][0])
        cur = Counter(entries[i][0])
        gained = cur - prev
        if p == n - 1:
            rows = {m * n}
        elif entries[i][1][p] > entries[i - 1][1][p]:
            rows = {p + 1}
        elif cur[p + 1] < prev[p + 1]:
            # one recorded copy of the diagonal label retires (a dot of an
            # earlier column stops being tracked); no special dot this time
            gained = cur - (prev - Counter({p + 1: 1}))
            rows = set()
        else:
            rows = {p + 1 + wrap}
        rows.update(_row_of_label(j, p, params) for j in gained)
        if len(rows) != m:
            raise ValueError(f"pair {i} does not describe {m} distinct rows")
        placed.update(rows)
        columns.append(tuple(sorted(rows)))
    last = [r for r in range(1, m * n + 1) for _ in range(l - placed[r])]
    columns.append(tuple(last))
    return Config(params, tuple(columns))


def validate_i(entries: Sequence, params: Params) -> list[str]:
    """Check the defining conditions; returns violation messages ([] = ok)."""
    l, m, n = params.l, params.m, params.n
    wrap = (m - 1) * n
    if len(entries) != l * n:
        return [f"collection must have {l * n} pairs, got {len(entries)}"]
    pairs: list[tuple[Counter, tuple[int, ...]]] = []
    for entry in entries:
        if len(entry) != 2:
            return ["each entry must be a (multiset, counters) pair"]
        pairs.append((Counter(entry[0]), tuple(entry[1])))
    bad: list[str] = []
    if +pairs[0][0]:
        bad.append("(3) at i=0: the multiset must start empty")
    if pairs[0][1] != (0,) * wrap:
        bad.append("(3) at i=0: the counters must start at zero")
    if bad:
        return bad
    for i in range(1, l * n):
        p, q = divmod(i - 1, l)
        q += 1
        prev, prev_j = pairs[i - 1]
        cur, cur_j = pairs[i]
        if (sum(cur.values()) != (m - 1) * i
                or any(not 1 <= v <= wrap for v in cur)
                or any(k > l for k in cur.values())):
            bad.append(f"(1) at i={i}: need {(m - 1) * i} labels from"
                       f" [1,{wrap}], each at most {l} times")
            continue
        if (len(cur_j) != wrap
                or any(not 0 <= x <= l for x in cur_j)
                or any(cur_j[r] - prev_j[r] not in (0, 1) for r in range(wrap))):
            bad.append(f"(2) at i={i}: counters must stay in [0,{l}] and"
                       " move by at most one")
            continue
        if not q <= cur_j[p] <= l:
            bad.append(f"(2) at i={i}: counter {p + 1} must be in [{q},{l}]")
        keep = prev.copy()
        if p <= n - 2 and keep[p + 1]:
            keep[p + 1] -= 1
        if +(keep - cur):
            bad.append(f"(4) at i={i}: earlier labels may not disappear")
            continue
        if p == n - 1:
            tilde = cur - prev
            tag = "(4)"
            want = m - 1
            diagonal = False
        else:
            c_prev, c_cur = prev[p + 1], cur[p + 1]
            held_j = prev_j[p]
            tilde = cur - prev
            want = m - 1
            diagonal = cur_j[p] - prev_j[p] == 1
            if c_prev == 0 and held_j >= q:
                tag = "(5)"
                if not diagonal and c_cur:
                    bad.append(f"(5a) at i={i}: the diagonal label must stay"
                               " absent when its counter holds")
            elif c_prev == 0:
                tag = "(6)"
                if not diagonal:
                    bad.append(f"(6) at i={i}: counter {p + 1} must reach {q}")
            elif held_j >= q:
                tag = "(7)"
                if not diagonal and c_cur == c_prev - 1:
                    tilde = cur - keep
                    want = m
                elif not diagonal and c_cur != c_prev:
                    bad.append(f"(7) at i={i}: without a counter step the"
                               " diagonal label may only keep or lose a copy")
            else:
                tag = "(8)"
                if not diagonal:
                    bad.append(f"(8) at i={i}: counter {p + 1} must reach {q}")
        if sum(tilde.values()) != want or any(k != 1 for k in tilde.values()):
            bad.append(f"{tag} at i={i}: expected {want} distinct new labels")
            continue
        bump = _bumped(set(tilde), p, diagonal, params)
        for r in range(1, wrap + 1):
            expect = prev_j[r - 1] + (1 if r in bump else 0)
            if cur_j[r - 1] != expect:
                bad.append(f"(9) at i={i}: counter {r} should be {expect}")
                break
    return bad


def enumerate_i(params: Params) -> Iterator[ICollection]:
    """All valid I-collections, generated from the defining conditions
    alone (no configurations involved)."""
    l, m, n = params.l, params.m, params.n
    wrap = (m - 1) * n
    chain: list[tuple[Counter, tuple[int, ...]]] = [(Counter(), (0,) * wrap)]

    def freeze() -> ICollection:
        return tuple((tuple(sorted(held.elements())), j) for held, j in chain)

    def attempt(i: int, labels, diagonal: bool, drop: bool):
        held, counts = chain[-1]
        p = (i - 1) // l
        q = i - p * l
        bump = _bumped(set(labels), p, diagonal, params)
        if any(counts[r - 1] + 1 > l for r in bump):
            return None
        if p == n - 1 and not q <= counts[n - 1] + (1 if n in bump else 0):
            return None
        new_held = held.copy()
        if drop:
            new_held[p + 1] -= 1
        new_held.update(labels)
        new_counts = tuple(counts[r] + (1 if r + 1 in bump else 0)
                           for r in range(wrap))
        return new_held, new_counts

    def rec(i: int) -> Iterator[ICollection]:
        if i == l * n:
            yield freeze()
            return
        held, counts = chain[-1]
        p = (i - 1) // l
        q = i - p * l
        options: list[tuple[int, bool, bool, bool]] = []
        if p == n - 1:
            options.append((m - 1, False, False, True))
        else:
            held_j = counts[p]
            if held_j == q - 1:
                options.append((m - 1, True, False, True))
            else:
                if held_j + 1 <= l:
                    options.append((m - 1, True, False, True))
                options.append((m - 1, False, False, False))
                if held[p + 1]:
                    options.append((m, False, True, False))
        for count, diagonal, drop, diag_label_ok in options:
            pool = [v for v in range(1, wrap + 1)
                    if held[v] < l and (diag_label_ok or v != p + 1)]
            for labels in combinations(pool, count):
                nxt = attempt(i, labels, diagonal, drop)
                if nxt is None:
                    continue
                chain.append(nxt)
                yield from rec(i + 1)
                chain.pop()

    yield from rec(1)


def count_i(params: Params) -> int:
    return sum(1 for _ in enumerate_i(params))


def i_to_json(entries: Sequence[IPair]) -> list[dict]:
    return [{"I": list(held), "J": list(j)} for held, j in entries]


def i_from_json(data: Sequence[dict]) -> ICollection:
    return tuple((tuple(int(v) for v in d["I"]), tuple(int(x) for x in d["J"]))
                 for d in data)


# ---------------------------------------------------------------------------
# K-collections: repetition-free sets for the spread-out form
# ---------------------------------------------------------------------------

def config_to_k(c: Config) -> KCollection:
    """The K-collection of a configuration, read off its spread-out form."""
    params = c.params
    l, m, n = params.l, params.m, params.n
    size = l * (m - 1) * n
    spread = xi1(c)
    held: set[int] = set()
    out: list[tuple[int, ...]] = []
    for i in range(1, l * n):
        rows = set(spread.columns[i - 1])
        wrapped = {j if j <= size else j - size for j in rows - {i}}
        if i in rows:
            held = held | wrapped
        else:
            if i not in held:
                raise ValueError(f"row {i} of the spread-out form is empty")
            held = (held - {i}) | wrapped
        out.append(tuple(sorted(held)))
    return tuple(out)


def k_to_config(entries: Sequence[Sequence[int]], params: Params) -> Config:
    """Rebuild the configuration whose K-collection is ``entries``."""
    l, m, n = params.l, params.m, params.n
    size = l * (m - 1) * n
    prev: set[int] = set()
    columns: list[tuple[int, ...]] = []
    for i in range(1, l * n):
        cur = set(entries[i - 1])
        fresh = cur - (prev - {i})
        if i not in prev:
            rows = {i}
        elif i in cur:
            rows = {i + size}
            fresh = cur - prev
        else:
            rows = set()
        rows.update(j if j > i else j + size for j in fresh)
        if len(rows) != m:
            raise ValueError(f"set {i} does not describe {m} distinct rows")
        columns.append(tuple(sorted(rows)))
        prev = cur
    seen = {r for col in columns for r in col}
    columns.append(tuple(r for r in range(1, m * l * n + 1) if r not in seen))
    source = xi1_inverse(Config(Params(1, m, l * n), tuple(columns)), l)
    if source is None:
        raise ValueError("collection does not satisfy the block ordering")
    return source


def _leftovers(final: set[int], params: Params) -> tuple[list[int], list[int]]:
    """Elements whose row still waits for the last column, split into
    plain rows (never entered) and wrapped rows (never re-entered)."""
    l, size = params.l, params.l * (params.m - 1) * params.n
    ln = params.l * params.n
    plain = [v for v in range(ln, size + 1) if v not in final]
    wrapped = [v for v in range(1, ln) if v not in final] + [ln]
    return plain, wrapped


def validate_k(entries: Sequence, params: Params) -> list[str]:
    """Check the defining conditions; returns violation messages ([] = ok)."""
    l, m, n = params.l, params.m, params.n
    size = l * (m - 1) * n
    if len(entries) != l * n - 1:
        return [f"collection must have {l * n - 1} sets, got {len(entries)}"]
    bad: list[str] = []
    prev: set[int] = set()
    for i in range(1, l * n):
        raw = tuple(entries[i - 1])
        cur = set(raw)
        if (len(cur) != len(raw) or len(cur) != (m - 1) * i
                or any(not 1 <= v <= size for v in cur)):
            bad.append(f"(1) at i={i}: need {(m - 1) * i} distinct elements"
                       f" of [1,{size}]")
            prev = cur
            continue
        if (prev - {i}) - cur:
            bad.append(f"(2) at i={i}: earlier elements may not disappear")
        for v in sorted(cur - (prev - {i})):
            if (v - 1) % l and v - 1 not in prev:
                bad.append(f"(3a) at i={i}: element {v} enters before"
                           f" {v - 1} of its block")
                break
        prev = cur
    if bad:
        return bad
    for kind, group in zip(("plain", "wrapped"), _leftovers(prev, params)):
        blocks = [(v - 1) // l for v in group]
        if len(blocks) != len(set(blocks)):
            bad.append(f"(3b): two {kind} rows of one block are left for"
                       " the last column")
    return bad


def enumerate_k(params: Params) -> Iterator[KCollection]:
    """All valid K-collections, generated from the defining conditions."""
    l, m, n = params.l, params.m, params.n
    size = l * (m - 1) * n
    ln = l * n
    out: list[tuple[int, ...]] = []

    def rec(i: int, prev: set[int]) -> Iterator[KCollection]:
        if i == ln:
            if all(len(g) == len({(v - 1) // l for v in g})
                   for g in _leftovers(prev, params)):
                yield tuple(out)
            return
        base = prev - {i}
        need = (m - 1) * i - len(base)
        pool = [v for v in range(1, size + 1)
                if v not in base and ((v - 1) % l == 0 or v - 1 in prev)]
        for fresh in combinations(pool, need):
            cur = base | set(fresh)
            out.append(tuple(sorted(cur)))
            yield from rec(i + 1, cur)
            out.pop()

    yield from rec(1, set())


def count_k(params: Params) -> int:
    return sum(1 for _ in enumerate_k(params))


def k_to_json(entries: Sequence[Sequence[int]]) -> list[list[int]]:
    return [list(k) for k in entries]


def k_from_json(data: Sequence[Sequence[int]]) -> KCollection:
    return tuple(tuple(int(v) for v in k) for k in data)
