"""Words, skew column-strict tableaux, and the column-insertion RSK machinery.

A word is a tuple of positive integers.  A tableau stores its inner shape and
the filled cells row by row; straight tableaux have an empty inner shape.
Row reading is bottom-to-top, each row left-to-right.  All objects are
immutable.

Insertion conventions (validated against the Knuth-class oracle in the test
suite): row insertion bumps the leftmost entry strictly greater than x;
column insertion bumps the topmost entry weakly greater than x.  P(u) is
computed by row-inserting u left to right, which agrees with column-inserting
u right to left.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from functools import cache

from .shapes import Vec, is_weakly_decreasing, trim

Word = tuple[int, ...]


class Tableau:
    """A (possibly skew) tableau: inner shape plus the filled cells per row."""

    __slots__ = ("inner", "rows")

    def __init__(self, rows, inner=()):
        rows = tuple(tuple(r) for r in rows)
        inner = trim(inner)
        # drop trailing rows that carry neither cells nor inner boxes
        while rows and not rows[-1] and len(inner) < len(rows):
            rows = rows[:-1]
        if len(inner) > len(rows):
            raise ValueError(f"inner shape {inner} taller than rows {rows}")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "inner", inner)
        outer = self.outer
        if not is_weakly_decreasing(outer) or not is_weakly_decreasing(inner):
            raise ValueError(f"not a skew shape: {outer}/{inner}")

    def __setattr__(self, *a):
        raise AttributeError("Tableau is immutable")

    @property
    def outer(self) -> Vec:
        return tuple(self.inner_at(i) + len(r) for i, r in enumerate(self.rows))

    def inner_at(self, i: int) -> int:
        return self.inner[i] if i < len(self.inner) else 0

    @property
    def size(self) -> int:
        return sum(len(r) for r in self.rows)

    def __bool__(self):
        return self.size > 0

    def __eq__(self, other):
        return (
            isinstance(other, Tableau)
            and self.rows == other.rows
            and self.inner == other.inner
        )

    def __hash__(self):
        return hash((self.inner, self.rows))

    def __repr__(self):
        if not self.rows:
            return "Tableau([])"
        if self.inner:
            return f"Tableau({list(map(list, self.rows))}, inner={list(self.inner)})"
        return f"Tableau({list(map(list, self.rows))})"

    def word(self) -> Word:
        """Row-reading word: rows bottom to top, each left to right."""
        return tuple(x for r in reversed(self.rows) for x in r)

    def content(self) -> Vec:
        return content(self.word())

    def is_column_strict(self) -> bool:
        grid = {}
        for i, r in enumerate(self.rows):
            base = self.inner_at(i)
            prev = None
            for j, x in enumerate(r):
                if prev is not None and x < prev:
                    return False
                prev = x
                grid[(i, base + j)] = x
        return all(
            grid.get((i - 1, c), x - 1) < x for (i, c), x in grid.items()
        )

    def is_standard(self) -> bool:
        return (
            not self.inner
            and self.is_column_strict()
            and sorted(self.word()) == list(range(1, self.size + 1))
        )

    def restrict(self, lo: int, hi: int) -> "Tableau":
        """Subtableau of entries with values in [lo, hi] (a skew tableau)."""
        rows, inner = [], []
        for i, r in enumerate(self.rows):
            rows.append([x for x in r if lo <= x <= hi])
            inner.append(self.inner_at(i) + sum(1 for x in r if x < lo))
        return Tableau(rows, trim(inner) if any(inner) else ())

    def relabel(self, offset: int) -> "Tableau":
        return Tableau([[x + offset for x in r] for r in self.rows], self.inner)

    def transpose(self) -> "Tableau":
        """Transpose a straight-shape tableau."""
        if self.inner:
            raise ValueError("transpose is only defined for straight shapes")
        if not self.rows:
            return self
        cols = []
        for j in range(len(self.rows[0])):
            cols.append([r[j] for r in self.rows if len(r) > j])
        return Tableau(cols)

    def cells(self):
        """All (row, col) cell coordinates, 0-based."""
        for i, r in enumerate(self.rows):
            base = self.inner_at(i)
            for j in range(len(r)):
                yield (i, base + j)

    def entry(self, cell):
        i, j = cell
        return self.rows[i][j - self.inner_at(i)]

    def corners(self):
        """Removable cells of a straight tableau, top row first (0-based)."""
        outer = self.outer
        out = []
        for i, x in enumerate(outer):
            if x and (i + 1 == len(outer) or outer[i + 1] < x):
                out.append((i, x - 1))
        return out

    def pretty(self) -> str:
        lines = []
        for i, r in enumerate(self.rows):
            lines.append(". " * self.inner_at(i) + " ".join(str(x) for x in r))
        return "\n".join(lines)

    def to_json(self) -> dict:
        return {"inner": list(self.inner), "rows": [list(r) for r in self.rows]}

    @staticmethod
    def from_json(data) -> "Tableau":
        return Tableau(data["rows"], tuple(data.get("inner", ())))


def tab(*rows) -> Tableau:
    """Shorthand constructor for straight tableaux in tests and fixtures."""
    return Tableau(rows)


EMPTY = Tableau([])


def content(w) -> Vec:
    """Letter multiplicities (c_1, c_2, ...) up to the largest letter."""
    w = tuple(w)
    if not w:
        return ()
    counts = [0] * max(w)
    for x in w:
        if x < 1:
            raise ValueError(f"letters must be positive: {w}")
        counts[x - 1] += 1
    return tuple(counts)


def is_weakly_increasing_word(w) -> bool:
    return all(a <= b for a, b in zip(w, w[1:]))


# ---------------------------------------------------------------------------
# insertion primitives.  All work on a list-of-lists buffer for straight
# shapes; the buffer always stays a column-strict tableau of partition shape.


def _row_insert(rows, x):
    """Row-insert x; returns the (row, col) cell where the bumping ends."""
    i = 0
    while True:
        if i == len(rows):
            rows.append([x])
            return (i, 0)
        r = rows[i]
        j = bisect_right(r, x)
        if j == len(r):
            r.append(x)
            return (i, j)
        r[j], x = x, r[j]
        i += 1


def _column_insert(rows, x):
    """Column-insert x; returns the (row, col) cell where the bumping ends."""
    c = 0
    while True:
        height = sum(1 for r in rows if len(r) > c)
        col = [rows[i][c] for i in range(height)]
        i = bisect_left(col, x)
        if i == len(col):
            if i == len(rows):
                rows.append([x])
            else:
                rows[i].append(x)
            return (i, c)
        rows[i][c], x = x, rows[i][c]
        c += 1


def _pop_cell(rows, cell):
    i, j = cell
    if j != len(rows[i]) - 1 or (i + 1 < len(rows) and len(rows[i + 1]) > j):
        raise ValueError(f"{cell} is not a removable cell")
    x = rows[i].pop()
    if not rows[i]:
        rows.pop()
    return x


def _reverse_row_insert(rows, cell):
    """Undo the row insertion that ended at ``cell``; returns the letter."""
    i, _ = cell
    x = _pop_cell(rows, cell)
    for k in range(i - 1, -1, -1):
        r = rows[k]
        # the rightmost entry strictly below x is where the bump came from
        p = bisect_left(r, x) - 1
        r[p], x = x, r[p]
    return x


def _reverse_column_insert(rows, cell):
    """Undo the column insertion that ended at ``cell``; returns the letter."""
    _, j = cell
    x = _pop_cell(rows, cell)
    for c in range(j - 1, -1, -1):
        height = sum(1 for r in rows if len(r) > c)
        col = [rows[i][c] for i in range(height)]
        # the bottommost entry weakly below x is where the bump came from
        p = bisect_right(col, x) - 1
        rows[p][c], x = x, rows[p][c]
    return x


def schensted_p(w) -> Tableau:
    """The unique straight column-strict tableau Knuth-equivalent to ``w``."""
    rows: list[list[int]] = []
    for x in w:
        _row_insert(rows, x)
    return Tableau(rows)


def schensted_p_by_columns(w) -> Tableau:
    """Same tableau as :func:`schensted_p`, built by column insertion."""
    rows: list[list[int]] = []
    for x in reversed(tuple(w)):
        _column_insert(rows, x)
    return Tableau(rows)


def knuth_equivalent(u, v) -> bool:
    return schensted_p(u) == schensted_p(v)


# ---------------------------------------------------------------------------
# column RSK for sequences of weakly increasing words


def column_rsk(words, labels=None):
    """Column-insertion RSK of a sequence of weakly increasing words.

    Word i is column-inserted (right end first) after words 1..i-1 and its
    cells are recorded in Q with ``labels[i]`` (default 1, 2, ...), so the
    content of Q lists the word lengths.  Returns the pair (P, Q).
    """
    words = [tuple(w) for w in words]
    if labels is None:
        labels = list(range(1, len(words) + 1))
    if len(labels) != len(words) or len(set(labels)) != len(labels):
        raise ValueError("need one distinct recording label per word")
    p_rows: list[list[int]] = []
    q_rows: list[list[int]] = []
    for w, lab in zip(words, labels):
        if not is_weakly_increasing_word(w):
            raise ValueError(f"word {w} is not weakly increasing")
        for x in reversed(w):
            _column_insert(p_rows, x)
        for i, r in enumerate(p_rows):
            if i == len(q_rows):
                q_rows.append([])
            q_rows[i].extend([lab] * (len(r) - len(q_rows[i])))
    p, q = Tableau(p_rows), Tableau(q_rows)
    if not q.is_column_strict():
        raise ValueError("words do not yield a column-strict recording tableau")
    return p, q


def column_rsk_inverse(p: Tableau, q: Tableau, labels=None):
    """Invert column RSK; returns the list of weakly increasing words.

    ``labels`` must list the recording letters in insertion order (default
    1..max letter of Q).  Raises ValueError on a malformed pair.
    """
    if p.inner or q.inner or p.outer != q.outer:
        raise ValueError("P and Q must be straight tableaux of equal shape")
    if not (p.is_column_strict() and q.is_column_strict()):
        raise ValueError("P and Q must be column strict")
    if labels is None:
        labels = list(range(1, (max(q.word()) if q.size else 0) + 1))
    rows = [list(r) for r in p.rows]
    strips: dict[int, list] = {}
    for cell in q.cells():
        strips.setdefault(q.entry(cell), []).append(cell)
    words = []
    for lab in reversed(labels):
        cells = sorted(strips.pop(lab, ()), key=lambda c: -c[1])
        if len({c[1] for c in cells}) != len(cells):
            raise ValueError(f"cells of label {lab} are not a horizontal strip")
        words.append(tuple(_reverse_column_insert(rows, c) for c in cells))
    if strips or any(rows):
        raise ValueError("recording labels do not exhaust Q")
    words.reverse()
    for w in words:
        if not is_weakly_increasing_word(w):
            raise ValueError("malformed pair: inverse gave a decreasing word")
    return words


# ---------------------------------------------------------------------------
# evacuation and slicing operators


def evacuation(t: Tableau, n: int) -> Tableau:
    """Evacuation with respect to the alphabet [1, n].

    The restriction of the result to [1, i] has the shape of
    P(word(t restricted to [n+1-i, n])), which pins the tableau uniquely.
    """
    if t.inner:
        raise ValueError("evacuation expects a straight tableau")
    if t.size and max(t.word()) > n:
        raise ValueError(f"letters exceed the alphabet [1, {n}]")
    shapes = [()]
    for i in range(1, n + 1):
        shapes.append(schensted_p(t.restrict(n + 1 - i, n).word()).outer)
    rows: list[list[int]] = [[] for _ in shapes[-1]]
    for i in range(1, n + 1):
        prev = shapes[i - 1]
        for r, ln in enumerate(shapes[i]):
            old = prev[r] if r < len(prev) else 0
            rows[r].extend([i] * (ln - old))
    return Tableau(rows)


def h_slice(t: Tableau, r: int) -> Tableau:
    """Cut between rows r and r+1 and insert the north part before the south."""
    r = max(0, min(r, len(t.rows)))
    north = Tableau(t.rows[:r], t.inner[:r])
    south = Tableau(t.rows[r:], t.inner[r:])
    return schensted_p(north.word() + south.word())


def v_slice(t: Tableau, c: int) -> Tableau:
    """Cut between columns c and c+1 and insert the east part before the west."""
    west_rows, west_inner, east_rows, east_inner = [], [], [], []
    for i, row in enumerate(t.rows):
        base = t.inner_at(i)
        west_rows.append([x for j, x in enumerate(row) if base + j < c])
        west_inner.append(min(base, c))
        east_rows.append([x for j, x in enumerate(row) if base + j >= c])
        east_inner.append(max(base - c, 0))
    west = Tableau(west_rows, trim(west_inner) if any(west_inner) else ())
    east = Tableau(east_rows, trim(east_inner) if any(east_inner) else ())
    return schensted_p(east.word() + west.word())


def overlap(v, u) -> int:
    """Length of the second row of P(v u), for weakly increasing v and u."""
    v, u = tuple(v), tuple(u)
    for w in (v, u):
        if not is_weakly_increasing_word(w):
            raise ValueError(f"word {w} is not weakly increasing")
    p = schensted_p(v + u)
    return len(p.rows[1]) if len(p.rows) > 1 else 0


def two_row_tableau(top, bottom) -> Tableau:
    """The two-row skew tableau with the given rows at maximum overlap.

    The bottom row sits at columns 0..len(bottom)-1 and the top row is pushed
    as far left as the outer shape allows, which realizes overlap(bottom, top)
    columns of height two.
    """
    top, bottom = tuple(top), tuple(bottom)
    if not bottom:
        return Tableau([top])
    k = overlap(bottom, top)
    return Tableau([top, bottom], (len(bottom) - k,))


def jdt_slide(t: Tableau, cell) -> Tableau:
    """One inward jeu-de-taquin slide starting at the inner corner ``cell``."""
    i, j = cell
    if j != t.inner_at(i) - 1 or (i + 1 < len(t.rows) and t.inner_at(i + 1) > j):
        raise ValueError(f"{cell} is not an inner corner of {t.outer}/{t.inner}")
    grid = {c: t.entry(c) for c in t.cells()}
    hole = (i, j)
    while True:
        right = grid.get((hole[0], hole[1] + 1))
        below = grid.get((hole[0] + 1, hole[1]))
        if right is None and below is None:
            break
        # the smaller neighbour moves into the hole; ties resolve downward
        if right is None or (below is not None and below <= right):
            grid[hole] = below
            hole = (hole[0] + 1, hole[1])
        else:
            grid[hole] = right
            hole = (hole[0], hole[1] + 1)
        del grid[hole]
    # the start corner leaves the inner shape; the final hole leaves the outer
    inner = [t.inner_at(r) for r in range(len(t.rows))]
    inner[i] -= 1
    rows = []
    for r in range(len(t.rows)):
        cols = sorted(c[1] for c in grid if c[0] == r)
        if cols != list(range(inner[r], inner[r] + len(cols))):
            raise ValueError("slide produced a broken row")
        rows.append([grid[(r, c)] for c in cols])
    return Tableau(rows, trim(inner) if any(inner) else ())


# ---------------------------------------------------------------------------
# enumeration


@cache
def enumerate_cst(outer, inner, cnt) -> tuple[Tableau, ...]:
    """All column-strict fillings of outer/inner with content ``cnt``.

    Sorted lexicographically by row-reading word, which is the deterministic
    order relied on elsewhere.
    """
    outer, inner = trim(outer), trim(inner)
    if len(inner) > len(outer) or any(
        inner[i] > outer[i] for i in range(len(inner))
    ):
        raise ValueError(f"not a skew shape: {outer}/{inner}")
    if sum(outer) - sum(inner) != sum(cnt):
        return ()
    letters = len(cnt)
    base = [inner[i] if i < len(inner) else 0 for i in range(len(outer))]
    rows = [[0] * (outer[i] - base[i]) for i in range(len(outer))]
    remaining = list(cnt)
    cells = [(i, j) for i in range(len(outer)) for j in range(len(rows[i]))]
    found = []

    def fill(k):
        if k == len(cells):
            found.append(Tableau([list(r) for r in rows], tuple(base)))
            return
        i, j = cells[k]
        lo = rows[i][j - 1] if j > 0 else 1
        col = base[i] + j
        if i > 0 and base[i - 1] <= col < base[i - 1] + len(rows[i - 1]):
            lo = max(lo, rows[i - 1][col - base[i - 1]] + 1)
        for x in range(lo, letters + 1):
            if remaining[x - 1]:
                remaining[x - 1] -= 1
                rows[i][j] = x
                fill(k + 1)
                remaining[x - 1] += 1

    fill(0)
    found.sort(key=lambda u: u.word())
    return tuple(found)


def straight_cst(shape, cnt) -> tuple[Tableau, ...]:
    return enumerate_cst(trim(shape), (), tuple(cnt))


def all_cst_of_content(cnt) -> tuple[Tableau, ...]:
    """Every straight column-strict tableau with the given content."""
    from .shapes import partitions

    cnt = tuple(cnt)
    out = []
    for shape in partitions(sum(cnt), max_len=len(cnt) if cnt else 1):
        out.extend(straight_cst(shape, cnt))
    return tuple(out)


def standard_tableaux(shape) -> tuple[Tableau, ...]:
    return straight_cst(shape, (1,) * sum(shape))


def yamanouchi_tableau(shape) -> Tableau:
    """The unique column-strict tableau of shape and content ``shape``."""
    return Tableau([[i + 1] * x for i, x in enumerate(trim(shape))])
