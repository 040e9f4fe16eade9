"""Catabolism operators and catabolizability predicates.

Block catabolism strips the canonical block tableau Y_1 off a tableau and
re-inserts the part below the first block's rows; iterating over the whole
block sequence defines catabolizability.  For standard tableaux there are
row and column variants driven by the one-row tableau Z_m, plus the type
partition extracted by iterating the first-row catabolism operator.
"""

from __future__ import annotations

from dataclasses import dataclass

from .shapes import RectSequence, dominates, is_weakly_decreasing, trim
from .tableaux import EMPTY, Tableau, h_slice, straight_cst, v_slice


def yamanouchi_block(rseq: RectSequence, i: int) -> Tableau:
    """The block tableau Y_i: row j holds the j-th smallest letter of A_i."""
    start, _ = rseq.intervals[i]
    shape = trim(rseq.rects[i])
    if not is_weakly_decreasing(shape) or (shape and shape[-1] < 0):
        raise ValueError(f"block {i} of {rseq} is not a partition")
    return Tableau([[start + j] * x for j, x in enumerate(shape)])


def _strip_block(t: Tableau, rseq: RectSequence):
    """Remove Y_1 from t, or None when the restriction is not Y_1."""
    m = rseq.eta[0]
    if t.restrict(1, m) != yamanouchi_block(rseq, 0):
        return None
    inner = trim(rseq.rects[0])
    rows = [
        [x for x in r if x > m] for r in t.rows
    ]
    return Tableau(rows, inner)


def cat_block(t: Tableau, rseq: RectSequence):
    """First-block catabolism: strip Y_1 and slice below the block's rows.

    Returns None when t does not restrict to Y_1 on the first alphabet
    block.  The result keeps its letters in the original alphabet.
    """
    stripped = _strip_block(t, rseq)
    if stripped is None:
        return None
    return h_slice(stripped, rseq.eta[0])


@dataclass(frozen=True)
class CatTrace:
    """Replayable record of a catabolism run: (before, block, after) steps."""

    steps: tuple[tuple[Tableau, Tableau, Tableau], ...]


def catabolism_trace(t: Tableau, rseq: RectSequence):
    """Full catabolism run of t against the block sequence, or None."""
    steps = []
    cur, blocks = t, rseq
    while True:
        if blocks.t == 0:
            return CatTrace(tuple(steps)) if not cur else None
        after = cat_block(cur, blocks)
        if after is None:
            return None
        m = blocks.eta[0]
        steps.append((cur, yamanouchi_block(blocks, 0), after))
        cur = after.relabel(-m)
        blocks = blocks.tail()


def is_catabolizable(t: Tableau, rseq: RectSequence) -> bool:
    return catabolism_trace(t, rseq) is not None


def enumerate_catabolizable(shape, rseq: RectSequence) -> tuple[Tableau, ...]:
    """All catabolizable tableaux of the given straight shape."""
    shape = trim(shape)
    if sum(shape) != sum(rseq.gamma):
        return ()
    return tuple(
        t for t in straight_cst(shape, rseq.gamma) if is_catabolizable(t, rseq)
    )


# ---------------------------------------------------------------------------
# standard-tableau catabolism


def leading_run(t: Tableau) -> int:
    """Largest i such that the letters 1..i all sit in the first row."""
    first = set(t.rows[0]) if t.rows else set()
    i = 0
    while i + 1 in first:
        i += 1
    return i


def first_row_catabolism(t: Tableau) -> Tableau:
    """Column-insert the first row of t into the rest of t."""
    return h_slice(t, 1)


def catabolism_type(t: Tableau):
    """The partition recording how fast iterated catabolism eats 1, 2, ....

    First part: the leading run of t; later parts: the increments of the
    leading run along powers of the first-row catabolism.
    """
    if not t.is_standard():
        raise ValueError("catabolism_type expects a standard tableau")
    n = t.size
    runs = [leading_run(t)]
    cur = t
    while runs[-1] < n:
        cur = first_row_catabolism(cur)
        nxt = leading_run(cur)
        if nxt <= runs[-1]:
            raise RuntimeError("first-row catabolism stalled on standard input")
        runs.append(nxt)
    return tuple(a - b for a, b in zip(runs, [0] + runs[:-1]))


def one_row_tableau(m: int) -> Tableau:
    return Tableau([list(range(1, m + 1))]) if m else EMPTY


def row_catabolism(t: Tableau, m: int):
    """H_1 of (t minus the one-row tableau on 1..m), or None."""
    if t.restrict(1, m) != one_row_tableau(m):
        return None
    rest = Tableau([[x for x in r if x > m] for r in t.rows], (m,) if m else ())
    return h_slice(rest, 1)


def column_catabolism(t: Tableau, m: int):
    """V_m of (t minus the one-row tableau on 1..m), or None."""
    if t.restrict(1, m) != one_row_tableau(m):
        return None
    rest = Tableau([[x for x in r if x > m] for r in t.rows], (m,) if m else ())
    return v_slice(rest, m)


def is_mu_catabolizable(t: Tableau, mu) -> bool:
    """Row catabolizability of a standard tableau against the partition mu."""
    mu = trim(mu)
    if not mu:
        return not t
    if t.size != sum(mu):
        return False
    after = row_catabolism(t, mu[0])
    if after is None:
        return False
    return is_mu_catabolizable(after.relabel(-mu[0]), mu[1:])


def is_mu_column_catabolizable(t: Tableau, mu) -> bool:
    """Column catabolizability of a standard tableau against mu."""
    mu = trim(mu)
    if not mu:
        return not t
    if t.size != sum(mu):
        return False
    after = column_catabolism(t, mu[0])
    if after is None:
        return False
    return is_mu_column_catabolizable(after.relabel(-mu[0]), mu[1:])


def cattype_dominates(t: Tableau, mu) -> bool:
    """Convenience comparison catabolism_type(t) >= mu in dominance order."""
    return dominates(catabolism_type(t), trim(mu))
