"""Cyclage covers, restricted covering relations, and content embeddings.

A tableau T of partition content covers S when some corner of T reverse
column-inserts to a letter a > 1 and an intermediate tableau U with
S = P(word(U) + (a,)).  Covers drop the cocharge grade by exactly one, and
the poset of all tableaux of a fixed content is graded with the one-row
tableau at the bottom.  Non-partition contents are handled by conjugating
with the plactic action of the sorting permutation.

The embeddings between contents alpha >= beta (dominance of the sorted
contents) compose two elementary moves: a plactic permutation step and the
lowering step that turns the rightmost 1 into a 2.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .charge import cocharge_grade
from .crystal import lowering, plactic_act, refill
from .shapes import (
    dominant_sort,
    dominates,
    is_weakly_decreasing,
    pad,
    perm_inverse,
    trim,
)
from .tableaux import (
    Tableau,
    _column_insert,
    _reverse_column_insert,
    _reverse_row_insert,
    _row_insert,
    all_cst_of_content,
)


@dataclass(frozen=True)
class CyclageEdge:
    """One covering pair, with the construction data (cells are 0-based)."""

    upper: Tableau
    lower: Tableau
    start_cell: tuple[int, int]   # corner of upper where the reverse insert starts
    letter: int                   # the cycled letter, always > 1
    intermediate: Tableau
    end_cell: tuple[int, int]     # corner of lower created by the row insert


def _edge_from_corner(t: Tableau, cell):
    rows = [list(r) for r in t.rows]
    a = _reverse_column_insert(rows, cell)
    if a == 1:
        return None
    u = Tableau([list(r) for r in rows])
    end = _row_insert(rows, a)
    return CyclageEdge(t, Tableau(rows), cell, a, u, end)


def cyclage_covers(t: Tableau) -> tuple[CyclageEdge, ...]:
    """All covers of a straight tableau of partition content."""
    if t.inner:
        raise ValueError("cyclage expects straight tableaux")
    if not is_weakly_decreasing(t.content()):
        raise ValueError("cyclage covers need partition content")
    edges = []
    for cell in t.corners():
        e = _edge_from_corner(t, cell)
        if e is not None:
            edges.append(e)
    return tuple(edges)


def cocyclage(t: Tableau, cell):
    """Invert a cover from below: reverse row insert at ``cell``, then column
    insert the emitted letter.  None when the emitted letter is 1."""
    rows = [list(r) for r in t.rows]
    a = _reverse_row_insert(rows, cell)
    if a == 1:
        return None
    u = Tableau([list(r) for r in rows])
    start = _column_insert(rows, a)
    return CyclageEdge(Tableau(rows), t, start, a, u, cell)


def covers_row_restricted(edge: CyclageEdge, r: int) -> bool:
    """The cover counts for the row-restricted order >=_(r,): its reverse
    column insertion starts strictly below row number r (1-based)."""
    return edge.start_cell[0] >= r


def covers_col_restricted(edge: CyclageEdge, c: int) -> bool:
    """The cover counts for the column-restricted order >=_(,c): its row
    insertion ends strictly right of column number c (1-based)."""
    return edge.end_cell[1] >= c


# ---------------------------------------------------------------------------
# embeddings between contents


def transfer_step(t: Tableau) -> Tableau:
    """Move one unit of content from letter 1 to letter 2.

    Requires c_1 > c_2 + 1; on a tableau this is the lowering operator for
    r = 1, which turns the rightmost 1 into a 2 and preserves the shape.
    """
    cnt = t.content()
    c1 = cnt[0] if cnt else 0
    c2 = cnt[1] if len(cnt) > 1 else 0
    if c1 <= c2 + 1:
        raise ValueError(f"content {cnt} does not allow a 1 -> 2 transfer")
    w = lowering(t.word(), 1)
    if w is None:
        raise RuntimeError("no unpaired 1 despite the content precondition")
    return refill(t, w)


def _matching_perm(src, dst):
    """Canonical w with perm_apply(w, src) == dst: equal values match stably."""
    n = len(src)
    used = [False] * n
    w = [0] * n
    for i, x in enumerate(dst):
        for j in range(n):
            if not used[j] and src[j] == x:
                used[j] = True
                w[j] = i + 1
                break
        else:
            raise ValueError(f"{dst} is not a rearrangement of {src}")
    return tuple(w)


def permute_content(t: Tableau, target) -> Tableau:
    """Plactic action by a permutation taking t's content to ``target``."""
    target = tuple(target)
    src = pad(t.content(), len(target))
    w = _matching_perm(src, target)
    return refill(t, plactic_act(w, t.word()))


def _chain(alpha, beta):
    """A canonical chain of elementary content moves from alpha to beta."""
    n = max(len(alpha), len(beta))
    alpha, beta = pad(alpha, n), pad(beta, n)
    target = tuple(sorted(beta, reverse=True))
    chain = [alpha]
    cur = alpha
    while tuple(sorted(cur, reverse=True)) != target:
        mu = tuple(sorted(cur, reverse=True))
        move = None
        for i, j in itertools.product(range(n), repeat=2):
            if i == j or mu[i] < mu[j] + 2:
                continue
            nxt = list(mu)
            nxt[i] -= 1
            nxt[j] += 1
            if dominates(tuple(sorted(nxt, reverse=True)), target):
                move = (i, j)
                break
        if move is None:
            raise ValueError(f"{alpha} does not dominate {beta}")
        i, j = move
        rest = sorted(
            (mu[k] for k in range(n) if k not in (i, j)), reverse=True
        )
        staged = (mu[i], mu[j], *rest)
        chain.append(staged)
        cur = (mu[i] - 1, mu[j] + 1, *rest)
        chain.append(cur)
    if cur != beta:
        chain.append(beta)
    return chain


def content_embedding(alpha, beta, t: Tableau) -> Tableau:
    """The graded embedding of the content-alpha poset into content-beta.

    Requires sorted(alpha) to dominate sorted(beta); the map is independent
    of the particular chain of elementary moves used here.
    """
    alpha, beta = tuple(alpha), tuple(beta)
    if trim(t.content()) != trim(alpha):
        raise ValueError(f"tableau content {t.content()} is not {alpha}")
    if not dominates(
        tuple(sorted(alpha, reverse=True)), tuple(sorted(beta, reverse=True))
    ):
        raise ValueError(f"{alpha} does not dominate {beta}")
    chain = _chain(alpha, beta)
    cur = t
    for prev, nxt in zip(chain, chain[1:]):
        if tuple(sorted(prev, reverse=True)) == tuple(sorted(nxt, reverse=True)):
            cur = permute_content(cur, nxt)
        else:
            cur = transfer_step(cur)
    return cur


def cyclage_standardization(t: Tableau) -> Tableau:
    """Embed a partition-content tableau into the standard tableaux."""
    mu = trim(t.content())
    if not is_weakly_decreasing(mu):
        raise ValueError("standardization expects partition content")
    return content_embedding(mu, (1,) * sum(mu), t)


# ---------------------------------------------------------------------------
# whole posets


@dataclass(frozen=True)
class CyclagePoset:
    """The graded cover graph of all tableaux of one content."""

    alpha: tuple[int, ...]
    vertices: tuple[Tableau, ...]
    edges: tuple[CyclageEdge, ...]
    grades: tuple[int, ...]  # cocharge of each vertex, parallel to vertices

    def bottoms(self):
        uppers = {e.upper for e in self.edges}
        return tuple(v for v in self.vertices if v not in uppers)


MAX_POSET_SIZE = 8


def cyclage_poset(alpha) -> CyclagePoset:
    """Build the full cover graph over all tableaux of content ``alpha``.

    Contents that are not partitions are conjugated through the plactic
    action of the sorting permutation, which is a shape-preserving poset
    isomorphism onto the dominant rearrangement.
    """
    alpha = tuple(alpha)
    if sum(alpha) > MAX_POSET_SIZE:
        raise ValueError(f"poset size {sum(alpha)} exceeds {MAX_POSET_SIZE}")
    verts = all_cst_of_content(alpha)
    sorted_alpha, w = dominant_sort(alpha)
    w_inv = perm_inverse(w)
    is_dominant = trim(sorted_alpha) == trim(alpha)

    def to_dominant(t):
        return t if is_dominant else refill(t, plactic_act(w_inv, t.word()))

    def from_dominant(t):
        return t if is_dominant else refill(t, plactic_act(w, t.word()))

    edges = []
    for v in verts:
        for e in cyclage_covers(to_dominant(v)):
            if is_dominant:
                edges.append(e)
            else:
                edges.append(
                    CyclageEdge(
                        v,
                        from_dominant(e.lower),
                        e.start_cell,
                        e.letter,
                        e.intermediate,
                        e.end_cell,
                    )
                )
    grades = tuple(cocharge_grade(v) for v in verts)
    return CyclagePoset(alpha, verts, tuple(edges), grades)
