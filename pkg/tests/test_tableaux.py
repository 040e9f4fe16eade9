import itertools

import pytest

from qlr.shapes import partitions
from qlr.tableaux import (
    EMPTY,
    Tableau,
    column_rsk,
    column_rsk_inverse,
    content,
    enumerate_cst,
    evacuation,
    h_slice,
    jdt_slide,
    knuth_equivalent,
    overlap,
    schensted_p,
    schensted_p_by_columns,
    straight_cst,
    tab,
    two_row_tableau,
    v_slice,
    yamanouchi_tableau,
)


def knuth_neighbors(w):
    out = []
    for i in range(len(w) - 2):
        a, b, c = w[i], w[i + 1], w[i + 2]
        if a <= c < b or b <= c < a:
            out.append(w[:i] + (b, a, c) + w[i + 3:])
        if b < a <= c or c < a <= b:
            out.append(w[:i] + (a, c, b) + w[i + 3:])
    return out


def knuth_class(w):
    seen = {w}
    frontier = [w]
    while frontier:
        nxt = []
        for u in frontier:
            for v in knuth_neighbors(u):
                if v not in seen:
                    seen.add(v)
                    nxt.append(v)
        frontier = nxt
    return seen


def all_words(alphabet, max_len):
    for ln in range(max_len + 1):
        yield from itertools.product(range(1, alphabet + 1), repeat=ln)


def test_reading_word_and_content():
    t = Tableau([[1, 2, 2], [1, 2, 3], [2, 3, 3], [4, 4, 5]], (3, 2))
    assert t.word() == (4, 4, 5, 2, 3, 3, 1, 2, 3, 1, 2, 2)
    assert t.content() == (2, 4, 3, 2, 1)
    assert t.outer == (6, 5, 3, 3)
    assert t.is_column_strict()
    assert tab([1, 1, 2]).word() == (1, 1, 2)
    assert EMPTY.word() == ()
    assert content(()) == ()
    assert content((4, 3, 2, 3, 4, 1, 1, 2, 5, 5)) == (2, 2, 2, 2, 2)


def test_schensted_examples():
    assert schensted_p((2, 1, 1)) == tab([1, 1], [2])
    assert schensted_p((4, 3, 5, 3)) == tab([3, 3], [4, 5])
    assert schensted_p(()) == EMPTY


def test_schensted_word_is_knuth_equivalent():
    for w in all_words(3, 7):
        p = schensted_p(w)
        assert p.is_column_strict()
        assert p.word() in knuth_class(w)


def test_row_and_column_insertion_agree():
    for w in all_words(4, 6):
        assert schensted_p(w) == schensted_p_by_columns(w)


def test_single_knuth_moves_leave_p_fixed():
    for w in all_words(4, 6):
        p = schensted_p(w)
        for v in knuth_neighbors(w):
            assert schensted_p(v) == p


def test_schensted_fixed_on_tableau_words():
    for n in range(7):
        for shape in partitions(n):
            for cnt in itertools.product(range(n + 1), repeat=min(n, 3)):
                if sum(cnt) != n:
                    continue
                for t in straight_cst(shape, cnt):
                    assert schensted_p(t.word()) == t


def test_reverse_insertions_invert_insertions():
    from qlr.tableaux import (
        _column_insert,
        _reverse_column_insert,
        _reverse_row_insert,
        _row_insert,
    )

    for w in all_words(3, 6):
        rows = []
        for x in w:
            before = [list(r) for r in rows]
            cell = _row_insert(rows, x)
            undo = [list(r) for r in rows]
            assert _reverse_row_insert(undo, cell) == x
            assert undo == before
        rows = []
        for x in w:
            before = [list(r) for r in rows]
            cell = _column_insert(rows, x)
            undo = [list(r) for r in rows]
            assert _reverse_column_insert(undo, cell) == x
            assert undo == before


def test_knuth_equivalent():
    assert knuth_equivalent((1, 3, 2), (3, 1, 2))
    assert not knuth_equivalent((1, 2), (2, 1))
    assert knuth_equivalent((2, 1, 1), (2, 1, 1))


def test_column_rsk_single_word():
    p, q = column_rsk([(1, 2, 3)])
    assert p == tab([1, 2, 3])
    assert q == tab([1, 1, 1])


def test_column_rsk_rejects_decreasing_words():
    with pytest.raises(ValueError):
        column_rsk([(2, 1)])


def test_column_rsk_content():
    words = [(1, 1), (2,), (1, 2, 2)]
    p, q = column_rsk(words)
    assert q.content() == (2, 1, 3)
    assert p.content() == content(tuple(itertools.chain(*words)))


def word_sequences(alphabet, max_words, total):
    singles = [()]
    for ln in range(1, total + 1):
        singles.extend(
            itertools.combinations_with_replacement(range(1, alphabet + 1), ln)
        )
    for k in range(1, max_words + 1):
        for combo in itertools.product(singles, repeat=k):
            if sum(len(w) for w in combo) <= total:
                yield list(combo)


def test_column_rsk_roundtrip():
    for words in word_sequences(3, 3, 5):
        p, q = column_rsk(words)
        back = column_rsk_inverse(p, q, labels=list(range(1, len(words) + 1)))
        assert back == [tuple(w) for w in words]


def test_column_rsk_inverse_rejects_malformed_pairs():
    with pytest.raises(ValueError):
        column_rsk_inverse(tab([1, 2]), tab([1], [2]))
    with pytest.raises(ValueError):
        column_rsk_inverse(tab([1], [1]), tab([1], [2]))


def test_evacuation_examples():
    assert evacuation(tab([1, 2], [3]), 3) == tab([1, 3], [2])
    assert evacuation(tab([1, 1, 2]), 2) == tab([1, 2, 2])


def test_evacuation_involution():
    n = 4
    for size in range(7):
        for cnt in itertools.product(range(size + 1), repeat=n):
            if sum(cnt) != size:
                continue
            for shape in partitions(size, max_len=n):
                for t in straight_cst(shape, cnt):
                    e = evacuation(t, n)
                    assert e.outer == t.outer
                    padded = lambda u: (u.content() + (0,) * n)[:n]
                    assert padded(e) == tuple(reversed(padded(t)))
                    assert evacuation(e, n) == t


def test_h_slice():
    s = tab([1, 2, 3, 4, 7], [5, 6, 9], [8])
    assert h_slice(s, 1) == tab([1, 2, 3, 4, 5, 6, 9], [7, 8])
    assert h_slice(s, 0) == schensted_p(s.word())
    assert h_slice(s, 5) == schensted_p(s.word())


def test_v_slice():
    s = tab([1, 2, 3], [4, 5], [6])
    assert v_slice(s, 0) == schensted_p(s.word())
    assert v_slice(s, 7) == schensted_p(s.word())
    # slicing in the middle still lands in the same Knuth class union
    for c in range(4):
        out = v_slice(s, c)
        assert out.is_column_strict()
        assert sorted(out.word()) == sorted(s.word())


def test_overlap():
    assert overlap((2,), (1, 2)) == 1
    assert overlap((), (1, 1)) == 0
    with pytest.raises(ValueError):
        overlap((2, 1), (1,))


def test_overlap_knuth_invariance():
    pairs = [((2, 3), (1, 1)), ((1, 2), (1, 2)), ((2, 2), (1, 2, 3))]
    for v, u in pairs:
        k = overlap(v, u)
        for w in knuth_class(v + u):
            assert len(schensted_p(w).outer) < 2 or schensted_p(w).outer[1] == k


def test_two_row_tableau():
    t = two_row_tableau((2, 2, 2, 5, 6), (3, 3, 3, 5, 6, 7, 7, 7))
    assert t == Tableau([[2, 2, 2, 5, 6], [3, 3, 3, 5, 6, 7, 7, 7]], (3,))
    assert t.is_column_strict()


def test_jdt_slide_preserves_class():
    t = Tableau([[2, 3], [1, 3], [2]], (2, 1))
    slid = jdt_slide(t, (0, 1))
    assert slid.is_column_strict()
    assert schensted_p(slid.word()) == schensted_p(t.word())
    with pytest.raises(ValueError):
        jdt_slide(t, (2, 0))


def inner_corners(t):
    out = []
    for i in range(len(t.rows)):
        j = t.inner_at(i) - 1
        if j < 0:
            continue
        if i + 1 < len(t.rows) and t.inner_at(i + 1) > j:
            continue
        out.append((i, j))
    return out


def test_jdt_slides_exhaustively_small():
    # every inward slide of a small skew tableau keeps the Knuth class
    for outer in partitions(5):
        for inner in partitions(2):
            if len(inner) > len(outer) or any(
                inner[i] > outer[i] for i in range(len(inner))
            ):
                continue
            size = sum(outer) - sum(inner)
            for cnt in itertools.product(range(size + 1), repeat=3):
                if sum(cnt) != size:
                    continue
                for t in enumerate_cst(outer, inner, cnt):
                    for cell in inner_corners(t):
                        slid = jdt_slide(t, cell)
                        assert slid.size == t.size
                        assert slid.is_column_strict()
                        assert schensted_p(slid.word()) == schensted_p(t.word())


def test_enumerate_cst_examples():
    assert len(straight_cst((2, 1), (1, 1, 1))) == 2
    assert len(straight_cst((1,), (1,))) == 1
    only = straight_cst((2, 2), (2, 1, 1))
    assert only == (tab([1, 1], [2, 3]),)
    # deterministic order: sorted by reading word
    words = [t.word() for t in straight_cst((2, 1), (1, 1, 1))]
    assert words == sorted(words)
    # skew enumeration stays column strict
    for t in enumerate_cst((3, 2), (1,), (2, 1, 1)):
        assert t.is_column_strict()
        assert t.content() == (2, 1, 1)


def test_yamanouchi_tableau():
    assert yamanouchi_tableau((3, 1)) == tab([1, 1, 1], [2])
    y = yamanouchi_tableau((3, 2, 1))
    assert y.content() == (3, 2, 1)
