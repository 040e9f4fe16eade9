"""Crystal reflection/raising/lowering operators on words and tableaux.

For a letter r, every r in a word is read as a right parenthesis and every
r+1 as a left parenthesis; after the usual matching, the unpaired letters
form a subword r^p (r+1)^q.  The operators rewrite that unpaired subword in
place: reflection -> r^q (r+1)^p, raising -> r^{p+1} (r+1)^{q-1},
lowering -> r^{p-1} (r+1)^{q+1}.
"""

from __future__ import annotations

from dataclasses import dataclass

from .shapes import dominant_sort, pad, perm_inverse, reduced_word, trim
from .tableaux import Tableau, Word, content


@dataclass(frozen=True)
class RPairing:
    """Parenthesis matching data for one letter r (positions are 0-based)."""

    r: int
    paired: tuple[tuple[int, int], ...]  # (position of r+1, position of r)
    unpaired_low: tuple[int, ...]        # unpaired r's, left to right
    unpaired_high: tuple[int, ...]       # unpaired r+1's, left to right


def r_pairing(w, r: int) -> RPairing:
    """Stack-match the letters r (right parens) and r+1 (left parens)."""
    if r < 1:
        raise ValueError("r must be a positive letter")
    stack: list[int] = []
    paired: list[tuple[int, int]] = []
    low: list[int] = []
    for pos, x in enumerate(w):
        if x == r + 1:
            stack.append(pos)
        elif x == r:
            if stack:
                paired.append((stack.pop(), pos))
            else:
                low.append(pos)
    return RPairing(r, tuple(paired), tuple(low), tuple(stack))


def _rewrite(w, pairing: RPairing, p: int, q: int) -> Word:
    slots = list(pairing.unpaired_low) + list(pairing.unpaired_high)
    if p + q != len(slots):
        raise ValueError("unpaired subword length mismatch")
    out = list(w)
    for k, pos in enumerate(slots):
        out[pos] = pairing.r if k < p else pairing.r + 1
    return tuple(out)


def reflection(w, r: int) -> Word:
    """The involution swapping the numbers of r's and (r+1)'s."""
    w = tuple(w)
    pr = r_pairing(w, r)
    return _rewrite(w, pr, len(pr.unpaired_high), len(pr.unpaired_low))


def raising(w, r: int):
    """Turn the leftmost unpaired r+1 into an r; None when impossible."""
    w = tuple(w)
    pr = r_pairing(w, r)
    p, q = len(pr.unpaired_low), len(pr.unpaired_high)
    if q == 0:
        return None
    return _rewrite(w, pr, p + 1, q - 1)


def lowering(w, r: int):
    """Turn the rightmost unpaired r into an r+1; None when impossible."""
    w = tuple(w)
    pr = r_pairing(w, r)
    p, q = len(pr.unpaired_low), len(pr.unpaired_high)
    if p == 0:
        return None
    return _rewrite(w, pr, p - 1, q + 1)


def plactic_act(w_perm, u) -> Word:
    """Act by a permutation through its reduced decomposition of reflections.

    Well defined because the reflections satisfy the Moore-Coxeter relations;
    the bubble-sort decomposition used here is one convenient choice.
    """
    u = tuple(u)
    for r in reversed(reduced_word(w_perm)):
        u = reflection(u, r)
    return u


def sort_to_partition_content(u) -> Word:
    """Act by the inverse sorting permutation, making the content dominant."""
    u = tuple(u)
    if not u:
        return u
    alpha = content(u)
    _, w = dominant_sort(alpha)
    return plactic_act(perm_inverse(w), u)


def apply_to_tableau(op, t: Tableau, *args):
    """Apply a word operator to a tableau through its reading word."""
    w = op(t.word(), *args)
    if w is None:
        return None
    return refill(t, w)


def refill(t: Tableau, w) -> Tableau:
    """Rebuild a tableau of t's shape from a reading word."""
    w = tuple(w)
    rows = []
    pos = len(w)
    for r in t.rows:
        rows.append(w[pos - len(r):pos])
        pos -= len(r)
    out = Tableau(rows, t.inner)
    if not out.is_column_strict():
        raise ValueError("word does not fill the shape column-strictly")
    return out


# ---------------------------------------------------------------------------
# lattice words


def is_mu_lattice(w, mu) -> bool:
    """True when mu plus the content of every final subword is a partition."""
    mu = trim(mu)
    counts: dict[int, int] = {}
    for x in reversed(tuple(w)):
        counts[x] = counts.get(x, 0) + 1
        if x == 1:
            continue
        cx = counts[x] + (mu[x - 1] if x - 1 < len(mu) else 0)
        cp = counts.get(x - 1, 0) + (mu[x - 2] if x - 2 < len(mu) else 0)
        if cx > cp:
            return False
    return True


def is_lattice(w) -> bool:
    return is_mu_lattice(w, ())


def lattice_violation(w, mu=()) -> int | None:
    """Letter r such that the rightmost lattice failure of ``w`` is at r+1."""
    mu = trim(mu)
    counts: dict[int, int] = {}
    for x in reversed(tuple(w)):
        counts[x] = counts.get(x, 0) + 1
        if x == 1:
            continue
        cx = counts[x] + (mu[x - 1] if x - 1 < len(mu) else 0)
        cp = counts.get(x - 1, 0) + (mu[x - 2] if x - 2 < len(mu) else 0)
        if cx > cp:
            return x - 1
    return None


def lattice_involution(w, mu=()) -> Word:
    """The pairing on non-mu-lattice words: s_r e_r^{mu_r - mu_{r+1} + 1}.

    Here r+1 is the rightmost letter where mu-latticeness fails.  Applying
    the map twice gives the original word back.
    """
    w = tuple(w)
    r = lattice_violation(w, mu)
    if r is None:
        raise ValueError(f"{w} is already lattice for mu={mu}")
    mu = pad(trim(mu), r + 1)
    out = w
    for _ in range(mu[r - 1] - mu[r] + 1):
        out = raising(out, r)
        if out is None:
            raise RuntimeError("raising ran out of unpaired letters")
    return reflection(out, r)
