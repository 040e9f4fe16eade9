"""Integer partitions, weights, dominance order, and index normalization.

Everything in this module is a pure function on tuples of integers, so all
values are hashable and safe to share across threads.  Conventions:

* a *weight* is a fixed-length tuple of (possibly negative) integers;
* a *partition* is a weakly decreasing tuple of nonnegative integers whose
  canonical form trims trailing zeros;
* a *composition* is a tuple of nonnegative integers;
* a permutation ``w`` is stored in one-line notation as a tuple with
  ``w[i] == w(i+1)`` (0-based storage, 1-based values), acting on weights by
  ``(w.v)[i] = v[w^{-1}(i)]``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cache

Vec = tuple[int, ...]


# ---------------------------------------------------------------------------
# basic vector utilities


def trim(p) -> Vec:
    """Canonical form of a partition-like vector: drop trailing zeros."""
    p = tuple(p)
    while p and p[-1] == 0:
        p = p[:-1]
    return p


def pad(p, n: int) -> Vec:
    """Pad a vector with trailing zeros to length ``n``."""
    p = tuple(p)
    if len(p) > n:
        if any(p[n:]):
            raise ValueError(f"cannot pad {p} to length {n}")
        return p[:n]
    return p + (0,) * (n - len(p))


def is_weakly_decreasing(p) -> bool:
    return all(a >= b for a, b in zip(p, p[1:]))


def is_partition(p) -> bool:
    """True for a weakly decreasing vector of nonnegative integers."""
    p = tuple(p)
    return is_weakly_decreasing(p) and (not p or p[-1] >= 0)


def conjugate(p) -> Vec:
    """Transpose of the Ferrers diagram of a partition."""
    p = trim(p)
    if not p:
        return ()
    return tuple(sum(1 for x in p if x > j) for j in range(p[0]))


def n_stat(mu) -> int:
    """The statistic sum_i (i-1)*mu_i on a partition."""
    return sum(i * x for i, x in enumerate(mu))


def dominates(a, b) -> bool:
    """Dominance comparison: every partial sum of ``a`` weakly exceeds ``b``'s.

    Both vectors must have the same total; comparing vectors of different
    sizes is a programming error, not a False.
    """
    a, b = tuple(a), tuple(b)
    if sum(a) != sum(b):
        raise ValueError(f"dominance needs equal totals: {a} vs {b}")
    n = max(len(a), len(b))
    sa = sb = 0
    for i in range(n):
        sa += a[i] if i < len(a) else 0
        sb += b[i] if i < len(b) else 0
        if sa < sb:
            return False
    return True


def rho(n: int) -> Vec:
    """The staircase weight (n-1, n-2, ..., 1, 0)."""
    return tuple(range(n - 1, -1, -1))


def vec_add(a, b) -> Vec:
    return tuple(x + y for x, y in zip(a, b))


def vec_sub(a, b) -> Vec:
    return tuple(x - y for x, y in zip(a, b))


# ---------------------------------------------------------------------------
# permutations (one-line notation)


def inversions(w) -> int:
    return sum(1 for i, j in itertools.combinations(range(len(w)), 2) if w[i] > w[j])


def perm_sign(w) -> int:
    return -1 if inversions(w) % 2 else 1


def perm_inverse(w) -> Vec:
    inv = [0] * len(w)
    for i, x in enumerate(w):
        inv[x - 1] = i + 1
    return tuple(inv)


def perm_mul(u, v) -> Vec:
    """Composition u*v, acting as functions: (u*v)(i) = u(v(i))."""
    return tuple(u[v[i] - 1] for i in range(len(u)))


def perm_apply(w, v) -> Vec:
    """Place permutation: entry at position j moves to position w(j)."""
    out = [0] * len(v)
    for j, i in enumerate(w):
        out[i - 1] = v[j]
    return tuple(out)


def identity_perm(n: int) -> Vec:
    return tuple(range(1, n + 1))


def adjacent_transposition(n: int, r: int) -> Vec:
    """The simple transposition swapping r and r+1 (1-based) in S_n."""
    w = list(range(1, n + 1))
    w[r - 1], w[r] = w[r], w[r - 1]
    return tuple(w)


def all_permutations(n: int):
    return itertools.permutations(range(1, n + 1))


def reduced_word(w) -> Vec:
    """A reduced decomposition of ``w`` into simple reflections.

    Returns indices (i_1, ..., i_p) with w = s_{i_1} ... s_{i_p} as a
    composition of functions (s_{i_p} applied first).  Produced by bubble
    sorting the one-line notation, so its length equals the inversion count.
    """
    v = list(w)
    swaps = []
    done = False
    while not done:
        done = True
        for i in range(len(v) - 1):
            if v[i] > v[i + 1]:
                v[i], v[i + 1] = v[i + 1], v[i]
                swaps.append(i + 1)
                done = False
                break
    # sorting multiplied w on the right by s_{a_1}...s_{a_p}, so
    # w = s_{a_p} ... s_{a_1}
    return tuple(reversed(swaps))


def dominant_sort(a):
    """Sort a weight into dominant (weakly decreasing) order.

    Returns ``(a_plus, w)`` where ``perm_apply(w, a_plus) == a`` and ``w`` is
    the shortest such permutation; stability among equal entries realizes the
    minimal inversion count.
    """
    a = tuple(a)
    order = sorted(range(len(a)), key=lambda j: (-a[j], j))
    a_plus = tuple(a[j] for j in order)
    w = tuple(j + 1 for j in order)
    return a_plus, w


def sort_sign(v):
    """Sign and sorted form of a repeat-free vector; None on a repeat."""
    v = tuple(v)
    if len(set(v)) < len(v):
        return None
    inv = sum(1 for i, j in itertools.combinations(range(len(v)), 2) if v[i] < v[j])
    return (-1 if inv % 2 else 1), tuple(sorted(v, reverse=True))


# ---------------------------------------------------------------------------
# the block data attached to a pair (eta, gamma)


def block_bounds(eta) -> tuple[tuple[int, int], ...]:
    """1-based closed intervals A_i = [eta_1+..+eta_{i-1}+1, eta_1+..+eta_i]."""
    out = []
    start = 1
    for e in eta:
        out.append((start, start + e - 1))
        start += e
    return tuple(out)


def roots_of(eta) -> frozenset:
    """Matrix positions (i, j) strictly above the block diagonal of ``eta``."""
    n = sum(eta)
    blocks = block_bounds(eta)
    block_index = {}
    for k, (a, b) in enumerate(blocks):
        for i in range(a, b + 1):
            block_index[i] = k
    return frozenset(
        (i, j)
        for i in range(1, n + 1)
        for j in range(i + 1, n + 1)
        if block_index[i] < block_index[j]
    )


@dataclass(frozen=True)
class RectSequence:
    """A sequence of block weights: the slices of ``gamma`` over ``eta``'s blocks.

    ``rects[i]`` keeps exactly ``eta[i]`` parts (trailing zeros included) so
    that the block alphabets stay explicit.
    """

    eta: Vec
    gamma: Vec

    def __post_init__(self):
        object.__setattr__(self, "eta", tuple(self.eta))
        object.__setattr__(self, "gamma", tuple(self.gamma))
        if sum(self.eta) != len(self.gamma):
            raise ValueError(f"eta {self.eta} does not tile gamma {self.gamma}")
        if any(e <= 0 for e in self.eta):
            raise ValueError(f"eta parts must be positive: {self.eta}")

    @property
    def n(self) -> int:
        return len(self.gamma)

    @property
    def t(self) -> int:
        return len(self.eta)

    @property
    def intervals(self):
        return block_bounds(self.eta)

    @property
    def rects(self) -> tuple[Vec, ...]:
        out = []
        start = 0
        for e in self.eta:
            out.append(self.gamma[start:start + e])
            start += e
        return tuple(out)

    def tail(self) -> "RectSequence":
        """The sequence with the first block removed (alphabet relabelled)."""
        m = self.eta[0]
        return RectSequence(self.eta[1:], self.gamma[m:])

    def is_dominant(self) -> bool:
        return is_weakly_decreasing(self.gamma)

    def all_partitions(self) -> bool:
        return all(is_partition(r) for r in self.rects)

    def key(self):
        return (self.eta, self.gamma)


def rect_sequence(eta, gamma) -> RectSequence:
    """Slice the weight ``gamma`` into blocks of sizes ``eta``."""
    return RectSequence(tuple(eta), tuple(gamma))


def from_rects(rects) -> RectSequence:
    """Build a RectSequence from an explicit list of block weights."""
    rects = [tuple(r) if r else (0,) for r in rects]
    eta = tuple(len(r) for r in rects)
    gamma = tuple(itertools.chain.from_iterable(rects))
    return RectSequence(eta, gamma)


def normalize_index(lam, gamma, eta):
    """Straighten an index triple to one with partition lambda and blocks.

    Returns ``None`` when the polynomial is identically zero, otherwise
    ``(sign, lam', gamma')`` where ``lam'`` is a partition, every block slice
    of ``gamma'`` is a partition, and all entries are nonnegative.  The
    associated polynomial equals ``sign`` times the one for the returned
    index.  Idempotent on already-normalized indices.
    """
    lam, gamma, eta = tuple(lam), tuple(gamma), tuple(eta)
    n = sum(eta)
    if len(lam) != n or len(gamma) != n:
        raise ValueError("lambda, gamma and eta must agree on n")
    if sum(lam) != sum(gamma):
        return None

    sign = 1
    res = sort_sign(vec_add(lam, rho(n)))
    if res is None:
        return None
    s, srt = res
    sign *= s
    lam2 = vec_sub(srt, rho(n))

    gamma2 = []
    start = 0
    for e in eta:
        piece = gamma[start:start + e]
        start += e
        res = sort_sign(vec_add(piece, rho(e)))
        if res is None:
            return None
        s, srt = res
        sign *= s
        gamma2.extend(vec_sub(srt, rho(e)))
    gamma2 = tuple(gamma2)

    shift = -min(min(lam2, default=0), min(gamma2, default=0), 0)
    lam3 = tuple(x + shift for x in lam2)
    gamma3 = tuple(x + shift for x in gamma2)
    return sign, lam3, gamma3


def box_complement(lam, rseq: RectSequence, size=None):
    """Complement ``lam`` and every block inside width-``size`` boxes.

    ``lam`` is complemented in the n x size box and rotated; block i in its
    eta_i x size box; the block order is reversed.  ``size=None`` picks the
    minimal legal width.
    """
    lam = pad(lam, rseq.n)
    biggest = max((max(lam, default=0), max(rseq.gamma, default=0)))
    if size is None:
        size = biggest
    if size < biggest:
        raise ValueError(f"box width {size} too small for {lam} / {rseq.gamma}")
    lam_c = tuple(size - x for x in reversed(lam))
    new_rects = [tuple(size - x for x in reversed(r)) for r in reversed(rseq.rects)]
    return lam_c, from_rects(new_rects)


# ---------------------------------------------------------------------------
# enumeration helpers


@cache
def partitions(n: int, max_len: int | None = None, max_part: int | None = None):
    """All partitions of ``n`` (trimmed form), optionally bounded."""
    if max_part is None:
        max_part = n
    if max_len is None:
        max_len = n
    if n == 0:
        return ((),)
    if max_len == 0 or max_part == 0:
        return ()
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, max_len - 1, first):
            out.append((first,) + rest)
    return tuple(out)


def partitions_upto(n: int, max_len: int | None = None):
    """All partitions of every size 0..n."""
    for s in range(n + 1):
        yield from partitions(s, max_len)


@cache
def compositions(n: int):
    """All compositions of ``n`` into positive parts."""
    if n == 0:
        return ((),)
    out = []
    for first in range(1, n + 1):
        for rest in compositions(n - first):
            out.append((first,) + rest)
    return tuple(out)


def weak_compositions(n: int, k: int):
    """All ways to write ``n`` as an ordered sum of ``k`` nonnegative parts."""
    if k == 0:
        if n == 0:
            yield ()
        return
    if k == 1:
        yield (n,)
        return
    for first in range(n + 1):
        for rest in weak_compositions(n - first, k - 1):
            yield (first,) + rest


def partitions_containing(beta, size: int, max_len: int):
    """Partitions of ``size`` with at most ``max_len`` parts containing ``beta``."""
    beta = trim(beta)
    if len(beta) > max_len or sum(beta) > size:
        return

    def gen(i, remaining, prev):
        if i == max_len:
            if remaining == 0:
                yield ()
            return
        low = beta[i] if i < len(beta) else 0
        if low > prev or remaining < low:
            return
        for x in range(min(prev, remaining), low - 1, -1):
            # the lower bound keeps beta inside, the upper keeps it a partition
            if remaining - x > (max_len - i - 1) * x:
                continue
            for rest in gen(i + 1, remaining - x, x):
                yield (x,) + rest

    for p in gen(0, size, size):
        yield trim(p)
