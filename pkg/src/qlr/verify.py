"""Cross-check sweeps, conjecture scans, and theorem checks.

Everything here enumerates explicit index families or word ranges, runs the
relevant identities, and collects counterexamples into a ScanReport instead
of raising, so the CLI can turn findings into exit codes and reports.  The
reducers are order-insensitive; sweeps are deterministic unless a sample
seed is supplied.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass, field

from .catabolism import (
    catabolism_type,
    is_mu_catabolizable,
    is_mu_column_catabolizable,
)
from .charge import charge, cocharge_grade, cocharge_tableau
from .crystal import is_mu_lattice, plactic_act
from .cyclage import cyclage_standardization
from .kpoly import (
    KIndex,
    PROVEN,
    QPoly,
    ZERO,
    charge_engine_status,
    compute,
    default_degree_bound,
    dominant_reorderings,
    dual_index,
    k_at_one,
    k_by_charge,
    k_by_kostant,
    k_by_recurrence,
    series_decomposition,
)
from .shapes import (
    box_complement,
    compositions,
    dominates,
    is_weakly_decreasing,
    pad,
    partitions,
    rect_sequence,
    trim,
)
from .tableaux import (
    Tableau,
    column_rsk,
    evacuation,
    standard_tableaux,
    straight_cst,
)


@dataclass
class ScanReport:
    descriptor: dict
    checks: int = 0
    counterexamples: list = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.counterexamples

    def found(self, **kwargs):
        self.counterexamples.append(kwargs)

    def to_json(self) -> dict:
        return {
            "descriptor": self.descriptor,
            "checks": self.checks,
            "counterexamples": [
                {k: repr(v) for k, v in ce.items()} for ce in self.counterexamples
            ],
            "elapsed_s": round(self.elapsed, 3),
            "ok": self.ok,
        }


def index_family(max_n: int, max_weight: int):
    """All (lambda, gamma, eta) with dominant gamma, grouped by (gamma, eta).

    Yields tuples (gamma, eta, [lambdas]) with every weight padded to n.
    """
    for n in range(1, max_n + 1):
        for s in range(max_weight + 1):
            for gam in partitions(s, max_len=n):
                gamma = pad(gam, n)
                lams = [pad(p, n) for p in partitions(s, max_len=n)]
                for eta in compositions(n):
                    yield gamma, eta, lams


def _maybe_sample(groups, sample):
    if sample is None:
        return groups
    seed, count = sample
    groups = list(groups)
    rng = random.Random(seed)
    if count >= len(groups):
        return groups
    return rng.sample(groups, count)


def crosscheck_family(
    max_n: int,
    max_weight: int,
    *,
    include_charge: bool = True,
    include_dualities: bool = True,
    sample=None,
    cache=None,
) -> ScanReport:
    """Engine agreement plus the q=1, duality, and symmetry identities.

    ``sample`` is an optional (seed, group_count) pair restricting the sweep
    to a random subset of (gamma, eta) groups.  ``cache`` maps
    (index key, engine) -> (QPoly, status); cached polynomials are compared
    against the recomputed ones, so a corrupted cache surfaces as a
    counterexample.
    """
    t0 = time.time()
    rep = ScanReport(
        descriptor={
            "kind": "crosscheck",
            "max_n": max_n,
            "max_weight": max_weight,
            "sample": list(sample) if sample else None,
        }
    )
    groups = _maybe_sample(index_family(max_n, max_weight), sample)
    for gamma, eta, lams in groups:
        n = len(gamma)
        s = sum(gamma)
        rseq = rect_sequence(eta, gamma)
        bound = default_degree_bound((s,) + (0,) * (n - 1), gamma) if n else 0
        decomposition = series_decomposition(gamma, eta, bound) if bound >= 0 else {}
        proven = charge_engine_status(rseq) == PROVEN and rseq.is_dominant()
        for lam in lams:
            idx = KIndex(lam, gamma, eta)
            p_rec = k_by_recurrence(lam, rseq)
            p_kos = k_by_kostant(idx)
            p_ser = decomposition.get(lam, ZERO)
            rep.checks += 1
            if not (p_rec == p_kos == p_ser):
                rep.found(
                    check="engines",
                    index=idx,
                    recurrence=p_rec,
                    kostant=p_kos,
                    series=p_ser,
                )
                continue
            if include_charge and proven:
                p_charge = k_by_charge(lam, rseq).poly
                rep.checks += 1
                if p_charge != p_rec:
                    rep.found(check="charge", index=idx, charge=p_charge, exact=p_rec)
            rep.checks += 1
            if p_rec.at_one() != k_at_one(lam, rseq):
                rep.found(check="q=1", index=idx, poly=p_rec, lr=k_at_one(lam, rseq))
            if include_dualities:
                rep.checks += 1
                p_dual, _ = compute(dual_index(idx), "recurrence")
                if p_dual != p_rec:
                    rep.found(check="dual", index=idx, poly=p_rec, dual=p_dual)
                lam_c, rs_c = box_complement(lam, rseq)
                rep.checks += 1
                p_box = k_by_recurrence(lam_c, rs_c)
                if p_box != p_rec:
                    rep.found(check="box", index=idx, poly=p_rec, complement=p_box)
                if rseq.is_dominant():
                    for other in dominant_reorderings(rseq):
                        if other == rseq:
                            continue
                        rep.checks += 1
                        p_sym = k_by_recurrence(pad(lam, other.n), other)
                        if p_sym != p_rec:
                            rep.found(
                                check="symmetry",
                                index=idx,
                                reordering=other,
                                poly=p_rec,
                                other=p_sym,
                            )
            if cache is not None:
                for engine, value in (("recurrence", p_rec), ("kostant", p_kos)):
                    cached = cache.get((index_key(idx), engine))
                    if cached is not None:
                        rep.checks += 1
                        if cached[0] != value:
                            rep.found(
                                check="cache",
                                index=idx,
                                engine=engine,
                                cached=cached[0],
                                computed=value,
                            )
    rep.elapsed = time.time() - t0
    return rep


def index_key(idx: KIndex) -> str:
    norm = idx.normalized()
    if norm is None:
        return "zero"
    _, nidx = norm
    return f"{list(nidx.lam)}|{list(nidx.gamma)}|{list(nidx.eta)}"


# ---------------------------------------------------------------------------
# conjecture scans


def scan_positivity(max_n: int, max_weight: int, *, sample=None) -> ScanReport:
    """Dominant gamma should give nonnegative coefficients."""
    t0 = time.time()
    rep = ScanReport(
        descriptor={"kind": "positivity", "max_n": max_n, "max_weight": max_weight}
    )
    for gamma, eta, lams in _maybe_sample(index_family(max_n, max_weight), sample):
        rseq = rect_sequence(eta, gamma)
        for lam in lams:
            poly = k_by_recurrence(lam, rseq)
            rep.checks += 1
            if not poly.is_nonnegative():
                rep.found(check="positivity", index=KIndex(lam, gamma, eta), poly=poly)
    rep.elapsed = time.time() - t0
    return rep


def scan_catabolizable(max_n: int, max_weight: int, *, sample=None) -> ScanReport:
    """The charge engine should match the exact engines on dominant inputs."""
    t0 = time.time()
    rep = ScanReport(
        descriptor={"kind": "catabolizable", "max_n": max_n, "max_weight": max_weight}
    )
    for gamma, eta, lams in _maybe_sample(index_family(max_n, max_weight), sample):
        rseq = rect_sequence(eta, gamma)
        if not rseq.is_dominant():
            continue
        for lam in lams:
            exact = k_by_recurrence(lam, rseq)
            conj = k_by_charge(lam, rseq)
            rep.checks += 1
            if conj.poly != exact:
                rep.found(
                    check="catabolizable",
                    index=KIndex(lam, gamma, eta),
                    status=conj.status,
                    charge=conj.poly,
                    exact=exact,
                )
    rep.elapsed = time.time() - t0
    return rep


def _splits(part: int):
    """Two-part refinements of one block size."""
    for a in range(1, part):
        yield (a, part - a)


def scan_monotonicity_refine(max_n: int, max_weight: int, *, sample=None) -> ScanReport:
    """Refining one block of a dominant sequence should grow K coefficientwise."""
    t0 = time.time()
    rep = ScanReport(
        descriptor={"kind": "monotonicity1", "max_n": max_n, "max_weight": max_weight}
    )
    for gamma, eta, lams in _maybe_sample(index_family(max_n, max_weight), sample):
        rseq = rect_sequence(eta, gamma)
        if not rseq.is_dominant():
            continue
        refinements = []
        for i, part in enumerate(eta):
            for split in _splits(part):
                refinements.append(eta[:i] + split + eta[i + 1:])
        if not refinements:
            continue
        for lam in lams:
            base = k_by_recurrence(lam, rseq)
            for eta2 in refinements:
                finer = rect_sequence(eta2, gamma)
                rep.checks += 1
                bigger = k_by_recurrence(lam, finer)
                if not base.leq(bigger):
                    rep.found(
                        check="monotonicity1",
                        index=KIndex(lam, gamma, eta),
                        refined_eta=eta2,
                        poly=base,
                        refined=bigger,
                    )
    rep.elapsed = time.time() - t0
    return rep


def _rectangle_runs(rseq):
    """Maximal runs of consecutive blocks that are full k-column rectangles."""
    rects = rseq.rects
    runs = []
    i = 0
    while i < len(rects):
        r = rects[i]
        width = r[0] if r else 0
        if width == 0 or any(x != width for x in r):
            i += 1
            continue
        j = i
        while j < len(rects) and rects[j] and all(x == width for x in rects[j]):
            j += 1
        if j > i:
            runs.append((i, j, width))
        i = j
    return runs


def scan_monotonicity_heights(max_n: int, max_weight: int, *, sample=None) -> ScanReport:
    """Spreading rectangle heights downward in dominance grows K."""
    t0 = time.time()
    rep = ScanReport(
        descriptor={"kind": "monotonicity2", "max_n": max_n, "max_weight": max_weight}
    )
    for gamma, eta, lams in _maybe_sample(index_family(max_n, max_weight), sample):
        rseq = rect_sequence(eta, gamma)
        if not rseq.is_dominant():
            continue
        variants = []
        for start, stop, _width in _rectangle_runs(rseq):
            heights = eta[start:stop]
            total = sum(heights)
            length = stop - start
            for beta in itertools.product(range(1, total + 1), repeat=length):
                if sum(beta) != total or beta == heights:
                    continue
                if not dominates(
                    tuple(sorted(heights, reverse=True)),
                    tuple(sorted(beta, reverse=True)),
                ):
                    continue
                variants.append(eta[:start] + beta + eta[stop:])
        if not variants:
            continue
        for lam in lams:
            base = k_by_recurrence(lam, rseq)
            for eta2 in variants:
                rep.checks += 1
                other = k_by_recurrence(lam, rect_sequence(eta2, gamma))
                if not base.leq(other):
                    rep.found(
                        check="monotonicity2",
                        index=KIndex(lam, gamma, eta),
                        new_eta=eta2,
                        poly=base,
                        other=other,
                    )
    rep.elapsed = time.time() - t0
    return rep


SCANS = {
    "positivity": scan_positivity,
    "catabolizable": scan_catabolizable,
    "monotonicity1": scan_monotonicity_refine,
    "monotonicity2": scan_monotonicity_heights,
}


# ---------------------------------------------------------------------------
# theorem checks


def check_cyc_image(n: int) -> ScanReport:
    """Image of the cyclage standardization = dominance cone of the type."""
    t0 = time.time()
    rep = ScanReport(descriptor={"kind": "cyc_image", "n": n})
    standard_by_type: dict = {}
    for shape in partitions(n):
        for s in standard_tableaux(shape):
            standard_by_type[s] = catabolism_type(s)
    for mu in partitions(n):
        image = set()
        for shape in partitions(n, max_len=len(mu)):
            for t in straight_cst(shape, mu):
                s = cyclage_standardization(t)
                rep.checks += 1
                if s in image:
                    rep.found(check="injectivity", mu=mu, collision=s)
                if s.outer != t.outer:
                    rep.found(check="shape", mu=mu, source=t, image=s)
                if cocharge_tableau(s) != cocharge_grade(t):
                    rep.found(check="grade", mu=mu, source=t, image=s)
                image.add(s)
        expected = {s for s, ct in standard_by_type.items() if dominates(ct, mu)}
        rep.checks += 1
        if image != expected:
            rep.found(check="image", mu=mu, missing=expected - image, extra=image - expected)
    rep.elapsed = time.time() - t0
    return rep


def check_row_col_cat(n: int) -> ScanReport:
    """Row and column catabolizability agree on standard tableaux."""
    t0 = time.time()
    rep = ScanReport(descriptor={"kind": "row_col_cat", "n": n})
    for shape in partitions(n):
        for t in standard_tableaux(shape):
            for mu in partitions(n):
                rep.checks += 1
                if is_mu_catabolizable(t, mu) != is_mu_column_catabolizable(t, mu):
                    rep.found(check="row_col_cat", tableau=t, mu=mu)
    rep.elapsed = time.time() - t0
    return rep


def _words(alphabet: int, length: int):
    return itertools.product(range(1, alphabet + 1), repeat=length)


def check_charge_axioms(max_len: int = 6, alphabet: int = 4) -> ScanReport:
    """The five defining properties of charge, exhaustively on small words."""
    from .shapes import all_permutations
    from .tableaux import content

    t0 = time.time()
    rep = ScanReport(
        descriptor={"kind": "charge_axioms", "max_len": max_len, "alphabet": alphabet}
    )
    perms = list(all_permutations(alphabet))
    rep.checks += 1
    if charge(()) != 0:
        rep.found(check="empty", value=charge(()))
    for ln in range(1, max_len + 1):
        for w in _words(alphabet, ln):
            c = charge(w)
            # (1) invariance under the plactic permutation action
            for p in perms:
                rep.checks += 1
                if charge(plactic_act(p, w)) != c:
                    rep.found(check="plactic", word=w, perm=p)
                    break
            # (5) constancy on Knuth classes, via single rewrites
            for v in _knuth_moves(w):
                rep.checks += 1
                if charge(v) != c:
                    rep.found(check="knuth", word=w, other=v)
            cnt = content(w)
            if is_weakly_decreasing(cnt):
                # (4) rotating a leading letter a > 1 raises charge by one
                if w[0] > 1:
                    rep.checks += 1
                    if charge(w[1:] + w[:1]) != c + 1:
                        rep.found(check="rotation", word=w)
                # (3) stripping the full run of 1's from the right end
                m1 = cnt[0]
                if m1 and w[ln - m1:] == (1,) * m1 and all(x > 1 for x in w[: ln - m1]):
                    rep.checks += 1
                    if charge(tuple(x - 1 for x in w[: ln - m1])) != c:
                        rep.found(check="strip_ones", word=w)
    rep.elapsed = time.time() - t0
    return rep


def _knuth_moves(w):
    """All words one elementary Knuth rewrite away from w."""
    out = []
    for i in range(len(w) - 2):
        a, b, c = w[i], w[i + 1], w[i + 2]
        # x z y <-> z x y for x <= y < z: swap the first two letters
        if a <= c < b or b <= c < a:
            out.append(w[:i] + (b, a, c) + w[i + 3:])
        # y x z <-> y z x for x < y <= z: swap the last two letters
        if b < a <= c or c < a <= b:
            out.append(w[:i] + (a, c, b) + w[i + 3:])
    return out


def check_white_fitting(total: int = 6, alphabet: int = 3) -> ScanReport:
    """Rows of a skew tableau exist iff the recording side is lattice.

    Forward: every skew column-strict tableau's row sequence gives a
    recording tableau of the right content that is inner-lattice.  Converse:
    every weakly increasing word sequence whose recording tableau passes the
    test assembles into a skew column-strict tableau.
    """
    t0 = time.time()
    rep = ScanReport(
        descriptor={"kind": "white_fitting", "total": total, "alphabet": alphabet}
    )
    for words in _word_sequences(total, alphabet, max_words=3):
        mu_len = len(words)
        _, q = column_rsk(words)
        for mu in partitions_bounded(total, mu_len):
            mu_p = pad(trim(mu), mu_len)
            lam = tuple(m + len(w) for m, w in zip(mu_p, words))
            rep.checks += 1
            assembles = _assembles(words, mu_p, lam)
            predicted = is_weakly_decreasing(lam) and is_mu_lattice(q.word(), mu_p)
            if assembles != predicted:
                rep.found(check="fitting", words=words, mu=mu_p, lam=lam)
    rep.elapsed = time.time() - t0
    return rep


def partitions_bounded(total, max_len):
    for s in range(total + 1):
        yield from partitions(s, max_len=max_len)


def _assembles(words, mu, lam) -> bool:
    if not is_weakly_decreasing(lam):
        return False
    try:
        t = Tableau([list(w) for w in words], trim(mu))
    except ValueError:
        return False
    return t.is_column_strict()


def _word_sequences(total: int, alphabet: int, max_words: int):
    """All tuples of weakly increasing words with total length <= total."""
    singles = [()]
    for ln in range(1, total + 1):
        singles.extend(
            w
            for w in itertools.combinations_with_replacement(
                range(1, alphabet + 1), ln
            )
        )
    for k in range(1, max_words + 1):
        for combo in itertools.product(singles, repeat=k):
            if sum(len(w) for w in combo) <= total:
                yield list(combo)


def check_ev_duality(total: int = 6, alphabet: int = 3) -> ScanReport:
    """Reversing and complementing the inputs evacuates both RSK outputs."""
    t0 = time.time()
    rep = ScanReport(
        descriptor={"kind": "ev_duality", "total": total, "alphabet": alphabet}
    )
    for words in _word_sequences(total, alphabet, max_words=3):
        n = len(words)
        p, q = column_rsk(words)
        flipped = [
            tuple(alphabet + 1 - x for x in reversed(words[n - i]))
            for i in range(1, n + 1)
        ]
        p2, q2 = column_rsk(flipped)
        rep.checks += 1
        if p2 != evacuation(p, alphabet) or q2 != evacuation(q, n):
            rep.found(check="ev", words=words, p=p, q=q)
    rep.elapsed = time.time() - t0
    return rep


def k_or_zero(lam, rseq) -> QPoly:
    """Recurrence engine with the few-variables convention: a partition with
    more parts than positions has coefficient zero."""
    lam = trim(lam)
    if len(lam) > rseq.n:
        return ZERO
    return k_by_recurrence(pad(lam, rseq.n), rseq)


def check_stembridge(n: int) -> ScanReport:
    """The two-celled-rectangle family satisfies the branching recurrence."""
    t0 = time.time()
    rep = ScanReport(descriptor={"kind": "stembridge", "n": n})

    def blocks(m, d):
        eta = (1,) * m + (2,) * d + (1,) * (n - 2 * m - 2 * d)
        return rect_sequence(eta, (2,) * m + (1,) * (n - 2 * m))

    for lam in partitions(n):
        for m in range(n // 2 + 1):
            for d in range((n - 2 * m) // 2 + 1):
                if 2 * m + 2 * (d + 1) > n:
                    continue
                lhs = k_or_zero(lam, blocks(m, d + 1))
                a = k_or_zero(lam, blocks(m, d))
                b = k_or_zero(lam, blocks(m + 1, d))
                rep.checks += 1
                if lhs != a - QPoly.term(n - 2 * m - d - 1) * b:
                    rep.found(check="stembridge", lam=lam, m=m, d=d, lhs=lhs)
    rep.elapsed = time.time() - t0
    return rep


CHECKS = {
    "cyc_image": check_cyc_image,
    "row_col_cat": check_row_col_cat,
    "charge_axioms": check_charge_axioms,
    "white_fitting": check_white_fitting,
    "ev_duality": check_ev_duality,
    "stembridge": check_stembridge,
}
