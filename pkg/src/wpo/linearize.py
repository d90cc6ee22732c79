"""Ranking finite lower sets by an ordinal.

Each generator (v_1,...,v_m) of a finite lower set contributes
w^(position of (v_1,...,v_{m-1}) in the lexicographic well-order of
N^(m-1)) times v_m; the rank is the natural sum of the contributions
plus one, and the empty set ranks 0.  The map is monotone for
inclusion but deliberately not injective, which check_monotone
witnesses by exhausting every pair inside a finite grid.
"""

from dataclasses import dataclass
from itertools import product

from .lowerset import FiniteLowerSet, enumerate_fls
from .ordinal import ONE, ZERO, Ordinal, add, compare, from_int, natural_sum


def lex_ordinal(vec) -> Ordinal:
    """Position of vec in the lexicographic well-order of N^len(vec)."""
    k = len(vec)
    terms = []
    for i, v in enumerate(vec):
        if v:
            terms.append((from_int(k - 1 - i), v))
    return Ordinal(tuple(terms))


@dataclass(frozen=True)
class RankAssignment:
    lower_set: FiniteLowerSet
    value: Ordinal
    contributions: tuple  # (generator, ordinal term) pairs, zero terms dropped


def ordinal_rank(f: FiniteLowerSet) -> RankAssignment:
    if f.dim == 0:
        raise ValueError("ranking needs at least one coordinate")
    if not f.generators:
        return RankAssignment(f, ZERO, ())
    total = ZERO
    contribs = []
    for g in f.generators:
        if g[-1] == 0:
            continue
        term = Ordinal(((lex_ordinal(g[:-1]), g[-1]),))
        total = natural_sum(total, term)
        contribs.append((g, term))
    return RankAssignment(f, add(total, ONE), tuple(contribs))


@dataclass(frozen=True)
class MonotoneReport:
    box: tuple
    sets_counted: int
    pairs_checked: int
    violations: tuple

    @property
    def ok(self) -> bool:
        return not self.violations


def check_monotone(box) -> MonotoneReport:
    """Exhaustive monotonicity check of ordinal_rank inside ``box``.

    Every ordered pair of lower sets of the grid is examined; for the
    included ones the ranks must not reverse.  Inclusion is decided on
    point bitmasks, independently of the rank construction.
    """
    box = tuple(box)
    points = sorted(product(*[range(e) for e in box]))
    sets = list(enumerate_fls(box))
    masks = []
    ranks = []
    for f in sets:
        mask = 0
        for idx, p in enumerate(points):
            if f.member(p):
                mask |= 1 << idx
        masks.append(mask)
        ranks.append(ordinal_rank(f).value)
    violations = []
    n = len(sets)
    for i in range(n):
        mi = masks[i]
        ri = ranks[i]
        for j in range(n):
            if mi & ~masks[j]:
                continue
            if compare(ri, ranks[j]) > 0:
                violations.append((sets[i], sets[j], ri, ranks[j]))
    return MonotoneReport(box, n, n * n, tuple(violations))
