"""Componentwise dominance helpers for integer vectors.

Everything here works on plain tuples.  Coordinates may be ints or
float("inf"); all comparisons are componentwise.
"""

from bisect import bisect_left, bisect_right


def dominates(u: tuple, v: tuple) -> bool:
    """True when u >= v in every coordinate."""
    return all(a >= b for a, b in zip(u, v))


def minimal_points(points, dim: int) -> list:
    """Componentwise-minimal elements of ``points``, sorted.

    Uses a sweep in lexicographic order: a dominating (smaller) vector
    always sorts before the vectors it dominates, so one forward pass
    with an antichain structure suffices.  dim <= 3 gets the
    O(n log n) staircase treatment; larger dims fall back to a scan.
    """
    pts = sorted(set(points))
    if not pts:
        return []
    if dim == 1:
        return [pts[0]]
    if dim == 2:
        kept = []
        best = None
        for p in pts:
            if best is None or p[1] < best:
                kept.append(p)
                best = p[1]
        return kept
    if dim == 3:
        kept = []
        ys: list = []  # pareto front over (y, z) of kept points: y asc, z desc
        zs: list = []
        for p in pts:
            _, y, z = p
            k = bisect_right(ys, y)
            if k and zs[k - 1] <= z:
                continue  # some kept point has x<=, y<=, z<=
            kept.append(p)
            # fold p into the (y, z) front; evict entries it dominates
            i = bisect_left(ys, y)
            j = i
            while j < len(ys) and zs[j] >= z:
                j += 1
            ys[i:j] = [y]
            zs[i:j] = [z]
        return kept
    kept = []
    for p in pts:
        if not any(dominates(p, q) for q in kept):
            kept.append(p)
    return kept


def maximal_points(points, dim: int) -> list:
    """Componentwise-maximal elements of ``points``, sorted."""
    neg = [tuple(-c for c in p) for p in points]
    return sorted(tuple(-c for c in p) for p in minimal_points(neg, dim))
