"""Lower (downward closed) sets of N^m.

Two representations:

* FiniteLowerSet -- the downward closure of finitely many points,
  stored as the antichain of its maximal points.
* GeneralLowerSet -- a finite union of half-open boxes, each given by
  per-coordinate extents from N union {w}; a point p lies in a box when
  p[i] < extent[i] for every i.  The canonical form keeps exactly the
  maximal boxes, sorted.  (A box inside a union of downward closed
  boxes is inside a single one -- substitute a fresh bound for its
  unbounded coordinates and look at the saturated corner -- so
  irredundancy reduces to pairwise extent domination.)

Unbounded extents are float("inf"), exported as UNBOUNDED, written "w".
"""

import math
import re
from dataclasses import dataclass, field
from itertools import combinations, product

from .vectors import maximal_points, minimal_points

UNBOUNDED = float("inf")

Point = tuple
Rect = tuple


class UnboundedError(ValueError):
    """Raised when a finite representation of an unbounded set is requested."""


def _check_dim(a, b):
    if a.dim != b.dim:
        raise ValueError(f"dimension mismatch: {a.dim} vs {b.dim}")


@dataclass(frozen=True)
class FiniteLowerSet:
    """Downward closure of finitely many points of N^dim."""

    dim: int
    generators: tuple = ()

    def __post_init__(self):
        for g in self.generators:
            if len(g) != self.dim or any(c < 0 or not isinstance(c, int) for c in g):
                raise ValueError(f"bad generator {g} for dimension {self.dim}")
        if list(self.generators) != maximal_points(self.generators, self.dim):
            raise ValueError("generators must be a sorted antichain")

    def member(self, p: Point) -> bool:
        if len(p) != self.dim:
            raise ValueError("dimension mismatch")
        return any(all(a <= b for a, b in zip(p, g)) for g in self.generators)

    def includes(self, other: "FiniteLowerSet") -> bool:
        _check_dim(self, other)
        return all(self.member(g) for g in other.generators)

    def union(self, other: "FiniteLowerSet") -> "FiniteLowerSet":
        _check_dim(self, other)
        return closure(self.generators + other.generators, self.dim)

    def intersect(self, other: "FiniteLowerSet") -> "FiniteLowerSet":
        _check_dim(self, other)
        mins = [tuple(map(min, f, g)) for f in self.generators for g in other.generators]
        return closure(mins, self.dim)

    def __str__(self) -> str:
        return format_fls(self)


def closure(points, dim: int) -> FiniteLowerSet:
    """The downward closure of ``points`` as a FiniteLowerSet."""
    return FiniteLowerSet(dim, tuple(maximal_points(points, dim)))


def _rect_ok(rect: Rect, dim: int) -> bool:
    return len(rect) == dim and all(
        (isinstance(e, int) and e >= 1) or e == UNBOUNDED for e in rect
    )


@dataclass(frozen=True)
class GeneralLowerSet:
    """A finite union of boxes in canonical (irredundant, sorted) form."""

    dim: int
    rects: tuple = ()
    _rectset: frozenset = field(init=False, repr=False, compare=False)
    _maxfin: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        for r in self.rects:
            if not _rect_ok(r, self.dim):
                raise ValueError(f"bad box {r} for dimension {self.dim}")
        if list(self.rects) != sorted(set(self.rects)):
            raise ValueError("boxes must be sorted and duplicate-free")
        finite = [e for r in self.rects for e in r if e != UNBOUNDED]
        object.__setattr__(self, "_rectset", frozenset(self.rects))
        object.__setattr__(self, "_maxfin", max(finite, default=0))

    @classmethod
    def make(cls, dim: int, rects) -> "GeneralLowerSet":
        """Canonicalize: drop empty boxes, keep only maximal extent tuples."""
        live = [tuple(r) for r in rects if all(e != 0 for e in r)]
        for r in live:
            if not _rect_ok(r, dim):
                raise ValueError(f"bad box {r} for dimension {dim}")
        return cls(dim, tuple(maximal_points(live, dim)))

    @property
    def max_finite_extent(self) -> int:
        return self._maxfin

    @property
    def proper(self) -> bool:
        """True unless the set is all of N^dim."""
        return self.rects != (tuple([UNBOUNDED] * self.dim),)

    def member(self, p: Point) -> bool:
        if len(p) != self.dim:
            raise ValueError("dimension mismatch")
        return any(all(a < e for a, e in zip(p, r)) for r in self.rects)

    def includes(self, other: "GeneralLowerSet") -> bool:
        """Inclusion other <= self, decided on saturated corners.

        Each box of ``other`` is checked at its corner, with unbounded
        coordinates replaced by a bound B exceeding every finite extent
        in sight; the corner lands in some single box of self iff the
        whole box fits.
        """
        _check_dim(self, other)
        bound = 1 + max(self._maxfin, other._maxfin)
        rectset = self._rectset
        rects = self.rects
        for r in reversed(other.rects):
            if r in rectset:
                continue
            corner = tuple(bound if e == UNBOUNDED else e - 1 for e in r)
            if not any(all(a < e for a, e in zip(corner, s)) for s in rects):
                return False
        return True

    def same_set(self, other: "GeneralLowerSet") -> bool:
        return self.includes(other) and other.includes(self)

    def union(self, other: "GeneralLowerSet") -> "GeneralLowerSet":
        _check_dim(self, other)
        return GeneralLowerSet.make(self.dim, self.rects + other.rects)

    def intersect(self, other: "GeneralLowerSet") -> "GeneralLowerSet":
        _check_dim(self, other)
        mins = [tuple(map(min, r, s)) for r in self.rects for s in other.rects]
        return GeneralLowerSet.make(self.dim, mins)

    def __str__(self) -> str:
        return format_gls(self)


def canonicalize(dim: int, rects) -> GeneralLowerSet:
    return GeneralLowerSet.make(dim, rects)


def full_space(dim: int) -> GeneralLowerSet:
    return GeneralLowerSet.make(dim, [tuple([UNBOUNDED] * dim)])


def from_finite(f: FiniteLowerSet) -> GeneralLowerSet:
    """Each generator g becomes the box with extents g+1."""
    return GeneralLowerSet.make(f.dim, [tuple(c + 1 for c in g) for g in f.generators])


def to_finite(s: GeneralLowerSet) -> FiniteLowerSet:
    """Inverse of from_finite; unbounded sets are rejected."""
    if any(UNBOUNDED in r for r in s.rects):
        raise UnboundedError(f"{s} is unbounded")
    return closure([tuple(e - 1 for e in r) for r in s.rects], s.dim)


def project(s: GeneralLowerSet, coords) -> GeneralLowerSet:
    """Image of s under dropping all coordinates outside ``coords``."""
    coords = sorted(coords)
    return GeneralLowerSet.make(len(coords), [tuple(r[i] for i in coords) for r in s.rects])


def preimage(s: GeneralLowerSet, coords, dim: int) -> GeneralLowerSet:
    """Cylinder over s: full preimage under the projection to ``coords``."""
    coords = sorted(coords)
    if len(coords) != s.dim:
        raise ValueError("coordinate count must match the set's dimension")
    rects = []
    for r in s.rects:
        ext = [UNBOUNDED] * dim
        for i, e in zip(coords, r):
            ext[i] = e
        rects.append(tuple(ext))
    return GeneralLowerSet.make(dim, rects)


# The complement of a lower set is an upper set generated by finitely many
# points, and projecting an upper set projects its generators.  That gives
# intersection_image = complement . project . complement without any search.

def _complement_generators(s: GeneralLowerSet) -> list:
    """Minimal points of the complement of s (empty list = empty complement)."""
    from .monomial import complement_ideal  # local import to avoid a cycle

    return list(complement_ideal(s).gens)


def intersection_image(s: GeneralLowerSet, coords) -> GeneralLowerSet:
    """The points p of the projected space whose whole fiber lies in s."""
    coords = sorted(coords)
    gens = [tuple(g[i] for i in coords) for g in _complement_generators(s)]
    out = full_space(len(coords))
    for g in minimal_points(gens, len(coords)):
        slabs = [
            tuple(g[t] if i == t else UNBOUNDED for i in range(len(coords)))
            for t in range(len(coords))
            if g[t] > 0
        ]
        out = out.intersect(GeneralLowerSet.make(len(coords), slabs))
    return out


def _nonempty_subsets(dim: int):
    for size in range(1, dim + 1):
        yield from (frozenset(c) for c in combinations(range(dim), size))


def compose_parts(parts, dim: int) -> GeneralLowerSet:
    """Union of the cylinders of one bounded part per coordinate subset.

    ``parts`` maps every nonempty frozenset C of coordinates to a
    FiniteLowerSet living on the coordinates of C in sorted order.  The
    result is always a proper lower set of N^dim.
    """
    out = GeneralLowerSet.make(dim, [])
    for coords in _nonempty_subsets(dim):
        if coords not in parts:
            raise ValueError(f"missing part for coordinates {sorted(coords)}")
        part = parts[coords]
        if part.dim != len(coords):
            raise ValueError(f"part for {sorted(coords)} has dimension {part.dim}")
        out = out.union(preimage(from_finite(part), coords, dim))
    if not out.proper:
        raise AssertionError("cylinders of bounded parts cannot cover the space")
    return out


def decompose_parts(t: GeneralLowerSet) -> dict:
    """Split a proper lower set into per-subset bounded parts.

    Each box contributes its bounded face (extents minus one on its
    finite coordinates) to the part indexed by those coordinates;
    compose_parts inverts this up to semantic equality.
    """
    if not t.proper:
        raise ValueError("the full space has no bounded decomposition")
    buckets: dict = {c: [] for c in _nonempty_subsets(t.dim)}
    for r in t.rects:
        coords = frozenset(i for i, e in enumerate(r) if e != UNBOUNDED)
        corner = tuple(r[i] - 1 for i in sorted(coords))
        buckets[coords].append(corner)
    return {c: closure(pts, len(c)) for c, pts in buckets.items()}


# ---------------------------------------------------------------------------
# partial specifications


@dataclass(frozen=True)
class PartialSpecification:
    """An assignment of a proper lower set to each coordinate subset in a
    graded downward closed family of subsets of {0..dim-1}."""

    dim: int
    domain: frozenset
    assignment: dict

    def part(self, coords) -> GeneralLowerSet:
        return self.assignment[frozenset(coords)]


def trivial_specification(dim: int) -> PartialSpecification:
    empty0 = GeneralLowerSet.make(0, [])
    return PartialSpecification(dim, frozenset([frozenset()]), {frozenset(): empty0})


def full_specification(s: GeneralLowerSet) -> PartialSpecification:
    """The specification induced by s on every coordinate subset."""
    if not s.proper:
        raise ValueError("the induced parts of the full space are not proper")
    subsets = [frozenset(c) for size in range(s.dim + 1)
               for c in combinations(range(s.dim), size)]
    assignment = {c: intersection_image(s, c) for c in subsets}
    return PartialSpecification(s.dim, frozenset(subsets), assignment)


def validate_specification(p: PartialSpecification) -> list:
    """Structural and coherence checks; returns a list of problems."""
    problems = []
    if not p.domain:
        problems.append("empty domain")
        return problems
    sizes = {len(c) for c in p.domain}
    top = max(sizes)
    for size in range(top):
        for c in combinations(range(p.dim), size):
            if frozenset(c) not in p.domain:
                problems.append(f"domain not graded: missing {sorted(c)}")
    for c in p.domain:
        x = p.assignment.get(c)
        if x is None:
            problems.append(f"no assignment for {sorted(c)}")
            continue
        if x.dim != len(c):
            problems.append(f"assignment for {sorted(c)} has dimension {x.dim}")
        elif not x.proper:
            problems.append(f"assignment for {sorted(c)} is the full space")
    if problems:
        return problems
    for c in p.domain:
        order = sorted(c)
        for d in p.domain:
            if d < c:
                positions = [order.index(i) for i in sorted(d)]
                derived = intersection_image(p.assignment[c], positions)
                if not derived.same_set(p.assignment[d]):
                    problems.append(
                        f"incoherent: part {sorted(d)} differs from the fiber "
                        f"image of part {sorted(c)}"
                    )
    return problems


def is_compatible(s: GeneralLowerSet, p: PartialSpecification) -> bool:
    """True when s is proper and induces exactly the specified parts."""
    if s.dim != p.dim or not s.proper:
        return False
    return all(
        intersection_image(s, sorted(c)).same_set(p.assignment[c]) for c in p.domain
    )


# ---------------------------------------------------------------------------
# enumeration

ENUMERATION_GUARD = 2 ** 20


def enumerate_fls(box):
    """Yield every lower set inside the finite grid ``box``, as
    FiniteLowerSets, by depth-first order-ideal search.

    Walks the grid points in lexicographic (linear-extension) order;
    a point may be present only when all its immediate predecessors are.
    """
    box = tuple(box)
    if not all(isinstance(e, int) and e >= 1 for e in box):
        raise ValueError("box extents must be positive integers")
    size = math.prod(box)
    if size > ENUMERATION_GUARD:
        raise ValueError(f"box volume {size} exceeds guard {ENUMERATION_GUARD}")
    dim = len(box)
    points = sorted(product(*[range(e) for e in box]))

    def preds(p):
        return [p[:i] + (p[i] - 1,) + p[i + 1:] for i in range(dim) if p[i] > 0]

    chosen: set = set()

    def walk(k: int):
        if k == len(points):
            yield closure(list(chosen), dim)
            return
        p = points[k]
        yield from walk(k + 1)
        if all(q in chosen for q in preds(p)):
            chosen.add(p)
            yield from walk(k + 1)
            chosen.remove(p)

    yield from walk(0)


def enumerate_gls(dim: int, extents, max_rects: int):
    """Yield every distinct union of at most ``max_rects`` boxes whose
    extents come from ``extents``, canonicalized, each set once."""
    from .monomial import complement_ideal

    menu = sorted(set(extents), key=lambda e: (e == UNBOUNDED, e))
    if not all((isinstance(e, int) and e >= 1) or e == UNBOUNDED for e in menu):
        raise ValueError("extents must be positive integers or UNBOUNDED")
    boxes = sorted(product(menu, repeat=dim))
    seen = set()
    for count in range(max_rects + 1):
        for combo in combinations(boxes, count):
            s = GeneralLowerSet.make(dim, combo)
            key = complement_ideal(s).gens
            if key not in seen:
                seen.add(key)
                yield s


# ---------------------------------------------------------------------------
# text form


def format_fls(f: FiniteLowerSet) -> str:
    return "{" + ";".join("(" + ",".join(map(str, g)) + ")" for g in f.generators) + "}"


def parse_fls(text: str, dim: int | None = None) -> FiniteLowerSet:
    text = text.strip().replace(" ", "")
    if not (text.startswith("{") and text.endswith("}")):
        raise ValueError(f"bad lower set literal: {text!r}")
    body = text[1:-1]
    if not body:
        if dim is None:
            raise ValueError("cannot infer dimension of an empty literal")
        return FiniteLowerSet(dim)
    gens = []
    for chunk in body.split(";"):
        m = re.fullmatch(r"\(([0-9,]*)\)", chunk)
        if not m:
            raise ValueError(f"bad generator {chunk!r}")
        gens.append(tuple(int(c) for c in m.group(1).split(",")))
    if dim is None:
        dim = len(gens[0])
    return closure(gens, dim)


def _extent_str(e) -> str:
    return "w" if e == UNBOUNDED else str(e)


def format_gls(s: GeneralLowerSet) -> str:
    if not s.rects:
        return "empty"
    return "u".join("[" + ",".join(_extent_str(e) for e in r) + "]" for r in s.rects)


def parse_gls(text: str, dim: int | None = None) -> GeneralLowerSet:
    text = text.strip().replace(" ", "")
    if text == "empty":
        if dim is None:
            raise ValueError("cannot infer dimension of an empty literal")
        return GeneralLowerSet.make(dim, [])
    rects = []
    for chunk in text.split("u"):
        m = re.fullmatch(r"\[([0-9w,]*)\]", chunk)
        if not m:
            raise ValueError(f"bad box {chunk!r}")
        rect = tuple(UNBOUNDED if c == "w" else int(c) for c in m.group(1).split(","))
        rects.append(rect)
    if dim is None:
        dim = len(rects[0])
    return GeneralLowerSet.make(dim, rects)
