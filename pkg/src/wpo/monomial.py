"""Monomial ideals as finite sets of exponent vectors.

An ideal is identified with the upper set of exponent vectors of its
member monomials; it is stored by its unique minimal generating set.
The unit ideal has the single generator 0, the zero ideal has none.

Complementation exchanges these ideals with the lower sets of
lowerset.py: x is in the ideal of D exactly when x is not in D.
"""

import re
from dataclasses import dataclass

from .lowerset import UNBOUNDED, GeneralLowerSet, full_space
from .vectors import dominates, minimal_points

_VARS = ("X", "Y", "Z")


@dataclass(frozen=True)
class MonomialIdeal:
    dim: int
    gens: tuple = ()

    def __post_init__(self):
        for g in self.gens:
            if len(g) != self.dim or any(c < 0 or not isinstance(c, int) for c in g):
                raise ValueError(f"bad exponent vector {g} for dimension {self.dim}")
        if list(self.gens) != minimal_points(self.gens, self.dim):
            raise ValueError("generators must be a sorted antichain")

    @classmethod
    def make(cls, dim: int, gens) -> "MonomialIdeal":
        return cls(dim, tuple(minimal_points([tuple(g) for g in gens], dim)))

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return self.gens == (tuple([0] * self.dim),)

    def member(self, x: tuple) -> bool:
        """Monomial membership: some generator divides x."""
        if len(x) != self.dim:
            raise ValueError("dimension mismatch")
        return any(dominates(x, g) for g in self.gens)

    def includes(self, other: "MonomialIdeal") -> bool:
        if self.dim != other.dim:
            raise ValueError("dimension mismatch")
        return all(self.member(g) for g in other.gens)

    def intersect(self, other: "MonomialIdeal") -> "MonomialIdeal":
        if self.dim != other.dim:
            raise ValueError("dimension mismatch")
        joins = [tuple(map(max, g, h)) for g in self.gens for h in other.gens]
        return MonomialIdeal.make(self.dim, joins)

    def degree(self) -> int:
        """Largest total degree among the minimal generators."""
        if self.is_zero:
            raise ValueError("the zero ideal has no generating degree")
        return max(sum(g) for g in self.gens)

    def __str__(self) -> str:
        return format_ideal(self)


def unit_ideal(dim: int) -> MonomialIdeal:
    return MonomialIdeal(dim, (tuple([0] * dim),))


def zero_ideal(dim: int) -> MonomialIdeal:
    return MonomialIdeal(dim, ())


def intersect_all(ideals, dim: int) -> MonomialIdeal:
    out = unit_ideal(dim)
    for i in ideals:
        out = out.intersect(i)
    return out


def rect_complement_ideal(rect, dim: int) -> MonomialIdeal:
    """Ideal of monomials outside one box: x_t >= extent for some finite
    coordinate t.  A box unbounded everywhere leaves nothing outside."""
    gens = []
    for t, e in enumerate(rect):
        if e != UNBOUNDED:
            v = [0] * dim
            v[t] = e
            gens.append(tuple(v))
    return MonomialIdeal.make(dim, gens)


def complement_ideal(s: GeneralLowerSet) -> MonomialIdeal:
    """The ideal whose monomials are exactly the points outside s."""
    return intersect_all(
        (rect_complement_ideal(r, s.dim) for r in s.rects), s.dim
    )


def complement_lowerset(i: MonomialIdeal) -> GeneralLowerSet:
    """The lower set of points outside i; inverse of complement_ideal."""
    out = full_space(i.dim)
    for g in i.gens:
        slabs = [
            tuple(g[t] if j == t else UNBOUNDED for j in range(i.dim))
            for t in range(i.dim)
            if g[t] > 0
        ]
        out = out.intersect(GeneralLowerSet.make(i.dim, slabs))
    return out


def format_ideal(i: MonomialIdeal) -> str:
    if i.is_zero:
        return "0"
    return ";".join("(" + ",".join(map(str, g)) + ")" for g in i.gens)


def parse_ideal(text: str, dim: int | None = None) -> MonomialIdeal:
    text = text.strip().replace(" ", "")
    if text == "0":
        if dim is None:
            raise ValueError("cannot infer dimension of the zero ideal")
        return zero_ideal(dim)
    gens = []
    for chunk in text.split(";"):
        m = re.fullmatch(r"\(([0-9,]*)\)", chunk)
        if not m:
            raise ValueError(f"bad exponent vector {chunk!r}")
        gens.append(tuple(int(c) for c in m.group(1).split(",")))
    if dim is None:
        dim = len(gens[0])
    return MonomialIdeal.make(dim, gens)


def _var(t: int, dim: int) -> str:
    return _VARS[t] if dim <= len(_VARS) else f"X{t + 1}"


def pretty_ideal(i: MonomialIdeal) -> str:
    """Human form, e.g. (2,0);(0,3) in two variables prints X^2, Y^3."""
    if i.is_zero:
        return "0"
    parts = []
    for g in i.gens:
        factors = []
        for t, e in enumerate(g):
            if e == 1:
                factors.append(_var(t, i.dim))
            elif e > 1:
                factors.append(f"{_var(t, i.dim)}^{e}")
        parts.append("*".join(factors) if factors else "1")
    return ", ".join(parts)
