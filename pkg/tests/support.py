"""Shared generators and pointwise oracles for the test suite.

Random ordinals stay below w^(w^3): top-level exponents are CNF
combinations of the finite exponents 0..2.  Everything is driven by an
explicit random.Random so failures reproduce exactly.
"""

import random
from functools import cmp_to_key

from wpo.ordinal import OMEGA, Ordinal, ZERO, compare, from_int


def rand_exponent(rng: random.Random) -> Ordinal:
    terms = []
    for e in (2, 1, 0):
        if rng.random() < 0.4:
            terms.append((from_int(e), rng.randint(1, 3)))
    return Ordinal(tuple(terms))


def rand_ordinal(rng: random.Random, max_terms: int = 3) -> Ordinal:
    exps = [rand_exponent(rng) for _ in range(rng.randint(0, max_terms))]
    exps.sort(key=cmp_to_key(compare), reverse=True)
    terms = []
    for e in exps:
        if terms and compare(terms[-1][0], e) == 0:
            continue
        terms.append((e, rng.randint(1, 5)))
    return Ordinal(tuple(terms))


def rand_limit(rng: random.Random) -> Ordinal:
    a = rand_ordinal(rng)
    if a.terms and a.terms[-1][0] == ZERO:
        a = Ordinal(a.terms[:-1])
    return a if a.terms else OMEGA


def rand_point(rng: random.Random, dim: int, top: int = 6) -> tuple:
    return tuple(rng.randint(0, top) for _ in range(dim))
