"""Example generators: Stanley-Reisner rings, random shellable complexes, random monomial modules."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations

from .algebra import DEFAULT_CHAR, AmbientRing, Polynomial, QuotientRing
from .errors import InputError


@dataclass(frozen=True)
class SimplicialComplex:
    """Complex on vertices 1..n given by its facets; ``shelling`` is an optional order certificate."""

    n: int
    facets: tuple
    shelling: tuple = field(default=(), compare=False)

    def __post_init__(self):
        fs = []
        for F in self.facets:
            F = frozenset(int(v) for v in F)
            if not F:
                raise InputError("facets must be nonempty")
            if not all(1 <= v <= self.n for v in F):
                raise InputError(f"facet {sorted(F)} has vertices outside 1..{self.n}")
            fs.append(F)
        if not fs:
            raise InputError("a complex needs at least one facet")
        for a in fs:
            if any(a < b for b in fs):
                raise InputError(f"facet {sorted(a)} is contained in another facet")
        fs = sorted(set(fs), key=lambda F: (-len(F), sorted(F)))
        object.__setattr__(self, "facets", tuple(fs))

    def is_face(self, s):
        return any(s <= F for F in self.facets)

    @property
    def is_pure(self):
        return len({len(F) for F in self.facets}) == 1

    def as_lists(self):
        return [sorted(F) for F in self.facets]

    def minimal_nonfaces(self):
        out = []
        verts = range(1, self.n + 1)
        for k in range(1, self.n + 1):
            for s in combinations(verts, k):
                s = frozenset(s)
                if self.is_face(s):
                    continue
                if all(self.is_face(s - {v}) for v in s):
                    out.append(sorted(s))
        return out


def stanley_reisner(D, char=DEFAULT_CHAR):
    """k[x1..xn]/I_D with I_D generated by the minimal non-faces."""
    names = tuple(f"x{i}" for i in range(1, D.n + 1))
    amb = AmbientRing(names, None, char)
    gens = []
    for s in D.minimal_nonfaces():
        e = [0] * D.n
        for v in s:
            e[v - 1] = 1
        gens.append(Polynomial(amb, {tuple(e): 1}))
    return QuotientRing(amb, gens)


def _attaches_purely(F, facets):
    """<F> meets the complex in a pure codimension-one subcomplex of the boundary of F."""
    inter = {F & G for G in facets}
    inter = [s for s in inter if not any(s < t for t in inter)]
    return bool(inter) and all(len(s) == len(F) - 1 for s in inter)


def shellable_generator(seed, n, mixed=False, max_facets=None):
    """Random shellable complex on at most n vertices built facet by facet.

    Facet sizes never increase along the shelling, so the order is a valid
    (possibly nonpure) shelling; it is stored in ``shelling``.
    """
    if not 1 <= n <= 8:
        raise InputError("shellable_generator supports 1 <= n <= 8")
    rng = random.Random(seed)
    top = rng.randint(min(2, n), min(n, 4))
    first = frozenset(rng.sample(range(1, n + 1), top))
    order = [first]
    limit = max_facets or rng.randint(2, 2 * n)
    size = top
    for _ in range(8 * limit):
        if len(order) >= limit:
            break
        if mixed and size > 1 and rng.random() < 0.35:
            size -= 1
        cands = []
        for F in (frozenset(c) for c in combinations(range(1, n + 1), size)):
            if any(F <= G for G in order):
                continue
            if _attaches_purely(F, order):
                cands.append(F)
        if not cands:
            if mixed and size > 1:
                size -= 1
                continue
            break
        cands.sort(key=sorted)
        order.append(rng.choice(cands))
    order = [F for F in order if not any(F < G for G in order)]
    return SimplicialComplex(n, tuple(order), tuple(tuple(sorted(F)) for F in order))


def random_monomial_ideal(seed, amb, max_deg, max_gens):
    rng = random.Random(seed)
    if max_gens <= 0:
        return []
    k = rng.randint(1, max_gens)
    n = amb.n
    gens = set()
    for _ in range(k):
        deg = rng.randint(1, max_deg)
        e = [0] * n
        for _ in range(deg):
            e[rng.randrange(n)] += 1
        gens.add(tuple(e))
    return [Polynomial(amb, {e: 1}) for e in sorted(gens)]


def random_monomial_module(seed, ring, max_deg=3, max_gens=4):
    """R/J for a seeded random monomial ideal J (R itself when max_gens = 0)."""
    from .resolution import PresentedModule

    if max_deg < 1 or max_gens < 0:
        raise InputError("max_deg must be positive and max_gens non-negative")
    gens = random_monomial_ideal(seed, ring.ambient, max_deg, max_gens)
    return PresentedModule.quotient(ring, gens)
