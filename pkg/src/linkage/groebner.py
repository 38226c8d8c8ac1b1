"""Buchberger's algorithm for graded submodules of free modules over S and S/I.

All inputs are homogeneous, so pairs are processed degree by degree (normal
strategy) and any prefix of the run is a degree-truncated Groebner basis.
That property is what ``minimal_generators`` relies on.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from heapq import heapify, heappop, heappush
from operator import add, ge, sub

from .algebra import GradedMatrix, Polynomial, QuotientRing, as_polynomial, vec_split
from .errors import InputError, RingMismatchError, ResourceCapError

DEFAULT_MAX_DEGREE = 40

# test mode: every completed run re-checks Buchberger's criterion
_POSTCHECK = {"enabled": os.environ.get("LINKAGE_POSTCHECK", "") not in ("", "0"), "bases": 0, "pairs": 0}


def set_postcheck(enabled):
    _POSTCHECK["enabled"] = bool(enabled)


def postcheck_stats():
    return {"bases": _POSTCHECK["bases"], "pairs": _POSTCHECK["pairs"]}


def _divides(small, big):
    return all(map(ge, big, small))


def _normal_form(vec, find, p, record=None, full=True):
    vec = dict(vec)
    out = {}
    heap = list(vec)
    heapify(heap)
    while heap:
        t = heappop(heap)
        c = vec.pop(t, None)
        if c is None:
            continue
        hit = find(t)
        if hit is None:
            out[t] = c
            if not full:
                out.update(vec)
                return out
            continue
        idx, lead, g = hit
        u = tuple(map(sub, t, lead))
        if p:
            for s, a in g.items():
                if s == lead:
                    continue
                ts = tuple(map(add, s, u))
                old = vec.get(ts)
                if old is None:
                    vec[ts] = (-c * a) % p
                    heappush(heap, ts)
                else:
                    v = (old - c * a) % p
                    if v:
                        vec[ts] = v
                    else:
                        del vec[ts]
        else:
            for s, a in g.items():
                if s == lead:
                    continue
                ts = tuple(map(add, s, u))
                old = vec.get(ts)
                if old is None:
                    vec[ts] = -c * a
                    heappush(heap, ts)
                else:
                    v = old - c * a
                    if v:
                        vec[ts] = v
                    else:
                        del vec[ts]
        if record is not None:
            record.append((idx, u, c))
    return out


def _monic(vec, ring):
    lead = min(vec)
    c = vec[lead]
    if c == 1:
        return vec
    inv = ring.inv(c)
    p = ring.char
    if p:
        return {k: (a * inv) % p for k, a in vec.items()}
    return {k: a * inv for k, a in vec.items()}


class Buchberger:
    """Incremental homogeneous Buchberger run in a free module with given twists."""

    def __init__(self, ring, twists, max_degree=DEFAULT_MAX_DEGREE):
        self.ring = ring
        self.p = ring.char
        self.twists = tuple(twists)
        self.max_degree = max_degree
        self.basis = []
        self.by_comp = {}
        self.pairs = {}
        self.heap = []

    def degree(self, key):
        return -key[1] + self.twists[key[0]]

    def _find(self, t):
        te = t[2:]
        for e, idx in self.by_comp.get(t[0], ()):
            if all(map(ge, te, e)):
                lead, g = self.basis[idx]
                return idx, lead, g
        return None

    def reduce(self, vec, record=None):
        if not vec:
            return {}
        return _normal_form(vec, self._find, self.p, record)

    def add_known(self, vecs):
        """Add elements that already form a Groebner basis among themselves."""
        for v in vecs:
            if v:
                self._append(_monic(dict(v), self.ring))

    def _append(self, vec):
        lead = min(vec)
        idx = len(self.basis)
        self.basis.append((lead, vec))
        self.by_comp.setdefault(lead[0], []).append((lead[2:], idx))
        return idx, lead

    def insert(self, vec):
        """Insert a nonzero fully reduced element and update the pair set."""
        idx, lead = self._append(_monic(vec, self.ring))
        c = lead[0]
        le = lead[2:]
        lcm = self.ring.lcm_key
        # drop old pairs made redundant by the new lead (Gebauer-Moeller B)
        for (i, j), (deg, l) in list(self.pairs.items()):
            if l[0] != c or not _divides(le, l[2:]):
                continue
            li = lcm(self.basis[i][0], lead)
            lj = lcm(self.basis[j][0], lead)
            if l != li and l != lj:
                del self.pairs[(i, j)]
        cands = {}
        for e, i in self.by_comp[c]:
            if i == idx:
                continue
            l = lcm(self.basis[i][0], lead)
            cands.setdefault(l, i)
        keys = list(cands)
        for l in keys:
            le2 = l[2:]
            if any(m != l and _divides(m[2:], le2) for m in keys):
                continue
            i = cands[l]
            deg = -l[1] + self.twists[c]
            self.pairs[(i, idx)] = (deg, l)
            heappush(self.heap, (deg, i, idx))
        return idx

    def spoly(self, i, j, l):
        li, fi = self.basis[i]
        lj, fj = self.basis[j]
        ui = tuple(map(sub, l, li))
        uj = tuple(map(sub, l, lj))
        p = self.p
        out = {}
        for k, a in fi.items():
            if k != li:
                out[tuple(map(add, k, ui))] = a
        for k, a in fj.items():
            if k == lj:
                continue
            t = tuple(map(add, k, uj))
            v = out.get(t, 0) - a
            if p:
                v %= p
            if v:
                out[t] = v
            else:
                out.pop(t, None)
        return out

    def run(self, upto=None):
        heap = self.heap
        while heap:
            deg, i, j = heap[0]
            if upto is not None and deg > upto:
                return
            heappop(heap)
            hit = self.pairs.pop((i, j), None)
            if hit is None:
                continue
            l = hit[1]
            if -l[1] > self.max_degree:
                raise ResourceCapError(
                    f"Groebner computation reached degree {-l[1]} > cap {self.max_degree}"
                )
            r = self.reduce(self.spoly(i, j, l))
            if r:
                self.insert(r)

    def add_generators(self, vecs, degrees=None):
        """Add generators degree by degree; returns indices of those not already in the span."""
        live = [k for k in range(len(vecs)) if vecs[k]]
        order = sorted(live, key=lambda k: (self._deg_of(vecs[k], degrees, k), k))
        kept = []
        for k in order:
            v = vecs[k]
            if not v:
                continue
            self.run(upto=self._deg_of(v, degrees, k))
            r = self.reduce(v)
            if r:
                kept.append(k)
                self.insert(r)
        return sorted(kept)

    def _deg_of(self, v, degrees, k):
        if degrees is not None:
            return degrees[k]
        return self.degree(next(iter(v)))

    def leads(self):
        return [lead for lead, _ in self.basis]

    def spairs_reduce_to_zero(self, upto=None):
        lcm = self.ring.lcm_key
        n = len(self.basis)
        count = 0
        for i in range(n):
            for j in range(i + 1, n):
                li, lj = self.basis[i][0], self.basis[j][0]
                if li[0] != lj[0]:
                    continue
                l = lcm(li, lj)
                if upto is not None and self.degree(l) > upto:
                    continue
                count += 1
                if self.reduce(self.spoly(i, j, l)):
                    return False, count
        return True, count

    def finish(self, upto=None):
        """Run to completion (or to degree ``upto``), then in test mode verify the result."""
        self.run(upto)
        if _POSTCHECK["enabled"]:
            ok, count = self.spairs_reduce_to_zero(upto)
            _POSTCHECK["bases"] += 1
            _POSTCHECK["pairs"] += count
            if not ok:
                raise AssertionError("Groebner post-check failed: an S-pair has a nonzero remainder")
        return self

    def reduced_basis(self):
        """Reduced Groebner basis of the current (completed) run."""
        # divisors have lower degree, so scan by degree first
        items = sorted(self.basis, key=lambda lv: (-lv[0][1], lv[0]))
        minimal = []
        for lead, vec in items:
            if not any(m[0] == lead[0] and _divides(m[2:], lead[2:]) for m, _ in minimal):
                minimal.append((lead, vec))
        out = []
        for k, (lead, vec) in enumerate(minimal):
            others = minimal[:k] + minimal[k + 1 :]
            index = {}
            for j, (l2, v2) in enumerate(others):
                index.setdefault(l2[0], []).append((l2[2:], j))

            def find(t, index=index, others=others):
                te = t[2:]
                for e, j in index.get(t[0], ()):
                    if all(map(ge, te, e)):
                        return j, others[j][0], others[j][1]
                return None

            r = _normal_form(vec, find, self.p)
            out.append(_monic(r, self.ring))
        return out


def _ideal_find(gb):
    leads = [(min(g), g) for g in gb]

    def find(t):
        te = t[2:]
        for j, (lead, g) in enumerate(leads):
            if all(map(ge, te, lead[2:])):
                return j, lead, g
        return None

    return find


def reduce_mod_ideal(vec, gb, p):
    """Entrywise normal form of a vector against an ideal Groebner basis."""
    if not gb or not vec:
        return dict(vec)
    return _normal_form(vec, _ideal_find(gb), p)


def ideal_groebner(ambient, gens, max_degree=DEFAULT_MAX_DEGREE):
    gens = [g for g in gens if g]
    if not gens:
        return []
    eng = Buchberger(ambient, (0,), max_degree)
    eng.add_generators(gens)
    eng.finish()
    return eng.reduced_basis()


def ideal_module_seeds(ring, rank, offset=0):
    """Groebner basis of I * F for a free module of the given rank."""
    seeds = []
    for i in range(rank):
        for g in ring.groebner:
            seeds.append({(k[0] + i + offset,) + k[1:]: c for k, c in g.items()})
    return seeds


# --- public API -----------------------------------------------------------


@dataclass
class GroebnerBasis:
    """Reduced Groebner basis of a submodule (preimage over S when R = S/I)."""

    ring: QuotientRing
    twists: tuple
    generators: list
    order: str = "grevlex-pot"
    reduced: bool = True

    def leads(self):
        return [min(g) for g in self.generators]

    def _find(self):
        index = {}
        for j, g in enumerate(self.generators):
            lead = min(g)
            index.setdefault(lead[0], []).append((lead[2:], j, lead))

        def find(t):
            te = t[2:]
            for e, j, lead in index.get(t[0], ()):
                if all(map(ge, te, e)):
                    return j, lead, self.generators[j]
            return None

        return find

    def reduce(self, vec, record=None):
        return _normal_form(vec, self._find(), self.ring.ambient.char, record)

    def polynomials(self):
        if len(self.twists) != 1:
            raise InputError("polynomials() is only defined for ideals")
        return [Polynomial.from_keys(self.ring.ambient, g) for g in self.generators]

    def spair_check(self):
        """True iff every S-pair of the basis reduces to zero (Buchberger's criterion)."""
        amb = self.ring.ambient
        eng = Buchberger(amb, self.twists, max_degree=10**9)
        eng.add_known(self.generators)
        find = self._find()
        n = len(eng.basis)
        for i in range(n):
            for j in range(i + 1, n):
                li, lj = eng.basis[i][0], eng.basis[j][0]
                if li[0] != lj[0]:
                    continue
                s = eng.spoly(i, j, amb.lcm_key(li, lj))
                if s and _normal_form(s, find, amb.char):
                    return False
        return True

    def __len__(self):
        return len(self.generators)


def _as_vectors(gens, ring, twists):
    amb = ring.ambient
    if isinstance(gens, GradedMatrix):
        return list(gens.cols), tuple(gens.target)
    vecs = []
    for g in gens:
        if isinstance(g, dict):
            vecs.append(g)
        else:
            vecs.append(as_polynomial(g, amb).to_keys())
    return vecs, tuple(twists) if twists is not None else (0,)


def groebner_basis(gens, ring, twists=None, max_degree=DEFAULT_MAX_DEGREE):
    """Reduced Groebner basis of the submodule generated by ``gens`` over ``ring``.

    ``gens`` is a GradedMatrix (columns), a list of polynomials/strings (an
    ideal) or a list of key-dict vectors with explicit ``twists``.  Over a
    quotient ring the basis is that of the preimage ``<gens> + I*F`` over S.
    """
    vecs, twists = _as_vectors(gens, ring, twists)
    eng = Buchberger(ring.ambient, twists, max_degree)
    eng.add_known(ideal_module_seeds(ring, len(twists)))
    eng.add_generators([ring.reduce(v) for v in vecs])
    eng.finish()
    return GroebnerBasis(ring, twists, eng.reduced_basis())


def normal_form(v, G, record=False):
    """Normal form of ``v`` against ``G``; with ``record`` also the quotients.

    Quotients come back as one key-dict polynomial per basis element, so that
    ``v == sum(q_k * g_k) + remainder``.
    """
    amb = G.ring.ambient
    poly = isinstance(v, (Polynomial, str, int))
    if poly:
        if len(G.twists) != 1:
            raise RingMismatchError("polynomial reduced against a module basis")
        vec = as_polynomial(v, amb).to_keys()
    else:
        vec = dict(v)
        if any(k[0] >= len(G.twists) for k in vec):
            raise RingMismatchError("vector outside the free module of the basis")
    rec = [] if record else None
    r = G.reduce(vec, rec)
    out = Polynomial.from_keys(amb, r) if poly else r
    if not record:
        return out
    quotients = [{} for _ in G.generators]
    p = amb.char
    for idx, u, c in rec:
        key = (0,) + u[1:]
        q = quotients[idx]
        v2 = q.get(key, 0) + c
        q[key] = v2 % p if p else v2
    return out, quotients


def minimal_generators(vecs, twists, ring, seeds=(), max_degree=DEFAULT_MAX_DEGREE):
    """Indices of a minimal generating subset of ``vecs`` modulo ``seeds`` + I*F.

    Greedy in (degree, index) order, so the choice is deterministic.
    """
    eng = Buchberger(ring.ambient, twists, max_degree)
    eng.add_known(ideal_module_seeds(ring, len(twists)))
    seeds = [s for s in seeds if s]
    if seeds:
        allv = list(seeds) + list(vecs)
        degs = [eng.degree(next(iter(v))) if v else 0 for v in allv]
        # seeds sort before candidates of equal degree
        order = sorted(range(len(allv)), key=lambda k: (degs[k], k >= len(seeds), k))
        kept = []
        for k in order:
            v = allv[k]
            if not v:
                continue
            eng.run(upto=degs[k])
            r = eng.reduce(v)
            if r:
                eng.insert(r)
                if k >= len(seeds):
                    kept.append(k - len(seeds))
        if degs and _POSTCHECK["enabled"]:
            eng.finish(upto=max(degs))
        return sorted(kept)
    kept = eng.add_generators(list(vecs))
    live = [v for v in vecs if v]
    if live and _POSTCHECK["enabled"]:
        eng.finish(upto=max(eng.degree(next(iter(v))) for v in live))
    return kept


def kernel_vectors(cols, target, source, ring, max_degree=DEFAULT_MAX_DEGREE):
    """Minimal generators of ker(F1 -> F0) over ``ring``, as key dicts on F1."""
    r0, r1 = len(target), len(source)
    if r1 == 0:
        return []
    amb = ring.ambient
    twists = tuple(target) + tuple(source)
    one = amb.unit_key()
    gens = []
    for j, col in enumerate(cols):
        v = ring.reduce(col)
        v[(r0 + j,) + one[1:]] = 1
        gens.append(v)
    eng = Buchberger(amb, twists, max_degree)
    eng.add_known(ideal_module_seeds(ring, r0 + r1))
    eng.add_generators(gens)
    eng.finish()
    kers = []
    for lead, vec in eng.basis:
        if lead[0] >= r0:
            lo, hi = vec_split(vec, r0)
            kers.append(hi)
    # the lifted kernel also contains I*F1, which is zero over R
    kers = [ring.reduce(v) for v in kers]
    kers = [v for v in kers if v]
    kers.sort(key=lambda v: (-min(v)[1] + source[min(v)[0]], min(v)))
    keep = minimal_generators(kers, source, ring, max_degree=max_degree)
    return [kers[k] for k in keep]


def kernel(f, ring, max_degree=DEFAULT_MAX_DEGREE):
    """Matrix whose columns minimally generate ker f over ``ring``."""
    if f.ring != ring.ambient:
        raise RingMismatchError("matrix and ring have different ambient rings")
    vecs = kernel_vectors(f.cols, f.target, f.source, ring, max_degree)
    degs = [-min(v)[1] + f.source[min(v)[0]] for v in vecs]
    return GradedMatrix(ring.ambient, f.source, degs, vecs)


def syzygies(f, ring, max_degree=DEFAULT_MAX_DEGREE):
    """Relations among the columns of ``f`` over ``ring`` (including those coming from I)."""
    return kernel(f, ring, max_degree)


def lift(vecs, gens, twists, gen_degrees, ring, relations=(), max_degree=DEFAULT_MAX_DEGREE):
    """Express each vector as a combination of ``gens`` modulo ``relations`` + I*F.

    Returns one coefficient vector per input, indexed by generator.  Raises
    ``ValueError`` if some vector is not in the span.
    """
    r0 = len(twists)
    amb = ring.ambient
    one = amb.unit_key()
    tw = tuple(twists) + tuple(gen_degrees)
    aug = []
    for j, g in enumerate(gens):
        v = ring.reduce(g)
        v[(r0 + j,) + one[1:]] = 1
        aug.append(v)
    aug.extend(ring.reduce(b) for b in relations)
    eng = Buchberger(amb, tw, max_degree)
    eng.add_known(ideal_module_seeds(ring, len(tw)))
    eng.add_generators([v for v in aug if v])
    eng.finish()
    p = amb.char
    out = []
    for v in vecs:
        r = eng.reduce(ring.reduce(v))
        lo, hi = vec_split(r, r0)
        if lo:
            raise ValueError("vector is not in the submodule")
        coeffs = {k: (-c) % p if p else -c for k, c in hi.items()}
        out.append(ring.reduce(coeffs))
    return out
