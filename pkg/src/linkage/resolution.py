"""Presented modules, minimal presentations and resolutions, Hilbert series, depth and dimension."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property

from .algebra import GradedMatrix, QuotientRing, vec_axpy, vec_mul_poly, vec_split
from .errors import RingMismatchError, ZeroModuleError
from .groebner import DEFAULT_MAX_DEGREE, groebner_basis, kernel_vectors, minimal_generators
from .hilbert import HilbertSeries, monomial_numerator


def _vdeg(vec, twists):
    k = min(vec)
    return -k[1] + twists[k[0]]


def _prune(f, ring):
    """Remove unit entries by Gaussian elimination.

    Returns (matrix, kept_rows, expr) where ``expr[i]`` writes the i-th old
    generator in terms of the surviving ones.
    """
    amb = ring.ambient
    p = amb.char
    zeros = (0,) * amb.n
    cols = [ring.reduce(c) for c in f.cols]
    source = list(f.source)
    target = list(f.target)
    rows = list(range(len(target)))  # current row -> original row
    expr = {i: {(i, 0) + zeros: 1} for i in rows}  # original row -> vec in current numbering
    while True:
        pivot = None
        for i in range(len(rows)):
            unit = (i, 0) + zeros
            for j, col in enumerate(cols):
                if unit in col:
                    pivot = (i, j, unit)
                    break
            if pivot:
                break
        if pivot is None:
            break
        i, j, unit = pivot
        g = cols[j]
        cinv = amb.inv(g[unit])
        for l, col in enumerate(cols):
            if l == j:
                continue
            a = {(0,) + k[1:]: c for k, c in col.items() if k[0] == i}
            if a:
                vec_axpy_poly = vec_mul_poly(g, a, p)
                out = dict(col)
                z = (0,) * (amb.n + 2)
                vec_axpy(out, vec_axpy_poly, (-cinv) % p if p else -cinv, z, p)
                cols[l] = ring.reduce(out)
        # e_i = -cinv * (g - c e_i) in the cokernel
        rest = {k: c for k, c in g.items() if k[0] != i}
        sub_i = {k: ((-cinv * c) % p if p else -cinv * c) for k, c in rest.items()}
        for o, v in expr.items():
            coeff = {(0,) + k[1:]: c for k, c in v.items() if k[0] == i}
            if coeff:
                nv = {k: c for k, c in v.items() if k[0] != i}
                vec_axpy(nv, vec_mul_poly(sub_i, coeff, p), 1, (0,) * (amb.n + 2), p)
                expr[o] = ring.reduce(nv)
        del cols[j]
        del source[j]
        del rows[i]
        del target[i]

        def renum(v):
            return {((k[0] - 1) if k[0] > i else k[0],) + k[1:]: c for k, c in v.items()}

        cols = [renum(c) for c in cols]
        expr = {o: renum(v) for o, v in expr.items()}
    m = GradedMatrix(amb, target, source, cols, check=False)
    return m, rows, expr


def _minimize(f, ring, max_degree=DEFAULT_MAX_DEGREE):
    m, rows, expr = _prune(f, ring)
    cols = [(c, d) for c, d in zip(m.cols, m.source) if c]
    order = sorted(range(len(cols)), key=lambda k: (cols[k][1], k))
    cols = [cols[k] for k in order]
    keep = minimal_generators([c for c, _ in cols], m.target, ring, max_degree=max_degree)
    m = GradedMatrix(ring.ambient, m.target, [cols[k][1] for k in keep], [cols[k][0] for k in keep], check=False)
    return m, rows, expr


def minimize_presentation(f, ring=None):
    """Minimal presentation of coker f: no unit entries, minimal set of relations."""
    if ring is None:
        ring = QuotientRing(f.ring)
    return _minimize(f, ring)[0]


class PresentedModule:
    """Graded module coker(F1 -> F0) over a quotient ring R = S/I."""

    def __init__(self, ring, presentation, minimal=False, max_degree=DEFAULT_MAX_DEGREE):
        if presentation.ring != ring.ambient:
            raise RingMismatchError("presentation is over a different polynomial ring")
        self.ring = ring
        cols = [ring.reduce(c) for c in presentation.cols]
        # relations that vanish over this ring carry no information
        keep = [j for j, c in enumerate(cols) if c]
        self.presentation = GradedMatrix(
            ring.ambient,
            presentation.target,
            [presentation.source[j] for j in keep],
            [cols[j] for j in keep],
            check=False,
        )
        self.minimal_flag = minimal
        self.max_degree = max_degree
        self._res = {}

    @classmethod
    def free(cls, ring, twists):
        return cls(ring, GradedMatrix.zero(ring.ambient, twists, []), minimal=True)

    @classmethod
    def cokernel(cls, ring, rows, target=None, source=None):
        return cls(ring, GradedMatrix.from_rows(ring.ambient, rows, target, source))

    @classmethod
    def quotient(cls, ring, ideal, twist=0):
        """R/J (generated in degree ``twist``) for homogeneous J given as polynomials or strings."""
        from .algebra import as_polynomial

        gens = [as_polynomial(g, ring.ambient) for g in ideal]
        gens = [g for g in gens if not g.is_zero()]
        if not gens:
            return cls.free(ring, [twist])
        return cls.cokernel(ring, [gens], target=[twist])

    @classmethod
    def ideal(cls, ring, gens):
        """The ideal J of R as a module (image of the generators in R)."""
        from .algebra import as_polynomial

        vecs = [ring.reduce(as_polynomial(g, ring.ambient).to_keys()) for g in gens]
        vecs = [v for v in vecs if v]
        degs = [_vdeg(v, (0,)) for v in vecs]
        return submodule(ring, vecs, degs, (0,))

    @property
    def twists(self):
        return self.presentation.target

    @property
    def num_generators(self):
        return len(self.presentation.target)

    @property
    def num_relations(self):
        return len(self.presentation.source)

    def __repr__(self):
        return f"PresentedModule(gens={list(self.twists)}, rels={list(self.presentation.source)}, {self.presentation})"

    # minimal presentation -------------------------------------------------

    @cached_property
    def _minimal_data(self):
        if self.minimal_flag:
            n = self.num_generators
            zeros = (0,) * (self.ring.n + 1)
            return self, list(range(n)), {i: {(i,) + zeros: 1} for i in range(n)}
        m, rows, expr = _minimize(self.presentation, self.ring, self.max_degree)
        return PresentedModule(self.ring, m, minimal=True, max_degree=self.max_degree), rows, expr

    def minimal(self):
        return self._minimal_data[0]

    def minimal_map_data(self):
        """(kept generator indices, expression of every old generator in the minimal ones)."""
        _, rows, expr = self._minimal_data
        return rows, expr

    # invariants -----------------------------------------------------------

    @cached_property
    def hilbert_series(self):
        return hilbert_series(self)

    def is_zero(self):
        return self.hilbert_series.is_zero()

    @cached_property
    def dim(self):
        return krull_dim(self)

    def over_S(self):
        """The same module presented over the ambient polynomial ring."""
        ring = self.ring
        if ring.is_polynomial_ring:
            return self
        return self._over_S

    @cached_property
    def _over_S(self):
        ring = self.ring
        cols = list(self.presentation.cols)
        source = list(self.presentation.source)
        for i, t in enumerate(self.twists):
            for g in ring.ideal_gens:
                cols.append(g.to_keys(i))
                source.append(t + g.degree)
        pres = GradedMatrix(ring.ambient, self.twists, source, cols, check=False)
        return PresentedModule(ring.cover(), pres, max_degree=self.max_degree)

    def resolution(self, length, over="R"):
        return free_resolution(self, length, over)

    def twisted(self, a):
        """M(a): generators of degree t move to degree t - a."""
        f = self.presentation
        g = GradedMatrix(f.ring, [t - a for t in f.target], [t - a for t in f.source], f.cols, check=False)
        return PresentedModule(self.ring, g, minimal=self.minimal_flag, max_degree=self.max_degree)

    def direct_sum(self, other):
        if other.ring != self.ring:
            raise RingMismatchError("direct sum over different rings")
        f, g = self.presentation, other.presentation
        r = len(f.target)
        cols = list(f.cols) + [{(k[0] + r,) + k[1:]: c for k, c in col.items()} for col in g.cols]
        m = GradedMatrix(f.ring, f.target + g.target, f.source + g.source, cols, check=False)
        return PresentedModule(self.ring, m, max_degree=self.max_degree)

    @cached_property
    def fingerprint(self):
        """Isomorphism invariants: Hilbert numerator and minimal presentation degrees."""
        m = self.minimal()
        return {
            "hilbert": [[k, v] for k, v in self.hilbert_series.numerator.items()],
            "generators": sorted(m.twists),
            "relations": sorted(m.presentation.source),
        }

    def same_fingerprint(self, other):
        return self.fingerprint == other.fingerprint

    def to_json(self):
        m = self.presentation
        return {
            "rows": list(m.target),
            "cols": list(m.source),
            "matrix": [[str(x) for x in row] for row in m.rows()],
        }


def submodule(ring, vecs, degrees, twists, relations=(), max_degree=DEFAULT_MAX_DEGREE):
    """Present (span(vecs) + span(relations)) / span(relations) inside the free module ``twists``.

    Returns the minimal PresentedModule; its generators are a subset of
    ``vecs``, available as ``module.generator_vectors``.
    """
    vecs = list(vecs)
    degrees = list(degrees)
    rels = [ring.reduce(b) for b in relations]
    rels = [b for b in rels if b]
    rdeg = [_vdeg(b, twists) for b in rels]
    g = len(vecs)
    if g == 0:
        M = PresentedModule.free(ring, [])
        M.generator_vectors = []
        return M
    allcols = [ring.reduce(v) for v in vecs] + rels
    ker = kernel_vectors(allcols, twists, degrees + rdeg, ring, max_degree)
    pres_cols, pres_src = [], []
    for v in ker:
        lo, _ = vec_split(v, g)
        lo = ring.reduce(lo)
        if lo:
            pres_cols.append(lo)
            pres_src.append(_vdeg(lo, degrees))
    pres = GradedMatrix(ring.ambient, degrees, pres_src, pres_cols, check=False)
    M0 = PresentedModule(ring, pres, max_degree=max_degree)
    M = M0.minimal()
    rows, _ = M0.minimal_map_data()
    M.generator_vectors = [vecs[i] for i in rows]
    return M


@dataclass
class FreeComplex:
    """Chain of graded free modules F_0 <- F_1 <- ... with differentials ``maps[i]: F_{i+1} -> F_i``."""

    ring: QuotientRing
    modules: list
    maps: list = field(default_factory=list)

    @property
    def length(self):
        last = 0
        for i, F in enumerate(self.modules):
            if F:
                last = i
        return last

    def ranks(self):
        return [len(F) for F in self.modules]

    def is_complex(self):
        for a, b in zip(self.maps, self.maps[1:]):
            prod = a.compose(b)
            if any(self.ring.reduce(c) for c in prod.cols):
                return False
        return True

    def betti(self):
        table = {}
        for i, F in enumerate(self.modules):
            for t in F:
                table[(i, t)] = table.get((i, t), 0) + 1
        return BettiTable(table)


@dataclass
class BettiTable:
    """Graded Betti numbers: (homological index, internal degree) -> rank."""

    entries: dict

    def __post_init__(self):
        self.entries = {k: v for k, v in sorted(self.entries.items()) if v}

    def ranks(self):
        out = {}
        for (i, _), v in self.entries.items():
            out[i] = out.get(i, 0) + v
        return [out.get(i, 0) for i in range(max(out) + 1)] if out else []

    def to_json(self):
        return [[i, j, v] for (i, j), v in self.entries.items()]

    def __str__(self):
        if not self.entries:
            return "(zero)"
        cols = max(i for i, _ in self.entries) + 1
        rows = sorted({j - i for i, j in self.entries})
        lines = ["      " + " ".join(f"{i:>4}" for i in range(cols))]
        for r in rows:
            vals = [self.entries.get((i, i + r), 0) for i in range(cols)]
            lines.append(f"{r:>4}: " + " ".join(f"{v if v else '.':>4}" for v in vals))
        return "\n".join(lines)


def free_resolution(M, length, over="R"):
    """Minimal graded free resolution prefix F_0 <- ... <- F_length.

    Over S the computation stops once a kernel vanishes (at most n steps).
    """
    if over not in ("R", "S"):
        raise ValueError("over must be 'R' or 'S'")
    N = M if over == "R" else M.over_S()
    ring = N.ring
    cache = N._res
    if cache.get("maps") is None:
        m = N.minimal()
        cache["maps"] = [m.presentation] if m.num_relations else []
        cache["modules"] = [list(m.twists)] + ([list(m.presentation.source)] if m.num_relations else [])
        cache["done"] = not m.num_relations
    maps, modules = cache["maps"], cache["modules"]
    while len(maps) < length and not cache["done"]:
        last = maps[-1]
        vecs = kernel_vectors(last.cols, last.target, last.source, ring, N.max_degree)
        if not vecs:
            cache["done"] = True
            break
        degs = [_vdeg(v, last.source) for v in vecs]
        d = GradedMatrix(ring.ambient, last.source, degs, vecs, check=False)
        maps.append(d)
        modules.append(degs)
    k = min(length, len(maps))
    mods = [list(x) for x in modules[: k + 1]]
    return FreeComplex(ring, mods, list(maps[:k]))


def s_resolution(M):
    """The full minimal resolution over the ambient polynomial ring."""
    return free_resolution(M, M.ring.n + 1, over="S")


def projective_dimension_S(M):
    return s_resolution(M).length


def hilbert_series(M):
    ring = M.ring
    amb = ring.ambient
    tw = M.twists
    if not tw:
        return HilbertSeries({}, amb.weights)
    G = groebner_basis(M.presentation, ring, max_degree=M.max_degree)
    by_comp = {i: [] for i in range(len(tw))}
    for lead in G.leads():
        by_comp[lead[0]].append(amb.exps(lead))
    num = {}
    for i, gens in by_comp.items():
        for e, v in monomial_numerator(gens, amb.weights).items():
            num[e + tw[i]] = num.get(e + tw[i], 0) + v
    return HilbertSeries(num, amb.weights)


def krull_dim(M):
    return M.hilbert_series.dim


def depth(M):
    """depth M = n - pd_S(M) (Auslander-Buchsbaum over the ambient ring)."""
    if M.is_zero():
        raise ZeroModuleError("depth of the zero module is undefined")
    return M.ring.n - projective_dimension_S(M)


def depth_or_inf(M):
    """depth, with +infinity for the zero module."""
    if M.is_zero():
        return math.inf
    return depth(M)


def betti_table(M, over="S", length=None):
    if length is None:
        length = M.ring.n + 1 if over == "S" else M.ring.dim + 1
    return free_resolution(M, length, over).betti()
