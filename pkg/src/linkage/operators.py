"""Transpose, syzygies, the linkage operator and horizontal linkage."""

from __future__ import annotations

from dataclasses import dataclass, field

from .algebra import as_polynomial
from .errors import PreconditionError
from .functors import ext, hom_module
from .groebner import groebner_basis, lift
from .resolution import PresentedModule, _vdeg, free_resolution, submodule


def _zero(ring):
    return PresentedModule.free(ring, [])


def transpose(M):
    """Tr M = coker(f*) for the minimal presentation f of M."""
    m = M.minimal()
    f = m.presentation
    if not f.source:
        return _zero(M.ring)
    return PresentedModule(M.ring, f.transpose(), max_degree=M.max_degree).minimal()


def syzygy(k, M):
    """Omega^k M, the k-th syzygy in the minimal R-resolution (Omega^0 M = M)."""
    if k < 0:
        raise ValueError("k must be non-negative")
    if k == 0:
        return M.minimal()
    F = free_resolution(M, k + 1)
    if k >= len(F.modules):
        return _zero(M.ring)
    tw = F.modules[k]
    if k < len(F.maps):
        return PresentedModule(M.ring, F.maps[k], minimal=True, max_degree=M.max_degree)
    return PresentedModule.free(M.ring, tw)


def lambda_(M):
    """lambda M = Omega Tr M."""
    return syzygy(1, transpose(M))


def t_functor(i, M):
    """T_i M = Tr Omega^{i-1} M."""
    if i < 1:
        raise ValueError("T_i needs i >= 1")
    return transpose(syzygy(i - 1, M))


def trace_ideal(M):
    """The ideal generated by the images of all maps M -> R, as a submodule of R."""
    R = M.ring
    H = hom_module(M, PresentedModule.free(R, [0]))
    vecs = []
    for h in H.maps:
        for col in h.cols:
            v = R.reduce(col)
            if v:
                vecs.append(v)
    degs = [_vdeg(v, (0,)) for v in vecs]
    return submodule(R, vecs, degs, (0,))


def is_stable(M):
    """True iff M has no free summand, i.e. 1 is not in the trace ideal."""
    tau = trace_ideal(M)
    vecs = tau.generator_vectors
    if not vecs:
        return True
    R = M.ring
    G = groebner_basis(vecs, R, twists=(0,))
    return bool(G.reduce({R.ambient.unit_key(): 1}))


@dataclass
class LinkageCertificate:
    verdict: bool
    stable: bool
    obstruction: PresentedModule
    witnesses: dict = field(default_factory=dict)

    def to_json(self):
        return {
            "verdict": self.verdict,
            "stable": self.stable,
            "obstruction": {
                "zero": self.obstruction.is_zero(),
                "length": _length_or_none(self.obstruction),
                "fingerprint": self.obstruction.fingerprint,
            },
            "witnesses": self.witnesses,
        }


def _length_or_none(M):
    hs = M.hilbert_series
    if hs.dim > 0:
        return None
    return hs.graded_function().length


def is_horizontally_linked(M):
    """Decide M = lambda^2 M through stability and Ext^1(Tr M, R) = 0."""
    R = M.ring
    stable = is_stable(M)
    obstruction = ext(1, transpose(M), PresentedModule.free(R, [0]))
    lam = lambda_(M)
    lam2 = lambda_(lam)
    witnesses = {
        "M": M.fingerprint,
        "lambda": lam.fingerprint,
        "lambda2": lam2.fingerprint,
    }
    verdict = stable and obstruction.is_zero()
    return LinkageCertificate(verdict, stable, obstruction, witnesses)


def annihilates(M, gens):
    """True iff every generator of the ideal kills every generator of M."""
    R = M.ring
    f = M.presentation
    vecs = []
    for g in gens:
        g = as_polynomial(g, R.ambient)
        for i in range(M.num_generators):
            v = R.reduce(g.to_keys(i))
            if v:
                vecs.append(v)
    if not vecs:
        return True
    try:
        lift(vecs, [], f.target, [], R, relations=f.cols, max_degree=M.max_degree)
    except ValueError:
        return False
    return True


def link_by_ideal(M, c):
    """Re-present M over R/c and return (R/c, lambda_{R/c} M, certificate)."""
    R = M.ring
    c = [as_polynomial(g, R.ambient) for g in c]
    c = [g for g in c if not g.is_zero()]
    if not annihilates(M, c):
        raise PreconditionError("the linking ideal does not annihilate the module")
    Rc = R.quotient(c) if c else R
    Mc = PresentedModule(Rc, M.presentation, max_degree=M.max_degree)
    return Rc, lambda_(Mc), is_horizontally_linked(Mc)
