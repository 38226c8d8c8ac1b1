"""Hom, Ext, Tor, tensor products, canonical modules, biduality and local duality.

Free-module bookkeeping: Hom(F, G) has basis (a, i) -> flat index
``a * rank(F) + i`` with twist ``G[a] - F[i]``; F (x) G has basis (k, a) ->
``k * rank(G) + a`` with twist ``F[k] + G[a]``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import GradedMatrix
from .errors import RingMismatchError, ZeroModuleError
from .groebner import kernel_vectors, lift
from .hilbert import GradedFunction
from .resolution import PresentedModule, _vdeg, free_resolution, submodule


def hom_twists(F, G):
    return [b - a for b in G for a in F]


def tensor_twists(F, G):
    return [a + b for a in F for b in G]


def _precompose(d, F, Fp, G):
    """Hom(F, G) -> Hom(F', G), phi -> phi . d, for d: F' -> F."""
    nF, nFp = len(F), len(Fp)
    cols = [dict() for _ in range(len(G) * nF)]
    for j, col in enumerate(d.cols):
        for k, c in col.items():
            i = k[0]
            rest = k[1:]
            for a in range(len(G)):
                cols[a * nF + i][(a * nFp + j,) + rest] = c
    return cols


def _postcompose(g, F, G1, G0):
    """Hom(F, G1) -> Hom(F, G0), psi -> g . psi."""
    nF = len(F)
    cols = [dict() for _ in range(len(G1) * nF)]
    for b, col in enumerate(g.cols):
        for k, c in col.items():
            a = k[0]
            rest = k[1:]
            for i in range(nF):
                cols[b * nF + i][(a * nF + i,) + rest] = c
    return cols


def _tensor_left(d, Fp, F, G):
    """F' (x) G -> F (x) G induced by d: F' -> F."""
    nG = len(G)
    cols = [dict() for _ in range(len(Fp) * nG)]
    for j, col in enumerate(d.cols):
        for k, c in col.items():
            i = k[0]
            rest = k[1:]
            for a in range(nG):
                cols[j * nG + a][(i * nG + a,) + rest] = c
    return cols


def _tensor_right(F, g, G1, G0):
    """F (x) G1 -> F (x) G0 induced by g: G1 -> G0."""
    n0 = len(G0)
    cols = [dict() for _ in range(len(F) * len(G1))]
    for b, col in enumerate(g.cols):
        for k, c in col.items():
            a = k[0]
            rest = k[1:]
            for kk in range(len(F)):
                cols[kk * len(G1) + b][(kk * n0 + a,) + rest] = c
    return cols


def _cycles(ring, maps, src_twists, max_degree):
    """Vectors of the source whose images under [m_0 | m_1 | ...] vanish, projected to the first block.

    ``maps`` is a list of (cols, twists) sharing one target; the first block
    is the module whose cycles we want.
    """
    (cols0, tw0, target), rest = maps[0], maps[1:]
    if all(not c for c in cols0):
        return _basis_vectors(ring, tw0)
    allcols = list(cols0)
    alltw = list(tw0)
    for cols, tw, _ in rest:
        allcols += cols
        alltw += tw
    ker = kernel_vectors(allcols, target, alltw, ring, max_degree)
    out = []
    for v in ker:
        lo = {k: c for k, c in v.items() if k[0] < len(tw0)}
        lo = ring.reduce(lo)
        if lo:
            out.append(lo)
    return out


def _basis_vectors(ring, twists):
    one = ring.ambient.unit_key()
    return [{(i,) + one[1:]: 1} for i in range(len(twists))]


def _nonzero(vecs):
    return [v for v in vecs if v]


def _homology(ring, Z, twists, B, max_degree):
    Z = _nonzero(Z)
    degs = [_vdeg(v, twists) for v in Z]
    return submodule(ring, Z, degs, twists, relations=_nonzero(B), max_degree=max_degree)


@dataclass
class HomPresentation:
    """Hom(M, N) with each generator recorded as an explicit map F0(M) -> G0(N)."""

    module: PresentedModule
    source: PresentedModule
    target: PresentedModule
    maps: list
    vectors: list


def _same_ring(M, N):
    if M.ring != N.ring:
        raise RingMismatchError("modules over different rings")


def hom_module(M, N):
    """Hom_R(M, N) as the kernel of Hom(F0, N) -> Hom(F1, N)."""
    _same_ring(M, N)
    M, N = M.minimal(), N.minimal()
    ring = M.ring
    f, g = M.presentation, N.presentation
    F0, F1 = list(f.target), list(f.source)
    G0, G1 = list(g.target), list(g.source)
    H00 = hom_twists(F0, G0)
    H10 = hom_twists(F1, G0)
    if not H00:
        Z = []
    elif not F1:
        Z = _basis_vectors(ring, H00)
    else:
        blocks = [(_precompose(f, F0, F1, G0), H00, H10)]
        if G1:
            blocks.append((_postcompose(g, F1, G1, G0), hom_twists(F1, G1), H10))
        Z = _cycles(ring, blocks, H00, M.max_degree)
    B = _postcompose(g, F0, G1, G0) if G1 else []
    H = _homology(ring, Z, H00, B, M.max_degree)
    maps = [_vector_to_map(ring, v, F0, G0) for v in H.generator_vectors]
    return HomPresentation(H, M, N, maps, H.generator_vectors)


def _vector_to_map(ring, v, F, G):
    nF = len(F)
    cols = [dict() for _ in F]
    for k, c in v.items():
        a, i = divmod(k[0], nF)
        cols[i][(a,) + k[1:]] = c
    return GradedMatrix(ring.ambient, G, F, cols, check=False)


def dual(M):
    """M* = Hom_R(M, R)."""
    return hom_module(M, PresentedModule.free(M.ring, [0])).module


def _resolve_for(M, over, length):
    if over == "S":
        M = M.over_S()
    elif over != "R":
        raise ValueError("over must be 'R' or 'S'")
    return M, free_resolution(M, length)


def ext(i, M, N, over="R"):
    """Ext^i(M, N) as the cohomology of Hom(F_., N)."""
    _same_ring(M, N)
    if i < 0:
        raise ValueError("i must be non-negative")
    M, F = _resolve_for(M, over, i + 1)
    if over == "S":
        N = N.over_S()
    N = N.minimal()
    ring = M.ring
    g = N.presentation
    G0, G1 = list(g.target), list(g.source)
    if i >= len(F.modules) or not F.modules[i]:
        return PresentedModule.free(ring, [])
    Fi = F.modules[i]
    Hi = hom_twists(Fi, G0)
    if not Hi:
        return PresentedModule.free(ring, [])
    if i + 1 < len(F.modules) and F.modules[i + 1]:
        Fn = F.modules[i + 1]
        Hn = hom_twists(Fn, G0)
        blocks = [(_precompose(F.maps[i], Fi, Fn, G0), Hi, Hn)]
        if G1:
            blocks.append((_postcompose(g, Fn, G1, G0), hom_twists(Fn, G1), Hn))
        Z = _cycles(ring, blocks, Hi, M.max_degree)
    else:
        Z = _basis_vectors(ring, Hi)
    B = []
    if i >= 1:
        B += _precompose(F.maps[i - 1], F.modules[i - 1], Fi, G0)
    if G1:
        B += _postcompose(g, Fi, G1, G0)
    return _homology(ring, Z, Hi, B, M.max_degree)


def tensor(M, N):
    _same_ring(M, N)
    M, N = M.minimal(), N.minimal()
    f, g = M.presentation, N.presentation
    F0, F1 = list(f.target), list(f.source)
    G0, G1 = list(g.target), list(g.source)
    cols = _tensor_left(f, F1, F0, G0) + _tensor_right(F0, g, G1, G0)
    src = tensor_twists(F1, G0) + tensor_twists(F0, G1)
    T = GradedMatrix(M.ring.ambient, tensor_twists(F0, G0), src, cols, check=False)
    return PresentedModule(M.ring, T, max_degree=M.max_degree).minimal()


def tor(i, M, N):
    """Tor_i^R(M, N) as the homology of F_. (x) N."""
    _same_ring(M, N)
    if i < 0:
        raise ValueError("i must be non-negative")
    if i == 0:
        return tensor(M, N)
    F = free_resolution(M, i + 1)
    N = N.minimal()
    ring = M.ring
    g = N.presentation
    G0, G1 = list(g.target), list(g.source)
    if i >= len(F.modules) or not F.modules[i] or not G0:
        return PresentedModule.free(ring, [])
    Fi, Fp = F.modules[i], F.modules[i - 1]
    Ti = tensor_twists(Fi, G0)
    Tp = tensor_twists(Fp, G0)
    blocks = [(_tensor_left(F.maps[i - 1], Fi, Fp, G0), Ti, Tp)]
    if G1:
        blocks.append((_tensor_right(Fp, g, G1, G0), tensor_twists(Fp, G1), Tp))
    Z = _cycles(ring, blocks, Ti, M.max_degree)
    B = []
    if i + 1 < len(F.modules) and F.modules[i + 1]:
        B += _tensor_left(F.maps[i], F.modules[i + 1], Fi, G0)
    if G1:
        B += _tensor_right(Fi, g, G1, G0)
    return _homology(ring, Z, Ti, B, M.max_degree)


def omega_S(ring):
    """Canonical module S(-sum of weights) of the ambient ring, as a free S-module."""
    S = ring.cover()
    return PresentedModule.free(S, [sum(ring.ambient.weights)])


def canonical_module(R):
    """omega_R = Ext^{n-d}_S(R, S(-sum w)), presented over R."""
    d = R.dim
    c = R.n - d
    E = _ext_S(c, R.as_module())
    W = PresentedModule(R, E.presentation, max_degree=E.max_degree).minimal()
    if not R.cm_flag:
        W.warning = "ring is not Cohen-Macaulay; returned Ext^{n-d}_S(R, omega_S)"
    return W


def _ext_S(j, M):
    """Ext^j_S(M, omega_S) for an R-module M viewed over S."""
    MS = M.over_S()
    return ext(j, MS, omega_S(M.ring))


def local_cohomology_dual(i, M):
    """Ext^{n-i}_S(M, omega_S), the graded Matlis dual of H^i_m(M) (a module over S)."""
    n = M.ring.n
    if not 0 <= i <= n:
        return PresentedModule.free(M.ring.cover(), [])
    return _ext_S(n - i, M)


def local_cohomology_function(i, M):
    """Hilbert function of H^i_m(M) when it has finite length, else ``None``."""
    D = local_cohomology_dual(i, M)
    hs = D.hilbert_series
    if hs.dim > 0:
        return None
    return hs.graded_function().reversed()


def is_finite_length(M):
    return M.hilbert_series.dim <= 0


def grade(M):
    """min{i : Ext^i_R(M, R) != 0}."""
    if M.is_zero():
        raise ZeroModuleError("grade of the zero module")
    R = PresentedModule.free(M.ring, [0])
    top = M.ring.depth
    for i in range(top + 1):
        if not ext(i, M, R).is_zero():
            return i
    raise AssertionError("grade exceeds depth R")  # impossible for M != 0


class ModuleMap:
    """Homomorphism of presented modules given on generators: F0(source) -> F0(target)."""

    def __init__(self, source, target, matrix):
        _same_ring(source, target)
        self.source = source
        self.target = target
        self.matrix = matrix

    @property
    def ring(self):
        return self.source.ring

    def is_well_defined(self):
        """Relations of the source land in the relations of the target."""
        imgs = self.matrix.compose(self.source.presentation).cols
        g = self.target.presentation
        try:
            lift([self.ring.reduce(v) for v in imgs if v], [], g.target, [], self.ring, relations=g.cols)
        except ValueError:
            return False
        return True

    def kernel(self):
        """(ker, inclusion map ker -> source)."""
        ring = self.ring
        F0 = list(self.source.twists)
        g = self.target.presentation
        if not F0:
            K = PresentedModule.free(ring, [])
            return K, ModuleMap(K, self.source, GradedMatrix.zero(ring.ambient, F0, []))
        blocks = [(list(self.matrix.cols), F0, list(g.target))]
        if g.source:
            blocks.append((list(g.cols), list(g.source), list(g.target)))
        Z = _cycles(ring, blocks, F0, self.source.max_degree)
        K = _homology(ring, Z, F0, self.source.presentation.cols, self.source.max_degree)
        inc = GradedMatrix(ring.ambient, F0, list(K.twists), K.generator_vectors, check=False)
        return K, ModuleMap(K, self.source, inc)

    def cokernel(self):
        ring = self.ring
        g = self.target.presentation
        cols = [c for c in self.matrix.cols] + list(g.cols)
        src = list(self.matrix.source) + list(g.source)
        keep = [k for k, c in enumerate(cols) if ring.reduce(c)]
        m = GradedMatrix(ring.ambient, g.target, [src[k] for k in keep], [cols[k] for k in keep], check=False)
        return PresentedModule(ring, m, max_degree=self.target.max_degree).minimal()

    def image(self):
        ring = self.ring
        cols = [ring.reduce(c) for c in self.matrix.cols]
        vecs = [c for c in cols if c]
        degs = [_vdeg(v, self.target.twists) for v in vecs]
        return submodule(ring, vecs, degs, self.target.twists, relations=self.target.presentation.cols)

    def is_injective(self):
        return self.kernel()[0].is_zero()

    def is_surjective(self):
        return self.cokernel().is_zero()

    def compose(self, other):
        """``self . other``."""
        return ModuleMap(other.source, self.target, self.matrix.compose(other.matrix))


@dataclass
class BidualityMap:
    phi: ModuleMap
    kernel: PresentedModule
    cokernel: PresentedModule
    dual: HomPresentation
    bidual: HomPresentation


def biduality_map(M, W):
    """The evaluation map M -> Hom(Hom(M, W), W) with its kernel and cokernel."""
    _same_ring(M, W)
    M = M.minimal()
    ring = M.ring
    H = hom_module(M, W)
    HH = hom_module(H.module, W)
    Wm = W.minimal()
    G0, G1 = list(Wm.presentation.target), list(Wm.presentation.source)
    P0 = list(H.module.twists)
    F0 = list(M.twists)
    nP = len(P0)
    evals = []
    for i in range(len(F0)):
        v = {}
        for k, hk in enumerate(H.maps):
            for key, c in hk.cols[i].items():
                v[(key[0] * nP + k,) + key[1:]] = c
        evals.append(ring.reduce(v))
    HHm = HH.module
    target_tw = hom_twists(P0, G0)
    rels = _postcompose(Wm.presentation, P0, G1, G0) if G1 and P0 else []
    if HHm.num_generators and evals:
        coeffs = lift(evals, HH.vectors, target_tw, list(HHm.twists), ring, relations=rels)
    else:
        coeffs = [{} for _ in F0]
    mat = GradedMatrix(ring.ambient, list(HHm.twists), F0, coeffs, check=False)
    phi = ModuleMap(M, HHm, mat)
    K, _ = phi.kernel()
    C = phi.cokernel()
    return BidualityMap(phi, K, C, H, HH)
