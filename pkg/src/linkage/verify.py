"""Verification drivers: one check per structural result, reported as TheoremReport."""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import InputError
from .functors import (
    ModuleMap,
    biduality_map,
    ext,
    hom_module,
    is_finite_length,
    local_cohomology_function,
    tensor,
    tor,
)
from .algebra import GradedMatrix, as_polynomial
from .operators import (
    annihilates,
    is_horizontally_linked,
    is_stable,
    lambda_,
    link_by_ideal,
    syzygy,
    t_functor,
)
from .predicates import (
    is_cme,
    is_generalized_cm,
    is_sde,
    is_seq_cm_ext,
    is_seq_cm_linkage,
    jnum,
)
from .resolution import PresentedModule, _vdeg, depth_or_inf, submodule

PASS, FAIL, UNMET = "pass", "fail", "hypotheses-not-met"

TAGS = (
    "prop-2.3",
    "cor-2.4",
    "thm-2.5",
    "cor-2.8",
    "prop-2.10",
    "thm-2.11",
    "seq-e",
    "prop-3.1",
    "cor-3.2",
    "thm-3.3",
    "cor-3.4",
)


@dataclass
class Instance:
    """A module over a ring plus whatever extra data a check needs (ideals, partner modules)."""

    name: str
    module: PresentedModule
    extras: dict = field(default_factory=dict)

    @property
    def ring(self):
        return self.module.ring


@dataclass
class TheoremReport:
    tag: str
    instance: str
    hypotheses: list
    verdict: str
    evidence: dict

    @property
    def passed(self):
        return self.verdict == PASS

    def to_json(self):
        return {
            "tag": self.tag,
            "instance": self.instance,
            "hypotheses": self.hypotheses,
            "verdict": self.verdict,
            "evidence": self.evidence,
        }


class _Report:
    def __init__(self, tag, inst):
        self.tag = tag
        self.inst = inst
        self.hyps = []
        self.evidence = {}

    def hyp(self, name, holds):
        self.hyps.append({"name": name, "holds": bool(holds)})
        return holds

    def unmet(self):
        return not all(h["holds"] for h in self.hyps)

    def done(self, ok):
        if self.unmet():
            verdict = UNMET
        else:
            verdict = PASS if ok else FAIL
        return TheoremReport(self.tag, self.inst.name, self.hyps, verdict, self.evidence)

    def stop(self):
        return TheoremReport(self.tag, self.inst.name, self.hyps, UNMET, self.evidence)


def _R(ring):
    return PresentedModule.free(ring, [0])


def _hf(M):
    """Graded function of a finite-length module as a JSON list, or None."""
    if not is_finite_length(M):
        return None
    return M.hilbert_series.graded_function().to_json()


# --- linkage and Ext conditions --------------------------------------------


def check_prop_2_3(inst):
    rep = _Report("prop-2.3", inst)
    M = inst.module
    R = inst.ring
    sde = is_sde(M) if R.dim >= 1 else None
    rep.hyp("M is SDE", sde is None or sde.verdict)
    if rep.unmet():
        return rep.stop()
    L = lambda_(M)
    dl, dm, dr = depth_or_inf(L), depth_or_inf(M), R.depth
    bound = min(dm, dr)
    rep.evidence.update(
        {"depth_lambda": jnum(dl), "depth_M": jnum(dm), "depth_R": dr, "bound": jnum(bound)}
    )
    return rep.done(dl >= bound)


def check_cor_2_4(inst):
    rep = _Report("cor-2.4", inst)
    M = inst.module
    R = inst.ring
    rep.hyp("R is Cohen-Macaulay", R.cm_flag)
    nz = not M.is_zero()
    rep.hyp("M is maximal Cohen-Macaulay", nz and depth_or_inf(M) == R.dim)
    if rep.unmet():
        return rep.stop()
    rep.hyp("M is SDE", R.dim < 1 or is_sde(M).verdict)
    if rep.unmet():
        return rep.stop()
    L = lambda_(M)
    dl = depth_or_inf(L)
    rep.evidence.update({"lambda_zero": L.is_zero(), "depth_lambda": jnum(dl), "d": R.dim})
    return rep.done(L.is_zero() or dl == R.dim)


def _cm_d2(rep, R):
    rep.hyp("R is Cohen-Macaulay", R.cm_flag)
    rep.hyp("dim R >= 2", R.dim >= 2)
    return not rep.unmet()


def check_thm_2_5(inst):
    rep = _Report("thm-2.5", inst)
    M, R = inst.module, inst.ring
    if not _cm_d2(rep, R):
        return rep.stop()
    d = R.dim
    sde = is_sde(M)
    t_depths = []
    for i in range(1, d):
        t_depths.append(depth_or_inf(t_functor(i, M)))
    l_depths = []
    for i in range(d - 1):
        l_depths.append(depth_or_inf(lambda_(syzygy(i, M))))
    c2 = all(t_depths[i - 1] >= d - i for i in range(1, d))
    c3 = all(l_depths[i] >= d - i for i in range(d - 1))
    rep.evidence.update(
        {
            "sde": sde.verdict,
            "depth_T": [jnum(x) for x in t_depths],
            "depth_lambda_omega": [jnum(x) for x in l_depths],
            "cond_i": sde.verdict,
            "cond_ii": c2,
            "cond_iii": c3,
        }
    )
    return rep.done(sde.verdict == c2 == c3)


def check_cor_2_8(inst):
    rep = _Report("cor-2.8", inst)
    M, R = inst.module, inst.ring
    rep.hyp("R is Gorenstein", R.gorenstein_flag)
    rep.hyp("dim R >= 2", R.dim >= 2)
    if rep.unmet():
        return rep.stop()
    a = is_seq_cm_ext(M)
    b = is_seq_cm_linkage(M)
    rep.evidence.update({"seqcm_ext": a.verdict, "seqcm_linkage": b.verdict, "depths": b.evidence})
    return rep.done(a.verdict == b.verdict)


def _is_complete_intersection(R, gens):
    """Minimal generators of c form a regular sequence iff codim equals their number (R CM)."""
    vecs = [R.reduce(as_polynomial(g, R.ambient).to_keys()) for g in gens]
    vecs = [v for v in vecs if v]
    J = submodule(R, vecs, [_vdeg(v, (0,)) for v in vecs], (0,))
    q = PresentedModule.quotient(R, [g for g in gens]).dim
    return R.dim - q == len(J.generator_vectors)


def _ideal_key(gens):
    return [str(g) for g in gens]


def check_prop_2_10(inst):
    """Two links M1 ~ M by c1 and M ~ M2 by c2 preserve sequential Cohen-Macaulayness."""
    rep = _Report("prop-2.10", inst)
    M1, R = inst.module, inst.ring
    c1 = inst.extras.get("c1")
    c2 = inst.extras.get("c2")
    if c1 is None or c2 is None:
        raise InputError("prop-2.10 needs ideals c1 and c2")
    rep.hyp("R is Gorenstein", R.gorenstein_flag)
    rep.hyp("c1 is a complete intersection", _is_complete_intersection(R, c1))
    rep.hyp("c2 is a complete intersection", _is_complete_intersection(R, c2))
    if rep.unmet():
        return rep.stop()
    rep.hyp("c1 annihilates M1", annihilates(M1, c1))
    if rep.unmet():
        return rep.stop()
    R1, M, cert1 = link_by_ideal(M1, c1)
    given = inst.extras.get("M")
    if given is not None:
        rep.hyp("lambda over R/c1 matches the given M",
                M.fingerprint == PresentedModule(R1, given.presentation).fingerprint)
    rep.hyp("M1 horizontally linked over R/c1", cert1.verdict)
    MR = PresentedModule(R, M.presentation)
    rep.hyp("c2 annihilates M", annihilates(MR, c2))
    if rep.unmet():
        return rep.stop()
    R2, M2, cert2 = link_by_ideal(MR, c2)
    rep.hyp("M horizontally linked over R/c2", cert2.verdict)
    given2 = inst.extras.get("M2")
    if given2 is not None:
        rep.hyp("lambda over R/c2 matches the given M2",
                M2.fingerprint == PresentedModule(R2, given2.presentation).fingerprint)
    if rep.unmet():
        return rep.stop()
    M2R = PresentedModule(R, M2.presentation)
    s1 = is_seq_cm_ext(M1).verdict
    s2 = is_seq_cm_ext(M2R).verdict
    rep.evidence.update(
        {
            "c1": _ideal_key(c1),
            "c2": _ideal_key(c2),
            "M": M.fingerprint,
            "M2": M2.fingerprint,
            "seqcm_M1": s1,
            "seqcm_M2": s2,
        }
    )
    return rep.done(s1 == s2)


def check_thm_2_11(inst):
    rep = _Report("thm-2.11", inst)
    M, R = inst.module, inst.ring
    rep.hyp("R is Cohen-Macaulay", R.cm_flag)
    rep.hyp("dim R >= 1", R.dim >= 1)
    if rep.unmet():
        return rep.stop()
    d = R.dim
    W = R.canonical_module
    cme = is_cme(M).verdict
    MW = tensor(M, W)
    seq = MW.is_zero() or is_seq_cm_ext(MW).verdict
    tors = [tor(i, M, W).is_zero() for i in range(1, d + 2)]
    rhs = seq and all(tors)
    rep.evidence.update(
        {"cme": cme, "tensor_seqcm": seq, "tor_vanishing": tors, "tor_range": [1, d + 1]}
    )
    return rep.done(cme == rhs)


def _psi_for(N):
    """The natural map N -> lambda^2 N realised as h^T : G0 -> P* with h generating N*."""
    R = N.ring
    N = N.minimal()
    H = hom_module(N, _R(R))
    G0 = list(N.twists)
    P = list(H.module.twists)
    cols = [dict() for _ in G0]
    for k, h in enumerate(H.maps):
        for j, col in enumerate(h.cols):
            for key, c in col.items():
                cols[j][(k,) + key[1:]] = c
    target = [-t for t in P]
    mat = GradedMatrix(R.ambient, target, G0, cols, check=False)
    return ModuleMap(N, PresentedModule.free(R, target), mat)


def check_seq_e(inst):
    rep = _Report("seq-e", inst)
    M, R = inst.module, inst.ring
    if not _cm_d2(rep, R):
        return rep.stop()
    d = R.dim
    rows = []
    ok = True
    for i in range(1, d):
        N = t_functor(i, M)
        E = ext(i, M, _R(R))
        L2 = lambda_(lambda_(N))
        if N.is_zero():
            good = E.is_zero() and L2.is_zero()
            item = {"i": i, "T_zero": True, "ext_zero": E.is_zero(), "lambda2_zero": L2.is_zero(), "hilbert_additive": good}
        else:
            psi = _psi_for(N)
            K, _ = psi.kernel()
            Im = psi.image()
            left = K.fingerprint == E.fingerprint
            right = Im.fingerprint == L2.fingerprint
            add = N.hilbert_series == E.hilbert_series + L2.hilbert_series
            item = {
                "i": i,
                "ext": E.fingerprint,
                "kernel_matches_ext": left,
                "image_matches_lambda2": right,
                "hilbert_additive": add,
            }
            good = left and right and add
        item["exact"] = good
        rows.append(item)
        ok = ok and good
    rep.evidence["indices"] = rows
    return rep.done(ok)


# --- local cohomology ------------------------------------------------------


def check_prop_3_1(inst):
    rep = _Report("prop-3.1", inst)
    M, R = inst.module, inst.ring
    rep.hyp("R is Cohen-Macaulay", R.cm_flag)
    rep.hyp("M is nonzero", not M.is_zero())
    if rep.unmet():
        return rep.stop()
    d = R.dim
    W = R.canonical_module
    # Ass M in Ass R + {m} and (S2) off m, read off by local duality:
    # dim Ext^{d-i}(M, omega) <= max(i - 2, 0) for 0 < i < d
    dims = {}
    for i in range(1, d):
        E = ext(d - i, M, W)
        dims[d - i] = -1 if E.is_zero() else E.dim
    rep.hyp("Ass M in Ass R + {m}", all(dims[d - i] < i for i in range(1, d)))
    rep.hyp("M is (S2) on the punctured spectrum", all(dims[d - i] <= max(i - 2, 0) for i in range(1, d)))
    if rep.unmet():
        return rep.stop()
    B = biduality_map(M, W)
    K, C = B.kernel, B.cokernel
    g0 = local_cohomology_function(0, M)
    h1 = local_cohomology_function(1, M) if d >= 2 else None
    kf, cf = _hf(K), _hf(C)
    ev = {"d": d, "kernel": kf, "cokernel": cf, "gamma": None if g0 is None else g0.to_json()}
    checks = []
    if d == 0:
        checks.append(K.is_zero())
    if d <= 1:
        checks.append(C.is_zero())
    if d >= 1:
        checks.append(g0 is not None and kf == g0.to_json())
    if d >= 2:
        ev["h1"] = None if h1 is None else h1.to_json()
        checks.append(h1 is not None and cf == h1.to_json())
    bid = B.phi.target
    additive = M.hilbert_series - K.hilbert_series - bid.hilbert_series + C.hilbert_series
    ev["euler_zero"] = additive.is_zero()
    checks.append(additive.is_zero())
    ev["checks"] = checks
    rep.evidence.update(ev)
    return rep.done(all(checks))


def check_cor_3_2(inst):
    rep = _Report("cor-3.2", inst)
    M, R = inst.module, inst.ring
    rep.hyp("R is Gorenstein", R.gorenstein_flag)
    rep.hyp("M is nonzero", not M.is_zero())
    if rep.unmet():
        return rep.stop()
    rep.hyp("M is stable", is_stable(M))
    rep.hyp("M is generalized Cohen-Macaulay", is_generalized_cm(M).verdict)
    if rep.unmet():
        return rep.stop()
    full = M.dim == R.dim
    linked = is_horizontally_linked(M).verdict
    gamma_zero = depth_or_inf(M) >= 1
    g0 = local_cohomology_function(0, M)
    rep.evidence.update(
        {
            "dim_M": M.dim,
            "d": R.dim,
            "full_dimension": full,
            "linked": linked,
            "gamma_zero": gamma_zero,
            "gamma": None if g0 is None else g0.to_json(),
        }
    )
    # linked modules are torsionless, so Gamma vanishes; the converse needs dim M = d
    ok = (not linked or gamma_zero) and (not (full and gamma_zero) or linked)
    ok = ok and (gamma_zero == (g0 is not None and g0.is_zero()))
    return rep.done(ok)


def check_thm_3_3(inst):
    rep = _Report("thm-3.3", inst)
    M, R = inst.module, inst.ring
    if not _cm_d2(rep, R):
        return rep.stop()
    d = R.dim
    rep.hyp("dim M = dim R", M.dim == d)
    if rep.unmet():
        return rep.stop()
    W = R.canonical_module
    MW = tensor(M, W)
    rep.hyp("M (x) omega is generalized Cohen-Macaulay", is_generalized_cm(MW).verdict)
    if rep.unmet():
        return rep.stop()
    L = lambda_(M)
    rows = []
    ok = True
    for i in range(1, d):
        a = local_cohomology_function(i, MW)
        if L.is_zero():
            b = None
            bz = True
        else:
            b = local_cohomology_function(d - i, L)
            bz = False
        lhs = a.to_json() if a is not None else None
        rhs = [] if bz else (b.reversed().to_json() if b is not None else None)
        good = lhs is not None and rhs is not None and lhs == rhs
        rows.append({"i": i, "H_i_tensor": lhs, "dual_H_lambda": rhs, "equal": good})
        ok = ok and good
    rep.evidence.update({"stable": is_stable(M), "indices": rows})
    return rep.done(ok)


def check_cor_3_4(inst):
    rep = _Report("cor-3.4", inst)
    M, R = inst.module, inst.ring
    if not _cm_d2(rep, R):
        return rep.stop()
    d = R.dim
    Rm = _R(R)
    exts = [ext(i, M, Rm) for i in range(d)]
    rep.hyp("Ext^i(M,R) finite length for i < d", all(is_finite_length(E) for E in exts))
    W = R.canonical_module
    rep.hyp("Tor_i(M, omega) = 0 for 1 <= i <= d+1", all(tor(i, M, W).is_zero() for i in range(1, d + 2)))
    if rep.unmet():
        return rep.stop()
    L = lambda_(M)
    rows = []
    ok = True
    for i in range(1, d):
        e = exts[i].hilbert_series.graded_function().to_json()
        if L.is_zero():
            h = []
        else:
            g = local_cohomology_function(i, L)
            h = None if g is None else g.to_json()
        good = h == e
        rows.append({"i": i, "H_i_lambda": h, "ext": e, "equal": good})
        ok = ok and good
    gcm = L.is_zero() or is_generalized_cm(L).verdict
    rep.evidence.update({"indices": rows, "lambda_gcm": gcm})
    return rep.done(ok and gcm)


CHECKS = {
    "prop-2.3": check_prop_2_3,
    "cor-2.4": check_cor_2_4,
    "thm-2.5": check_thm_2_5,
    "cor-2.8": check_cor_2_8,
    "prop-2.10": check_prop_2_10,
    "thm-2.11": check_thm_2_11,
    "seq-e": check_seq_e,
    "prop-3.1": check_prop_3_1,
    "cor-3.2": check_cor_3_2,
    "thm-3.3": check_thm_3_3,
    "cor-3.4": check_cor_3_4,
}


def verify_theorem(tag, instance):
    """Run the check for ``tag`` on an Instance (or a bare module)."""
    if tag not in CHECKS:
        raise InputError(f"unknown theorem tag {tag!r}")
    if isinstance(instance, PresentedModule):
        instance = Instance("module", instance)
    return CHECKS[tag](instance)
