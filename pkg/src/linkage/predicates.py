"""Decision procedures for CM, generalized CM, SDE, CME and sequentially CM modules."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import PreconditionError, ZeroModuleError
from .functors import ext, is_finite_length, local_cohomology_dual
from .operators import lambda_, syzygy
from .resolution import PresentedModule, depth, depth_or_inf


def jnum(x):
    """JSON-safe number (infinite depth becomes the string "inf")."""
    return "inf" if x == math.inf else x


@dataclass
class ClassVerdict:
    name: str
    verdict: bool
    evidence: list = field(default_factory=list)
    hypotheses: dict = field(default_factory=dict)

    def __bool__(self):
        return self.verdict

    def to_json(self):
        return {
            "predicate": self.name,
            "verdict": self.verdict,
            "hypotheses": self.hypotheses,
            "evidence": self.evidence,
        }


def _ring_record(R):
    return {"d": R.dim, "depth_R": R.depth, "cm": R.cm_flag}


def _nonzero(M):
    if M.is_zero():
        raise ZeroModuleError("predicate undefined on the zero module")


def _free_R(R):
    return PresentedModule.free(R, [0])


def is_cm(M):
    _nonzero(M)
    dp, dm = depth(M), M.dim
    return ClassVerdict("cm", dp == dm, [{"depth": dp, "dim": dm}], _ring_record(M.ring))


def is_mcm(M):
    _nonzero(M)
    R = M.ring
    dp = depth(M)
    return ClassVerdict("mcm", dp == R.dim, [{"depth": dp, "d": R.dim}], _ring_record(R))


def is_generalized_cm(M):
    """Every H^i_m(M) with i < dim M has finite length."""
    _nonzero(M)
    ev = []
    ok = True
    for i in range(M.dim):
        D = local_cohomology_dual(i, M)
        fin = is_finite_length(D)
        item = {"i": i, "finite_length": fin}
        if fin:
            item["length"] = D.hilbert_series.graded_function().length
        ev.append(item)
        ok = ok and fin
    return ClassVerdict("gcm", ok, ev, _ring_record(M.ring))


def _ext_table(M, check):
    R = M.ring
    d = R.dim
    if d < 1:
        raise PreconditionError("the ring must have positive dimension")
    ev = []
    ok = True
    Rm = _free_R(R)
    for i in range(1, d):
        E = ext(i, M, Rm)
        if E.is_zero():
            ev.append({"i": i, "zero": True, "holds": True})
            continue
        dp, dm = depth(E), E.dim
        holds = check(i, d, dp, dm)
        ev.append({"i": i, "zero": False, "depth": dp, "dim": dm, "holds": holds})
        ok = ok and holds
    return ok, ev


def is_sde(M):
    """Each Ext^i(M, R), 1 <= i <= d-1, vanishes or has depth >= d - i."""
    ok, ev = _ext_table(M, lambda i, d, dp, dm: dp >= d - i)
    return ClassVerdict("sde", ok, ev, _ring_record(M.ring))


def is_cme(M):
    """Each Ext^i(M, R), 1 <= i <= d-1, vanishes or is CM of dimension d - i."""
    ok, ev = _ext_table(M, lambda i, d, dp, dm: dp == dm == d - i)
    return ClassVerdict("cme", ok, ev, _ring_record(M.ring))


def is_seq_cm_ext(M):
    """Ext^{d-i}(M, omega) vanishes or is CM of dimension i, for 0 <= i <= d."""
    R = M.ring
    if not R.cm_flag:
        raise PreconditionError("ring is not Cohen-Macaulay")
    W = R.canonical_module
    d = R.dim
    ev = []
    ok = True
    for i in range(d + 1):
        E = ext(d - i, M, W)
        if E.is_zero():
            ev.append({"i": i, "ext_index": d - i, "zero": True, "holds": True})
            continue
        dp, dm = depth(E), E.dim
        holds = dp == dm == i
        ev.append({"i": i, "ext_index": d - i, "zero": False, "depth": dp, "dim": dm, "holds": holds})
        ok = ok and holds
    return ClassVerdict("seqcm-ext", ok, ev, _ring_record(R))


def is_seq_cm_linkage(M):
    """depth(lambda Omega^i M) >= d - i for 0 <= i <= d-2 (Gorenstein rings only)."""
    R = M.ring
    if not R.gorenstein_flag:
        raise PreconditionError("criterion needs a Gorenstein ring")
    d = R.dim
    if d < 2:
        raise PreconditionError("criterion needs dim R >= 2")
    ev = []
    ok = True
    for i in range(d - 1):
        L = lambda_(syzygy(i, M))
        dp = depth_or_inf(L)
        holds = dp >= d - i
        ev.append({"i": i, "depth": jnum(dp), "bound": d - i, "holds": holds})
        ok = ok and holds
    return ClassVerdict("seqcm-link", ok, ev, _ring_record(R))


CLASSES = {
    "cm": is_cm,
    "mcm": is_mcm,
    "gcm": is_generalized_cm,
    "sde": is_sde,
    "cme": is_cme,
    "seqcm-ext": is_seq_cm_ext,
    "seqcm-link": is_seq_cm_linkage,
}
