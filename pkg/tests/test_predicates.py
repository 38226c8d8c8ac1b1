import pytest

from linkage import (
    PreconditionError,
    ZeroModuleError,
    is_cm,
    is_cme,
    is_generalized_cm,
    is_mcm,
    is_sde,
    is_seq_cm_ext,
    is_seq_cm_linkage,
    quotient_ring,
)
from linkage.predicates import CLASSES

from conftest import ideal, q

ORDER = ("cm", "mcm", "gcm", "sde", "cme", "seqcm-ext", "seqcm-link")

# verdicts worked out by hand; the embedded line in (x^2, xy) breaks gcm but not seq-CM
TABLE = [
    ("x^2, xy", ["x^2", "x*y"], (False, False, False, True, True, True, True)),
    ("xy, xz", ["x*y", "x*z"], (False, False, False, True, True, True, True)),
    ("x", ["x"], (True, False, True, True, True, True, True)),
    ("x, y, z", ["x", "y", "z"], (True, False, True, True, True, True, True)),
    ("xy", ["x*y"], (True, False, True, True, True, True, True)),
]


@pytest.mark.parametrize("label,gens,expected", TABLE, ids=[t[0] for t in TABLE])
def test_class_table(S3, label, gens, expected):
    M = q(S3, gens)
    got = tuple(CLASSES[c](M).verdict for c in ORDER)
    assert got == expected


def test_maximal_ideal_is_not_sde(S3):
    m = ideal(S3, ["x", "y", "z"])
    v = is_sde(m)
    assert not v
    # Ext^2(m, S) = k(3) sits in the i = 2 slot with depth 0 < 1
    assert v.evidence[-1] == {"i": 2, "zero": False, "depth": 0, "dim": 0, "holds": False}
    assert is_generalized_cm(m)
    assert not is_seq_cm_ext(m)


def test_skew_lines():
    S4 = quotient_ring("x y z w")
    M = q(S4, ["x*z", "x*w", "y*z", "y*w"])
    assert is_generalized_cm(M) and not is_cm(M)
    assert not is_seq_cm_ext(M) and not is_seq_cm_linkage(M)


def test_mcm(hyp):
    assert is_mcm(q(hyp, ["x"]))
    assert not is_mcm(q(hyp, ["x", "y"]))


def test_plane_curve_example(S2):
    M = q(S2, ["x^2", "x*y"])
    assert is_seq_cm_ext(M) and is_seq_cm_linkage(M)
    assert not is_cm(M)


def test_cme_vs_sde_on_cubic(cubic):
    W = cubic.canonical_module
    assert is_cme(W) and is_sde(W)


def test_preconditions(S2, cubic):
    with pytest.raises(ZeroModuleError):
        is_cm(q(S2, ["1"]))
    with pytest.raises(PreconditionError):
        is_seq_cm_linkage(q(cubic, ["a"]))
    with pytest.raises(PreconditionError):
        is_seq_cm_linkage(q(quotient_ring("x y", ["x*y"]), ["x"]))
    nonCM = quotient_ring("x y z w", ["x*z", "x*w", "y*z", "y*w"])
    with pytest.raises(PreconditionError):
        is_seq_cm_ext(q(nonCM, ["x"]))
    with pytest.raises(PreconditionError):
        is_sde(q(quotient_ring("x", ["x^2"]), ["x"]))


def test_verdict_json_shape(S2):
    j = is_cme(q(S2, ["x"])).to_json()
    assert list(j) == ["predicate", "verdict", "hypotheses", "evidence"]
    assert j["hypotheses"] == {"d": 2, "depth_R": 2, "cm": True}
