import pytest

from linkage import (
    PreconditionError,
    is_horizontally_linked,
    is_stable,
    lambda_,
    link_by_ideal,
    syzygy,
    t_functor,
    trace_ideal,
    transpose,
)
from linkage.operators import annihilates

from conftest import ideal, q


def test_transpose_of_residue_field(S2):
    T = transpose(q(S2, ["x", "y"]))
    assert sorted(T.twists) == [-1, -1]
    assert list(T.presentation.source) == [0]


def test_transpose_of_free_is_zero(S2):
    assert transpose(S2.as_module()).is_zero()


def test_syzygies(S3):
    k = q(S3, ["x", "y", "z"])
    assert syzygy(0, k).same_fingerprint(k)
    assert syzygy(1, k).same_fingerprint(ideal(S3, ["x", "y", "z"]))
    assert sorted(syzygy(2, k).twists) == [2, 2, 2]
    assert sorted(syzygy(3, k).twists) == [3]
    assert syzygy(4, k).is_zero()
    with pytest.raises(ValueError):
        syzygy(-1, k)


def test_lambda_of_residue_field_is_free(S2):
    L = lambda_(q(S2, ["x", "y"]))
    assert list(L.twists) == [0] and L.num_relations == 0


def test_t_functor(S2):
    k = q(S2, ["x", "y"])
    assert t_functor(1, k).same_fingerprint(transpose(k))
    T2 = t_functor(2, k)
    # Tr of the maximal ideal is k(2)
    assert T2.hilbert_series.graded_function().values == {-2: 1}
    assert T2.num_generators == 1 and T2.num_relations == 2
    with pytest.raises(ValueError):
        t_functor(0, k)


def test_hypersurface_link(hyp):
    Mx, My = q(hyp, ["x"]), q(hyp, ["y"])
    assert lambda_(Mx).same_fingerprint(My)
    assert lambda_(My).same_fingerprint(Mx)
    for M in (Mx, My):
        cert = is_horizontally_linked(M)
        assert cert.verdict and cert.stable
        assert cert.witnesses["lambda2"] == M.fingerprint


def test_residue_field_not_linked(S2):
    cert = is_horizontally_linked(q(S2, ["x", "y"]))
    assert not cert.verdict
    assert cert.stable
    assert cert.to_json()["obstruction"]["length"] == 1


def test_free_module_not_stable(hyp):
    R = hyp.as_module()
    assert not is_stable(R)
    assert not is_horizontally_linked(R).verdict
    assert is_stable(q(hyp, ["x"]))


def test_trace_ideal(hyp, S2):
    tau = trace_ideal(q(hyp, ["x"]))
    # the trace of R/x is yR
    assert tau.same_fingerprint(ideal(hyp, ["y"]))
    assert trace_ideal(q(S2, ["x", "y"])).is_zero()


def test_link_by_ideal(S2):
    M = q(S2, ["x"])
    Rc, L, cert = link_by_ideal(M, ["x*y"])
    assert Rc.ideal_gens and str(Rc.ideal_gens[0]) == "x*y"
    assert L.same_fingerprint(q(Rc, ["y"]))
    assert cert.verdict


def test_link_by_ideal_requires_annihilator(S2):
    M = q(S2, ["x"])
    assert annihilates(M, ["x^2", "x*y"])
    assert not annihilates(M, ["y^2"])
    with pytest.raises(PreconditionError):
        link_by_ideal(M, ["y^2"])
