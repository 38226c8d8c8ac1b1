import pytest

from linkage import (
    PresentedModule,
    ZeroModuleError,
    betti_table,
    depth,
    free_resolution,
    quotient_ring,
)
from linkage.hilbert import GradedFunction, HilbertSeries
from linkage.resolution import projective_dimension_S

from conftest import ideal, q


def test_koszul_betti(S3):
    k = q(S3, ["x", "y", "z"])
    B = betti_table(k)
    assert B.to_json() == [[0, 0, 1], [1, 1, 3], [2, 2, 3], [3, 3, 1]]
    assert depth(k) == 0 and k.dim == 0


def test_twisted_cubic_resolution(cubic):
    R = cubic.as_module()
    assert betti_table(R).to_json() == [[0, 0, 1], [1, 2, 3], [2, 3, 2]]
    assert (R.dim, depth(R)) == (2, 2)


def test_resolution_over_quotient_is_periodic(hyp):
    M = q(hyp, ["x"])
    F = free_resolution(M, 5)
    assert F.ranks() == [1, 1, 1, 1, 1, 1]
    assert F.is_complex()
    # x, y, x, y, ...
    assert [str(d.rows()[0][0]) for d in F.maps] == ["x", "y", "x", "y", "x"]


def test_hilbert_series_examples(S2):
    M = q(S2, ["x^2", "x*y"])
    assert M.hilbert_series.numerator == {0: 1, 2: -2, 3: 1}
    assert M.hilbert_series.dim == 1
    k = q(S2, ["x", "y"])
    assert k.hilbert_series.graded_function() == GradedFunction({0: 1})
    with pytest.raises(ValueError):
        M.hilbert_series.graded_function()


def test_hilbert_coefficients():
    H = HilbertSeries({0: 1}, (1, 1, 1))
    assert H.expansion(0, 4) == [1, 3, 6, 10, 15]
    assert (H - H.shift(1)).expansion(0, 3) == [1, 2, 3, 4]


def test_weighted_hilbert():
    R = quotient_ring("x y", weights=(1, 2))
    H = R.as_module().hilbert_series
    assert H.expansion(0, 5) == [1, 1, 2, 2, 3, 3]


def test_depth_of_non_cm(S2):
    M = q(S2, ["x^2", "x*y"])
    assert (M.dim, depth(M)) == (1, 0)
    assert projective_dimension_S(M) == 2


def test_zero_module(S2):
    Z = q(S2, ["1"])
    assert Z.is_zero()
    with pytest.raises(ZeroModuleError):
        depth(Z)


def test_minimal_presentation_drops_units(S2):
    M = PresentedModule.cokernel(S2, [["1", "x"], ["0", "y"]], [0, 0], [0, 1])
    m = M.minimal()
    assert m.num_generators == 1
    assert m.same_fingerprint(q(S2, ["y"]))
    assert m.hilbert_series == M.hilbert_series


def test_ideal_module_and_twists(S3):
    m = ideal(S3, ["x", "y", "z"])
    assert sorted(m.twists) == [1, 1, 1]
    assert m.fingerprint["relations"] == [2, 2, 2]
    shifted = m.twisted(1)
    assert sorted(shifted.twists) == [0, 0, 0]
    assert shifted.hilbert_series == m.hilbert_series.shift(-1)


def test_direct_sum_betti(S2):
    A = q(S2, ["x"])
    B = q(S2, ["y"], 1)
    s = A.direct_sum(B)
    assert s.hilbert_series == A.hilbert_series + B.hilbert_series
    assert betti_table(s).to_json() == [[0, 0, 1], [0, 1, 1], [1, 1, 1], [1, 2, 1]]
