import pytest

from linkage import InputError, depth
from linkage.generators import (
    SimplicialComplex,
    random_monomial_module,
    shellable_generator,
    stanley_reisner,
)


def test_minimal_nonfaces():
    D = SimplicialComplex(4, [[1, 2, 3], [3, 4]])
    assert D.minimal_nonfaces() == [[1, 4], [2, 4]]
    assert not D.is_pure


def test_complex_validation():
    with pytest.raises(InputError):
        SimplicialComplex(3, [[1, 4]])
    with pytest.raises(InputError):
        SimplicialComplex(3, [[1, 2], [1, 2, 3]])
    with pytest.raises(InputError):
        SimplicialComplex(3, [])


def test_stanley_reisner_ring():
    R = stanley_reisner(SimplicialComplex(4, [[1, 2, 3], [3, 4]]))
    assert [str(g) for g in R.ideal_gens] == ["x1*x4", "x2*x4"]
    assert (R.dim, R.depth) == (3, 2)
    assert not R.cm_flag


def test_two_disjoint_edges_is_buchsbaum_shaped():
    R = stanley_reisner(SimplicialComplex(4, [[1, 2], [3, 4]]))
    assert (R.dim, R.depth) == (2, 1)


def test_shellable_regression():
    D = shellable_generator(170, 4, mixed=True)
    assert D.as_lists() == [[1, 2, 3], [3, 4]]
    assert D.shelling == ((1, 2, 3), (3, 4))


@pytest.mark.parametrize("seed", range(12))
def test_shellable_complexes_are_sequentially_cm(seed):
    # shellable (even nonpure) complexes give sequentially CM rings, pure ones CM rings
    D = shellable_generator(seed, 5, mixed=seed % 2 == 1)
    R = stanley_reisner(D)
    if D.is_pure:
        assert R.cm_flag
    sizes = [len(F) for F in D.shelling]
    assert sizes == sorted(sizes, reverse=True)


def test_shellable_is_deterministic():
    assert shellable_generator(5, 6, True) == shellable_generator(5, 6, True)


def test_random_monomial_regression(S3):
    got = [[str(g) for g in random_monomial_module(s, S3).presentation.rows()[0]] for s in range(3)]
    assert got == [["z", "y*z", "y^3", "x*y"], ["y^2", "x^2*y"], ["x"]]


def test_random_monomial_args(S3):
    with pytest.raises(InputError):
        random_monomial_module(0, S3, 0, 3)
    F = random_monomial_module(0, S3, 2, 0)
    assert F.num_relations == 0 and depth(F) == 3
