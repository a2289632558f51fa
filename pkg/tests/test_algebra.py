import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from jumploci.algebra import (aomoto_cohomology, aomoto_homology_dual, bb_quotient_ring,
                              bgg_complex_check, exterior_algebra, generic_point,
                              stanley_reisner_ring)
from jumploci.corpus import complete_graph, octahedron, path_graph
from jumploci.errors import IntegerCoefficientsUnsupported, LengthMismatch, NotAcyclic
from jumploci.linalg import GF, QQ, ZZ
from jumploci.simplicial import SimplicialComplex as S, flag_complex


def test_sr_ring_dims_are_f_vector():
    assert stanley_reisner_ring(octahedron(), QQ).dims == [1, 6, 12, 8]


def test_exterior_algebra():
    E = exterior_algebra(3, QQ)
    assert E.dims == [1, 3, 3, 1]
    assert E.check_square_zero()


def test_aomoto_small_cases():
    two_points = stanley_reisner_ring(S([[1], [2]]), QQ)
    assert aomoto_cohomology(two_points, [1, 1]) == [0, 1]
    assert aomoto_cohomology(two_points, [0, 0]) == [1, 2]
    assert aomoto_cohomology(exterior_algebra(2, QQ), [1, 0]) == [0, 0, 0]
    with pytest.raises(LengthMismatch):
        aomoto_cohomology(two_points, [1])


def test_integer_coefficients_rejected():
    with pytest.raises((IntegerCoefficientsUnsupported, ValueError)):
        stanley_reisner_ring(octahedron(), ZZ)


facets = st.lists(st.lists(st.integers(0, 4), min_size=1, max_size=3), min_size=1, max_size=5)


@settings(max_examples=40, deadline=None)
@given(facets, st.integers(0, 10 ** 6))
def test_aomoto_euler_characteristic_independent_of_point(fs, seed):
    L = S(fs)
    for k in (QQ, GF(2)):
        A = stanley_reisner_ring(L, k)
        assert A.check_square_zero()
        chi = sum((-1) ** p * d for p, d in enumerate(A.dims))
        rng = random.Random(seed)
        a = generic_point(rng, A.ngens, [i for i in range(A.ngens) if rng.random() < 0.7], k)
        h = aomoto_cohomology(A, a)
        assert sum((-1) ** p * x for p, x in enumerate(h)) == chi
        assert aomoto_homology_dual(A, a) == h


def test_bgg_vanishes_for_octahedron_through_degree_six():
    rep = bgg_complex_check(stanley_reisner_ring(octahedron(), QQ), 6)
    assert rep.consistent_with_koszul
    assert all(rep.vanishing.values())


def test_bgg_detects_two_disjoint_edges():
    rep = bgg_complex_check(stanley_reisner_ring(S([[1, 2], [3, 4]]), QQ), 4)
    assert not rep.consistent_with_koszul
    assert (2, 1) in [(t, i) for t, i, _ in rep.nonzero]


def test_bgg_exterior_algebra_is_koszul():
    assert bgg_complex_check(exterior_algebra(3, QQ), 4).consistent_with_koszul


def test_bb_quotient_dims():
    assert bb_quotient_ring(flag_complex(path_graph(2)), QQ).dims == [1, 1]
    assert bb_quotient_ring(flag_complex(complete_graph(3)), QQ).dims == [1, 2, 1]
    with pytest.raises(NotAcyclic):
        bb_quotient_ring(S([[1], [2]]), QQ)
