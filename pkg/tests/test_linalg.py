from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from jumploci.errors import NotAComplex
from jumploci.linalg import (GF, QQ, ZZ, CoefficientField, Echelon, cochain_cohomology,
                             matmul, rank, smith_normal_form)


def test_field_parsing():
    assert CoefficientField.parse("Q") == QQ
    assert CoefficientField.parse("Z") == ZZ
    assert CoefficientField.parse(" GF( 7 ) ") == GF(7)
    with pytest.raises(ValueError):
        CoefficientField.parse("GF(6)")
    with pytest.raises(ValueError):
        CoefficientField.parse("R")


def test_gf_arithmetic():
    k = GF(5)
    assert k.mul(k.inv(3), 3) == 1
    assert k.coerce(Fraction(1, 2)) == 3
    assert k.coerce(-1) == 4


def test_rank_depends_on_characteristic():
    M = [[1, 1, 0], [0, 1, 1], [1, 0, 1]]
    assert rank(M, QQ) == 3
    assert rank(M, GF(2)) == 2


def test_echelon_reduce():
    e = Echelon(QQ)
    assert e.add({0: Fraction(1), 1: Fraction(2)})
    assert e.add({1: Fraction(1)})
    assert not e.add({0: Fraction(3), 1: Fraction(5)})
    assert e.rank == 2


def test_snf_known_values():
    assert smith_normal_form([[2, 0], [0, 3]]) == (2, [1, 6])
    assert smith_normal_form([[2, 4, 4], [-6, 6, 12], [10, -4, -16]]) == (3, [2, 6, 12])
    assert smith_normal_form([[0, 0], [0, 0]]) == (0, [])
    assert smith_normal_form([]) == (0, [])


@settings(max_examples=60, deadline=None)
@given(st.lists(st.lists(st.integers(-8, 8), min_size=3, max_size=3), min_size=1, max_size=4))
def test_snf_chain_and_rank(M):
    r, d = smith_normal_form(M)
    assert r == rank(M, QQ) == len(d)
    assert all(x > 0 for x in d)
    assert all(d[i + 1] % d[i] == 0 for i in range(len(d) - 1))
    if len(M) == 3 and r == 3:
        det = (M[0][0] * (M[1][1] * M[2][2] - M[1][2] * M[2][1])
               - M[0][1] * (M[1][0] * M[2][2] - M[1][2] * M[2][0])
               + M[0][2] * (M[1][0] * M[2][1] - M[1][1] * M[2][0]))
        prod = 1
        for x in d:
            prod *= x
        assert prod == abs(det)


def test_cochain_cohomology_circle():
    # C^0 = k^2 (vertices), C^1 = k^2 (edges of a 2-gon)
    d0 = [[-1, 1], [1, -1]]
    assert cochain_cohomology([d0], [2, 2], QQ) == [1, 1]


def test_cochain_rejects_non_complex():
    with pytest.raises(NotAComplex):
        cochain_cohomology([[[1]], [[1]]], [1, 1, 1], QQ)
    with pytest.raises(NotAComplex):
        cochain_cohomology([[[1, 0]]], [1, 1], QQ)


def test_matmul():
    assert matmul([[1, 2]], [[3], [4]], QQ) == [[11]]
