
import pytest
from hypothesis import given, settings, strategies as st

from jumploci.corpus import one_relator, genus2, heisenberg
from jumploci.errors import InvalidCharacter, NegativeEulerCharacteristic
from jumploci.fox import (Character, GroupPresentation, chi_propagation_check, commutator,
                          evaluate_laurent, fox_derivative_laurent, fox_row, free_reduce,
                          fundamental_identity_holds, sample_characters, twisted_cohomology,
                          twisted_homology)
from jumploci.linalg import GF, QQ


def test_words():
    assert free_reduce([1, -1, 2, 3, -3]) == (2,)
    assert commutator([1], [2]) == (1, 2, -1, -2)


def test_genus_two_examples():
    P = genus2()
    assert twisted_cohomology(P, Character.make(P, [2, 1, 1, 1], QQ)) == (0, 2, 0)
    assert twisted_cohomology(P, Character.trivial(P, QQ)) == (1, 4, 1)


def test_one_relator_example():
    P = one_relator()
    h = twisted_cohomology(P, Character.make(P, [5, 2], QQ))
    assert h[1] >= 1 and h[2] >= 1
    assert twisted_cohomology(P, Character.make(P, [3, 3], QQ)) == (0, 0, 0)
    assert twisted_cohomology(P, Character.trivial(P, QQ)) == (1, 2, 1)


def test_wedge_with_circle_fails_propagation():
    Y = one_relator().wedge_circle()
    rho = Character.make(Y, [1, 3, 1], QQ)
    assert twisted_cohomology(Y, rho) == (0, 1, 0)
    with pytest.warns(NegativeEulerCharacteristic):
        v = chi_propagation_check(Y, [rho])
    assert not v.propagates and "out of hypothesis" in v.note


def test_heisenberg_two_complex():
    P = heisenberg()
    h = twisted_cohomology(P, Character.make(P, [3, 1], QQ))
    assert h[0] == 0 and h[1] == 0


def test_invalid_characters():
    P = GroupPresentation(1, [[1, 1]])
    with pytest.raises(InvalidCharacter):
        Character.make(P, [2], QQ)
    assert Character.make(P, [-1], QQ).values == (-1,)
    with pytest.raises(InvalidCharacter):
        Character.make(genus2(), [0, 1, 1, 1], QQ)


def test_z_squared():
    P = GroupPresentation(2, [commutator([1], [2])])
    assert twisted_cohomology(P, Character.trivial(P, QQ)) == (1, 2, 1)
    assert twisted_cohomology(P, Character.make(P, [2, 1], QQ)) == (0, 0, 0)


words = st.lists(st.sampled_from([1, -1, 2, -2, 3, -3]), max_size=12)


@settings(max_examples=80, deadline=None)
@given(words, st.lists(st.integers(1, 6), min_size=3, max_size=3))
def test_laurent_route_matches_direct_evaluation(w, vals):
    k = GF(7)
    rho = Character(tuple(k.coerce(v) for v in vals), k)
    direct = fox_row(w, rho)
    for i in range(1, 4):
        assert evaluate_laurent(fox_derivative_laurent(w, i, 3), rho.values, k) == direct[i - 1]


@settings(max_examples=80, deadline=None)
@given(words, st.lists(st.integers(1, 6), min_size=3, max_size=3))
def test_fundamental_identity_on_words(w, vals):
    k = GF(7)
    rho = Character(tuple(k.coerce(v) for v in vals), k)
    row = fox_row(w, rho)
    lhs = sum(d * (v - 1) for d, v in zip(row, rho.values)) % 7
    assert lhs == (rho.evaluate(w) - 1) % 7


@pytest.mark.parametrize("P", [genus2(), one_relator(), one_relator().wedge_circle(),
                               heisenberg()], ids=["genus2", "ex", "wedge", "heis"])
def test_duality_and_euler_characteristic(P):
    for rho in sample_characters(P, QQ, 20, 11):
        assert fundamental_identity_holds(P, rho)
        h = twisted_cohomology(P, rho)
        assert h == twisted_homology(P, rho.inverse())
        assert h[0] - h[1] + h[2] == P.euler_characteristic


def test_sample_characters_is_seeded():
    P = genus2()
    a = [c.values for c in sample_characters(P, QQ, 5, 1)]
    b = [c.values for c in sample_characters(P, QQ, 5, 1)]
    assert a == b and len(a) == 5
