import pytest

from jumploci.cm import betti_bounds_check, certify_bestvina_brady, certify_toric, is_cohen_macaulay
from jumploci.corpus import complete_graph, cycle_graph, octahedron, path_graph, rp2_flag
from jumploci.errors import PreconditionNotCertified
from jumploci.linalg import GF, QQ, ZZ
from jumploci.simplicial import Graph, SimplicialComplex as S


@pytest.mark.parametrize("field,expected", [(QQ, True), (GF(3), True), (GF(5), True),
                                            (GF(2), False), (ZZ, False)])
def test_flag_rp2_depends_on_characteristic(field, expected):
    cert = is_cohen_macaulay(rp2_flag(), field)
    assert cert.verdict is expected
    if not expected:
        w = cert.witnesses[0]
        assert w.face == () and w.degree == 1


def test_integer_witness_names_torsion():
    w = is_cohen_macaulay(rp2_flag(), ZZ).witnesses[0]
    assert "torsion [2]" in w.reason


def test_spheres_and_balls_are_cm():
    for L in (octahedron(), S.simplex_boundary([1, 2, 3, 4]), S.simplex([1, 2, 3])):
        assert is_cohen_macaulay(L, QQ).verdict


def test_non_cm_examples():
    two_edges = is_cohen_macaulay(S([[1, 2], [3, 4]]), QQ)
    assert not two_edges.verdict and two_edges.witnesses[0].face == ()
    impure = is_cohen_macaulay(S([[1, 2, 3], [3, 4]]), QQ)
    assert not impure.verdict and not impure.pure
    # bowtie: the link of the shared vertex is disconnected
    bowtie = is_cohen_macaulay(S([[1, 2, 3], [3, 4, 5]]), QQ)
    assert not bowtie.verdict and bowtie.witnesses[0].face == (3,)


def test_full_table_covers_every_face():
    L = octahedron()
    cert = is_cohen_macaulay(L, QQ, full_table=True)
    assert cert.complete and len(cert.table) == len(L.faces())


def test_betti_bounds():
    b = betti_bounds_check(octahedron(), QQ)
    assert b.betti == (1, 6, 12, 8) and b.binomials == (1, 3, 3, 1) and b.passed
    with pytest.raises(PreconditionNotCertified):
        betti_bounds_check(S([[1, 2], [3, 4]]), QQ)


def test_toric_verdict():
    v = certify_toric(octahedron(), QQ)
    assert v.abelian_duality and v.epy and v.dimension == 3
    assert not certify_toric(S([[1, 2], [3, 4]]), QQ).abelian_duality


def test_bestvina_brady():
    # trees and complete graphs have contractible flag complexes
    assert certify_bestvina_brady(path_graph(4), QQ).abelian_duality
    assert certify_bestvina_brady(complete_graph(4), QQ).dimension == 3
    # a cycle is CM but not acyclic
    v = certify_bestvina_brady(cycle_graph(5), QQ)
    assert v.cohen_macaulay and not v.acyclic and not v.abelian_duality
    # a disconnected graph is neither
    assert not certify_bestvina_brady(Graph([1, 2], []), QQ).abelian_duality
