import pytest
from hypothesis import given, settings, strategies as st

from jumploci.corpus import octahedron, rp2_flag, rp2_6
from jumploci.errors import ArityMismatch, NotAFace, OverlappingVertexSets, UnknownVertex
from jumploci.simplicial import (Graph, SimplicialComplex, alexander_dual, compose, cone,
                                 flag_complex, induced_subcomplex, join, link,
                                 simplicial_wedge)

S = SimplicialComplex


def test_facets_are_canonical():
    L = S([[2, 1], [1, 2, 3], [3]])
    assert L.facets == ((1, 2, 3),)
    assert L.f_vector == (1, 3, 3, 1)


def test_void_and_empty_face():
    assert S.void().is_void
    assert S.empty_face().faces() == [()]
    assert S.empty_face().dim == -1


def test_link_of_vertex_in_octahedron_is_square():
    lk = link(octahedron(), [1])
    assert lk == S([[3, 5], [3, 6], [4, 5], [4, 6]])
    with pytest.raises(NotAFace):
        link(octahedron(), [1, 2])


def test_induced_subcomplex():
    L = S([[1, 2, 3], [3, 4]])
    assert induced_subcomplex(L, [1, 2, 4]) == S([[1, 2], [4]])
    with pytest.raises(UnknownVertex):
        induced_subcomplex(L, [9])


def test_flag_complex_of_graphs():
    assert flag_complex(Graph([1, 2, 3], [(1, 2), (2, 3), (1, 3)])) == S([[1, 2, 3]])
    assert flag_complex(Graph([], [])) == S.empty_face()
    assert rp2_flag().is_flag()
    assert not S.simplex_boundary([1, 2, 3]).is_flag()


def test_barycentric_rp2_counts():
    assert rp2_6().f_vector == (1, 6, 15, 10)
    assert rp2_flag().f_vector == (1, 31, 90, 60)


def test_join_and_cone():
    assert join(S([[1], [2]]), S([[3]])) == S([[1, 3], [2, 3]])
    assert cone(S([[1], [2]]), 3) == S([[1, 3], [2, 3]])


def test_alexander_dual_examples():
    # boundary of a simplex is dual to the empty-face complex
    assert alexander_dual(S.simplex_boundary([1, 2, 3]), [1, 2, 3]) == S.empty_face()
    # faces of the dual are exactly the complements of non-faces
    L = S([[1], [2]])
    D = alexander_dual(L, [1, 2, 3])
    V = {1, 2, 3}
    for f in D.faces():
        assert tuple(sorted(V - set(f))) not in L


small = st.lists(st.lists(st.integers(1, 5), min_size=1, max_size=4), min_size=1, max_size=5)


@settings(max_examples=50, deadline=None)
@given(small)
def test_alexander_dual_is_involution(facets):
    L = S(facets)
    V = range(1, 6)
    assert alexander_dual(alexander_dual(L, V), V) == L


def test_compose_with_points_is_identity_up_to_relabel():
    L = S([[1, 2], [2, 3]])
    out = compose(L, [S([[10]]), S([[20]]), S([[30]])])
    assert out == S([[0, 1], [1, 2]])
    assert out.names == {0: (1, 10), 1: (2, 20), 2: (3, 30)}


def test_compose_errors():
    L = S([[1, 2]])
    with pytest.raises(ArityMismatch):
        compose(L, [S([[1]])])
    with pytest.raises(OverlappingVertexSets):
        compose(L, [S([[1]]), S([[1, 2]])])


def test_wedge_doubles_a_vertex():
    # the wedge of a two-point complex at one vertex with multiplicity 2 is
    # the suspension-like path: dual computations must give a 1-dim complex
    L = S([[1], [2]])
    W = simplicial_wedge(L, [2, 1])
    assert len(W.vertices) == 3
    assert W.dim == 1


def test_wedge_of_simplex_boundary_is_simplex_boundary():
    W = simplicial_wedge(S.simplex_boundary([1, 2, 3]), [2, 1, 1])
    assert W == S.simplex_boundary([0, 1, 2, 3])


def test_graph_components():
    G = Graph([1, 2, 3, 4], [(1, 2), (3, 4)])
    assert sorted(map(sorted, G.components())) == [[1, 2], [3, 4]]
    assert not G.is_connected()
    assert G.induced([1, 2]).is_connected()
