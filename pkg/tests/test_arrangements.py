import random
from itertools import combinations

import pytest

from jumploci.arrangements import (Arrangement, ProjectiveModel, nbc_sets, orlik_solomon,
                                   random_projective_point, sample_propagation)
from jumploci.corpus import square_triangle, square_triangle_drawn
from jumploci.errors import NotCentral, NotEssential, NotProjectivePoint
from jumploci.linalg import GF, QQ


def graph_cycles(edges):
    """Edge sets of simple cycles, found by brute force on subsets."""
    out = []
    for r in range(3, len(edges) + 1):
        for S in combinations(range(len(edges)), r):
            deg = {}
            for j in S:
                for v in edges[j]:
                    deg[v] = deg.get(v, 0) + 1
            if any(d != 2 for d in deg.values()):
                continue
            # connected?
            seen, stack = set(), [edges[S[0]][0]]
            while stack:
                v = stack.pop()
                if v in seen:
                    continue
                seen.add(v)
                stack += [w for j in S for w in edges[j] if v in edges[j]]
            if seen == set(deg):
                out.append(S)
    return out


def test_example_graph_rank_and_dims():
    A = square_triangle()
    assert A.rank == 4 and A.size == 6 and A.is_essential
    model = ProjectiveModel.build(A, QQ)
    assert model.algebra.dims == [1, 6, 14, 15, 6]
    assert model.projective_dims() == [1, 5, 9, 6]


@pytest.mark.parametrize("build", [square_triangle, square_triangle_drawn])
def test_circuits_are_graph_cycles(build):
    A = build()
    assert sorted(A.circuits) == sorted(graph_cycles(A.edges))


def test_two_numberings_differ_by_swapping_edges_3_and_4():
    main, fig = square_triangle(), square_triangle_drawn()
    swap = {0: 0, 1: 1, 2: 3, 3: 2, 4: 4, 5: 5}
    assert sorted(tuple(sorted(swap[j] for j in C)) for C in fig.circuits) == sorted(main.circuits)
    assert (3, 4, 5) in main.circuits and (2, 4, 5) in fig.circuits


@pytest.mark.parametrize("A", [square_triangle(), Arrangement([[1, 0, 1], [0, 1, 1]]),
                               Arrangement([[1, 0, 0, 1], [0, 1, 0, 1], [0, 0, 1, 1]]),
                               Arrangement.graphic([1, 2, 3, 4], [(1, 2), (1, 3), (1, 4),
                                                                  (2, 3), (2, 4), (3, 4)])])
def test_os_dims_equal_nbc_counts(A):
    assert orlik_solomon(A, QQ).dims == [len(s) for s in nbc_sets(A)]
    assert orlik_solomon(A, GF(5)).dims == [len(s) for s in nbc_sets(A)]


def test_braid_arrangement_poincare_polynomial():
    # (1 + t)(1 + 2t)(1 + 3t) = 1 + 6t + 11t^2 + 6t^3
    A = Arrangement.graphic([1, 2, 3, 4], [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)])
    assert orlik_solomon(A, QQ).dims == [1, 6, 11, 6]


def test_resonance_at_component_points():
    model = ProjectiveModel.build(square_triangle(), QQ)
    h = model.resonance_at([0, 0, 0, 1, 1, -2])
    assert all(x >= 1 for x in h[1:])
    h = model.resonance_at([1, -1, 1, -1, 0, 0])
    assert h[1] == 0 and h[2] >= 1 and h[3] >= 1


def test_drawn_numbering_at_triangle_point_breaks_the_pattern():
    h = ProjectiveModel.build(square_triangle_drawn(), QQ).resonance_at([0, 0, 0, 1, 1, -2])
    assert h == [0, 0, 0, 1]


def test_generic_point_has_only_top_cohomology():
    model = ProjectiveModel.build(square_triangle(), QQ)
    h = model.resonance_at([1, 2, 3, 5, 7, -18])
    euler = sum((-1) ** p * d for p, d in enumerate(model.projective_dims()))
    assert h[:3] == [0, 0, 0] and h[3] == (-1) ** 3 * euler


def test_random_points_propagate():
    A = square_triangle()
    rng = random.Random(3)
    pts = [random_projective_point(rng, 6, QQ) for _ in range(20)]
    assert all(v.propagates for _, v in sample_propagation(A, pts, QQ))


def test_errors():
    with pytest.raises(NotCentral):
        orlik_solomon(Arrangement([[1, 0], [0, 1]], constants=[1, 0]), QQ)
    with pytest.raises(NotEssential):
        orlik_solomon(Arrangement([[1, 1], [2, 2]]), QQ)
    with pytest.raises(NotProjectivePoint):
        ProjectiveModel.build(square_triangle(), QQ).resonance_at([1, 0, 0, 0, 0, 0])
    with pytest.raises(ValueError):
        Arrangement([[1, 0], [0, 0]])
