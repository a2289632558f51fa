"""
The bundled corpus of complexes, graphs, arrangements and presentations.

Everything here is built in code; ``write_corpus`` dumps the documents to
JSON and ``load_corpus`` reads a directory of such files back, validating
each one.  The JSON copy shipped under ``data/corpus`` is what the CLI and
the acceptance suite read.
"""
from __future__ import annotations

import json
from importlib import resources
from pathlib import Path

from .arrangements import Arrangement
from .fox import GroupPresentation, commutator
from .io import InputDocument, dumps_canonical, load
from .simplicial import (Graph, SimplicialComplex, barycentric_subdivision, cone,
                         flag_complex, join)


def octahedron() -> SimplicialComplex:
    """Boundary of the cross-polytope on the antipodal pairs 1-2, 3-4, 5-6."""
    return join(join(SimplicialComplex([[1], [2]]), SimplicialComplex([[3], [4]])),
                SimplicialComplex([[5], [6]]))


def rp2_6() -> SimplicialComplex:
    """The 6-vertex triangulation of the real projective plane."""
    return SimplicialComplex([
        [1, 2, 3], [1, 3, 4], [1, 4, 5], [1, 5, 6], [1, 2, 6],
        [2, 3, 5], [3, 4, 6], [2, 4, 5], [3, 5, 6], [2, 4, 6]])


def rp2_flag() -> SimplicialComplex:
    """Barycentric subdivision of ``rp2_6``; a flag complex on 31 vertices."""
    return barycentric_subdivision(rp2_6())


def two_cliques() -> Graph:
    return Graph([1, 2, 3, 4], [(1, 2), (3, 4)])


def cycle_graph(n: int) -> Graph:
    return Graph(range(1, n + 1), [(i, i % n + 1) for i in range(1, n + 1)])


def path_graph(n: int) -> Graph:
    return Graph(range(1, n + 1), [(i, i + 1) for i in range(1, n)])


def complete_graph(n: int) -> Graph:
    return Graph(range(1, n + 1), [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)])


def small_complexes() -> dict[str, SimplicialComplex]:
    """Complexes on at most six vertices, labelled from 1."""
    S = SimplicialComplex
    return {
        "point": S([[1]]),
        "two_points": S([[1], [2]]),
        "three_points": S([[1], [2], [3]]),
        "edge": S([[1, 2]]),
        "path3": flag_complex(path_graph(3)),
        "path4": flag_complex(path_graph(4)),
        "two_edges": S([[1, 2], [3, 4]]),
        "cycle4": flag_complex(cycle_graph(4)),
        "cycle5": flag_complex(cycle_graph(5)),
        "triangle_boundary": S.simplex_boundary([1, 2, 3]),
        "simplex2": S.simplex([1, 2, 3]),
        "simplex3": S.simplex([1, 2, 3, 4]),
        "tetrahedron_boundary": S.simplex_boundary([1, 2, 3, 4]),
        "simplex4_boundary": S.simplex_boundary([1, 2, 3, 4, 5]),
        "octahedron": octahedron(),
        "cone_cycle4": cone(flag_complex(cycle_graph(4)), 5),
        "cone_two_points": cone(S([[1], [2]]), 3),
        "bowtie": S([[1, 2, 3], [3, 4, 5]]),
        "triangle_with_tail": S([[1, 2, 3], [3, 4]]),
        "two_triangles_edge": S([[1, 2, 3], [2, 3, 4]]),
        "two_disjoint_triangles": S([[1, 2, 3], [4, 5, 6]]),
        "k4_skeleton": S(complete_graph(4).edges),
        "moebius5": S([[1, 2, 3], [2, 3, 4], [3, 4, 5], [4, 5, 1], [5, 1, 2]]),
        "suspension_three_points": join(S([[1], [2], [3]]), S([[4], [5]])),
        "rp2_6": rp2_6(),
    }


CM_COMPLEXES = ("octahedron", "tetrahedron_boundary", "simplex4_boundary", "simplex2",
                "simplex3", "cone_cycle4", "cone_two_points", "cycle5", "edge")


def square_triangle() -> Arrangement:
    """Graphic arrangement of a square 1234 and a triangle on its edge 3-4
    with apex 5.  Edge ``j`` (1-based) is hyperplane ``j - 1``; the square
    uses edges 1-4 and the triangle edges 4, 5, 6."""
    return Arrangement.graphic([1, 2, 3, 4, 5],
                               [(1, 2), (2, 3), (4, 1), (3, 4), (3, 5), (5, 4)])


def square_triangle_drawn() -> Arrangement:
    """Same graph with edges 3 and 4 numbered as in the drawing."""
    return Arrangement.graphic([1, 2, 3, 4, 5],
                               [(1, 2), (2, 3), (3, 4), (4, 1), (3, 5), (5, 4)])


def arrangements() -> dict[str, Arrangement]:
    return {
        "square_triangle": square_triangle(),
        "square_triangle_drawn": square_triangle_drawn(),
        "boolean3": Arrangement([[1, 0, 0], [0, 1, 0], [0, 0, 1]]),
        "pencil3": Arrangement([[1, 0, 1], [0, 1, 1]]),
        "braid4": Arrangement.graphic([1, 2, 3, 4],
                                      [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]),
        "generic4": Arrangement([[1, 0, 0, 1], [0, 1, 0, 1], [0, 0, 1, 1]]),
    }


def genus2() -> GroupPresentation:
    return GroupPresentation(4, [commutator([1], [2]) + commutator([3], [4])])


def one_relator() -> GroupPresentation:
    """One-relator group whose relator has trivial abelianization and
    Alexander polynomial vanishing on ``t_2 = 2``."""
    return GroupPresentation(2, [[1, 2, -1, 2, 1, -2, -1, -2, 1, 2, -1, -2]])


def heisenberg() -> GroupPresentation:
    x, y = [1], [2]
    c = list(commutator(x, y))
    return GroupPresentation(2, [commutator(x, c), commutator(y, c)])


def presentations() -> dict[str, GroupPresentation]:
    return {
        "genus2": genus2(),
        "one_relator": one_relator(),
        "one_relator_wedge": one_relator().wedge_circle(),
        "heisenberg": heisenberg(),
        "free_abelian2": GroupPresentation(2, [commutator([1], [2])]),
        "free2": GroupPresentation(2, []),
    }


def graphs() -> dict[str, Graph]:
    return {
        "two_cliques": two_cliques(),
        "path3": path_graph(3),
        "cycle4": cycle_graph(4),
        "k4": complete_graph(4),
        "cycle5": cycle_graph(5),
    }


def build_corpus() -> dict[str, InputDocument]:
    docs: dict[str, InputDocument] = {}
    for name, L in small_complexes().items():
        docs[name] = InputDocument("complex", L, name=name, ambient=L.vertices)
    docs["rp2_flag"] = InputDocument("complex", rp2_flag(), name="rp2_flag",
                                     ambient=rp2_flag().vertices)
    for name, G in graphs().items():
        docs[f"graph_{name}"] = InputDocument("graph", G, name=f"graph_{name}")
    for name, A in arrangements().items():
        docs[name] = InputDocument("arrangement", A, name=name)
    for name, P in presentations().items():
        docs[name] = InputDocument("presentation", P, name=name)
    return docs


def write_corpus(directory) -> list[Path]:
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    out = []
    for name, doc in build_corpus().items():
        path = directory / f"{name}.json"
        path.write_text(json.dumps(doc.to_json(), sort_keys=True) + "\n")
        out.append(path)
    return out


def bundled_corpus_dir() -> Path:
    return Path(str(resources.files("jumploci") / "data" / "corpus"))


def load_corpus(directory=None) -> dict[str, InputDocument]:
    """Read and validate every ``*.json`` file; raises ``InputError`` on the
    first bad file."""
    directory = Path(directory) if directory is not None else bundled_corpus_dir()
    docs = {}
    for path in sorted(directory.glob("*.json")):
        doc = load(path)
        docs[doc.name or path.stem] = doc
    return docs


def corpus_matches_builders(directory=None) -> list[str]:
    """Names whose JSON differs from the in-code construction."""
    on_disk = load_corpus(directory)
    bad = []
    for name, doc in build_corpus().items():
        got = on_disk.get(name)
        if got is None or dumps_canonical(got.to_json()) != dumps_canonical(doc.to_json()):
            bad.append(name)
    return bad
