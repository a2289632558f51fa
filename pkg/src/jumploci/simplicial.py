"""
Finite abstract simplicial complexes and the combinatorial constructions
used throughout the package: links, induced subcomplexes, flag complexes,
joins, cones, Alexander duals, composition and the simplicial wedge.

A complex is stored by its facets, each a sorted tuple of non-negative
integers.  The *void* complex has no faces at all; the complex ``{()}``
has only the empty face.
"""
from __future__ import annotations

from functools import cached_property
from itertools import combinations, product
from typing import Iterable, Sequence

from .errors import (ArityMismatch, NotAFace, OverlappingVertexSets,
                     UnknownVertex, VoidComplex)

Face = tuple


def _canon(face: Iterable[int]) -> Face:
    face = tuple(sorted(set(int(v) for v in face)))
    if face and face[0] < 0:
        raise UnknownVertex(f"vertex labels must be non-negative, got {face[0]}")
    return face


def _maximal(faces: Iterable[Face]) -> list[Face]:
    faces = sorted(set(faces), key=lambda f: (-len(f), f))
    kept: list[frozenset] = []
    out = []
    for f in faces:
        fs = frozenset(f)
        if any(fs <= k for k in kept):
            continue
        kept.append(fs)
        out.append(f)
    return sorted(out)


class SimplicialComplex:
    """An immutable simplicial complex given by its facets.

    Facets are canonicalised on construction: vertices sorted, duplicates and
    non-maximal sets removed.  ``vertices`` is exactly the set of 0-faces.
    """

    def __init__(self, facets: Iterable[Iterable[int]]):
        self.facets: tuple[Face, ...] = tuple(_maximal(_canon(f) for f in facets))

    @classmethod
    def void(cls) -> "SimplicialComplex":
        return cls([])

    @classmethod
    def empty_face(cls) -> "SimplicialComplex":
        """The complex ``{()}`` whose only face is the empty simplex."""
        return cls([()])

    @classmethod
    def simplex(cls, vertices: Iterable[int]) -> "SimplicialComplex":
        return cls([tuple(vertices)])

    @classmethod
    def simplex_boundary(cls, vertices: Iterable[int]) -> "SimplicialComplex":
        vs = tuple(vertices)
        return cls(combinations(vs, len(vs) - 1))

    def __repr__(self):
        return f"SimplicialComplex({[list(f) for f in self.facets]})"

    def __eq__(self, other):
        return isinstance(other, SimplicialComplex) and self.facets == other.facets

    def __hash__(self):
        return hash(self.facets)

    @property
    def is_void(self) -> bool:
        return not self.facets

    def require_nonvoid(self) -> None:
        if self.is_void:
            raise VoidComplex("the void complex has no faces")

    @cached_property
    def vertices(self) -> tuple[int, ...]:
        return tuple(sorted({v for f in self.facets for v in f}))

    @cached_property
    def dim(self) -> int:
        self.require_nonvoid()
        return max(len(f) for f in self.facets) - 1

    @cached_property
    def _face_set(self) -> frozenset:
        out = set()
        for f in self.facets:
            for k in range(len(f) + 1):
                out.update(combinations(f, k))
        return frozenset(out)

    @cached_property
    def faces_by_size(self) -> tuple[tuple[Face, ...], ...]:
        """``faces_by_size[k]`` lists the faces with ``k`` vertices, sorted."""
        if self.is_void:
            return ()
        buckets: list[list[Face]] = [[] for _ in range(self.dim + 2)]
        for f in self._face_set:
            buckets[len(f)].append(f)
        return tuple(tuple(sorted(b)) for b in buckets)

    def faces(self) -> list[Face]:
        """All faces, smallest first and lexicographically within a size."""
        return [f for b in self.faces_by_size for f in b]

    def __contains__(self, face) -> bool:
        return _canon(face) in self._face_set

    def __len__(self):
        return len(self._face_set)

    @cached_property
    def f_vector(self) -> tuple[int, ...]:
        """``(f_{-1}, f_0, ..., f_dim)``: face counts by dimension."""
        return tuple(len(b) for b in self.faces_by_size)

    @property
    def is_pure(self) -> bool:
        return len({len(f) for f in self.facets}) <= 1

    def one_skeleton(self) -> "Graph":
        return Graph(self.vertices, [f for f in self.faces_by_size[2]]
                     if len(self.faces_by_size) > 2 else [])

    def is_flag(self) -> bool:
        return flag_complex(self.one_skeleton()) == self

    def relabel(self, mapping) -> "SimplicialComplex":
        return SimplicialComplex([[mapping[v] for v in f] for f in self.facets])


class Graph:
    """A simple undirected graph on non-negative integer vertices."""

    def __init__(self, vertices: Iterable[int], edges: Iterable[Sequence[int]]):
        self.vertices = tuple(sorted(set(int(v) for v in vertices)))
        vs = set(self.vertices)
        es = set()
        for e in edges:
            u, v = (int(x) for x in e)
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if u not in vs or v not in vs:
                raise UnknownVertex(f"edge {(u, v)} has an endpoint outside the vertex set")
            es.add((min(u, v), max(u, v)))
        self.edges = tuple(sorted(es))

    def __repr__(self):
        return f"Graph({list(self.vertices)}, {[list(e) for e in self.edges]})"

    def __eq__(self, other):
        return (isinstance(other, Graph) and self.vertices == other.vertices
                and self.edges == other.edges)

    def __hash__(self):
        return hash((self.vertices, self.edges))

    @cached_property
    def adjacency(self) -> dict[int, frozenset]:
        adj = {v: set() for v in self.vertices}
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return {v: frozenset(n) for v, n in adj.items()}

    def induced(self, W: Iterable[int]) -> "Graph":
        W = set(W)
        return Graph(W, [e for e in self.edges if e[0] in W and e[1] in W])

    def components(self) -> list[frozenset]:
        seen, out = set(), []
        for v in self.vertices:
            if v in seen:
                continue
            comp, stack = set(), [v]
            while stack:
                u = stack.pop()
                if u in comp:
                    continue
                comp.add(u)
                stack.extend(self.adjacency[u] - comp)
            seen |= comp
            out.append(frozenset(comp))
        return out

    def is_connected(self) -> bool:
        return len(self.components()) <= 1


# -- constructions ------------------------------------------------------------


def link(L: SimplicialComplex, sigma: Iterable[int]) -> SimplicialComplex:
    """``lk_L(sigma) = {tau : tau & sigma = {}, tau | sigma in L}``."""
    s = _canon(sigma)
    if s not in L:
        raise NotAFace(f"{list(s)} is not a face of the complex")
    ss = set(s)
    return SimplicialComplex(
        [tuple(v for v in f if v not in ss) for f in L.facets if ss <= set(f)])


def induced_subcomplex(L: SimplicialComplex, W: Iterable[int]) -> SimplicialComplex:
    W = set(W)
    missing = W - set(L.vertices)
    if missing:
        raise UnknownVertex(f"vertices {sorted(missing)} are not in the complex")
    return restrict(L, W)


def restrict(L: SimplicialComplex, W: Iterable[int]) -> SimplicialComplex:
    """Faces of ``L`` inside ``W``; vertices of ``W`` outside ``L`` are ignored."""
    if L.is_void:
        return L
    W = set(W)
    return SimplicialComplex([tuple(v for v in f if v in W) for f in L.facets])


def flag_complex(G: Graph) -> SimplicialComplex:
    """Clique complex of ``G``, found by Bron-Kerbosch with pivoting."""
    adj = G.adjacency
    cliques: list[tuple] = []

    def expand(r, p, x):
        if not p and not x:
            cliques.append(tuple(r))
            return
        pivot = max(p | x, key=lambda u: len(adj[u] & p))
        for v in sorted(p - adj[pivot]):
            expand(r + [v], p & adj[v], x & adj[v])
            p = p - {v}
            x = x | {v}

    if not G.vertices:
        return SimplicialComplex.empty_face()
    expand([], set(G.vertices), set())
    return SimplicialComplex(cliques)


def join(K1: SimplicialComplex, K2: SimplicialComplex) -> SimplicialComplex:
    if set(K1.vertices) & set(K2.vertices):
        raise OverlappingVertexSets("join needs disjoint vertex sets")
    return SimplicialComplex([a + b for a in K1.facets for b in K2.facets])


def cone(L: SimplicialComplex, apex: int | None = None) -> SimplicialComplex:
    if apex is None:
        apex = max(L.vertices, default=-1) + 1
    return join(L, SimplicialComplex([(apex,)]))


def alexander_dual(L: SimplicialComplex,
                   ambient: Iterable[int] | None = None) -> SimplicialComplex:
    """``L* = {sigma in 2^V : V - sigma not in L}`` on the ambient set ``V``."""
    V = tuple(sorted(set(ambient))) if ambient is not None else L.vertices
    if not set(L.vertices) <= set(V):
        raise UnknownVertex("the ambient set must contain every vertex of L")
    Vs = set(V)
    faces = []
    for k in range(len(V) + 1):
        for s in combinations(V, k):
            comp = tuple(sorted(Vs - set(s)))
            if comp not in L:
                faces.append(s)
    return SimplicialComplex(faces)


def compose(L: SimplicialComplex, Ks: Sequence[SimplicialComplex],
            ambient: Sequence[int] | None = None) -> SimplicialComplex:
    """The composition ``L o (K_1, ..., K_m)``.

    ``Ks[i]`` is attached to the i-th vertex of ``ambient`` (default: the
    vertices of ``L`` in increasing order).  The result is relabelled to
    ``0, 1, ..., N-1`` block by block; ``result.names`` maps each new label to
    ``(ambient vertex, original vertex in K_i)``.
    """
    V = tuple(ambient) if ambient is not None else L.vertices
    if len(Ks) != len(V):
        raise ArityMismatch(f"{len(V)} vertices but {len(Ks)} complexes")
    if not set(L.vertices) <= set(V):
        raise UnknownVertex("the ambient set must contain every vertex of L")
    seen: set[int] = set()
    for K in Ks:
        if not K.vertices:
            raise ValueError("each K_i needs at least one vertex")
        if seen & set(K.vertices):
            raise OverlappingVertexSets("the K_i must have disjoint vertex sets")
        seen |= set(K.vertices)
    names: dict[int, tuple[int, int]] = {}
    relabel: dict[tuple[int, int], int] = {}
    for v, K in zip(V, Ks):
        for u in K.vertices:
            relabel[(v, u)] = len(names)
            names[len(names)] = (v, u)
    block = dict(zip(V, Ks))
    facets = []
    for tau in L.facets:
        choices = [[tuple(relabel[(i, u)] for u in F) for F in block[i].facets]
                   for i in tau]
        for pick in product(*choices):
            facets.append(tuple(v for F in pick for v in F))
    out = SimplicialComplex(facets)
    out.names = names
    out.ambient = tuple(range(len(names)))
    return out


def simplicial_wedge(L: SimplicialComplex, J: Sequence[int]) -> SimplicialComplex:
    """``L(J)``: dual of ``L* o (Delta^{j_1 - 1}, ..., Delta^{j_m - 1})``."""
    V = L.vertices
    if len(J) != len(V):
        raise ArityMismatch(f"{len(V)} vertices but {len(J)} multiplicities")
    if any(int(j) < 1 for j in J):
        raise ValueError("wedge multiplicities must be positive")
    dual = alexander_dual(L, V)
    simplices, nxt = [], 0
    for j in J:
        simplices.append(SimplicialComplex.simplex(range(nxt, nxt + j)))
        nxt += j
    comp = compose(dual, simplices, ambient=V)
    out = alexander_dual(comp, comp.ambient)
    out.names = comp.names
    return out


def barycentric_subdivision(L: SimplicialComplex) -> SimplicialComplex:
    """Order complex of the nonempty faces; face ``i`` of ``L.faces()[1:]``
    becomes vertex ``i``."""
    L.require_nonvoid()
    faces = [f for f in L.faces() if f]
    index = {f: i for i, f in enumerate(faces)}
    chains = []

    def extend(chain):
        top = chain[-1]
        bigger = [f for f in faces if len(f) == len(top) + 1 and set(top) <= set(f)]
        if not bigger:
            chains.append(tuple(index[f] for f in chain))
        for f in bigger:
            extend(chain + [f])

    for f in faces:
        if len(f) == 1:
            extend([f])
    return SimplicialComplex(chains)
