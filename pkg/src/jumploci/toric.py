"""
Closed-form cohomology jump loci of toric complexes T_L.

Both the resonance varieties ``R^i_d(T_L, k)`` and the characteristic
varieties ``V^i_d(T_L)`` are unions of coordinate subspaces ``k^W``
(respectively subtori ``(k*)^W``) over the vertex subsets ``W`` with

    sum over sigma in L_{V-W} of dim H~_{i-1-|sigma|}(lk_{L_W}(sigma), k) >= d,

where ``lk_{L_W}(sigma) = {tau subset W : tau + sigma in L}``.  This module
evaluates that sum for every ``W`` by brute force and keeps the maximal
qualifying subsets.
"""
from __future__ import annotations

import os
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Iterable

from .errors import VertexBudgetExceeded
from .homology import reduced_homology
from .linalg import CoefficientField
from .simplicial import Graph, SimplicialComplex, link, restrict
from .verdicts import PropagationVerdict

DEFAULT_VERTEX_CAP = 20
RESONANCE = "resonance"
CHARACTERISTIC = "characteristic"


def vertex_cap() -> int:
    return int(os.environ.get("JUMPLOCI_VERTEX_CAP", DEFAULT_VERTEX_CAP))


def _check_budget(n: int) -> None:
    cap = vertex_cap()
    if n > cap:
        raise VertexBudgetExceeded(
            f"{n} vertices exceed the subset enumeration cap of {cap} "
            "(set JUMPLOCI_VERTEX_CAP to raise it)")


def _subsets_by_decreasing_size(V: tuple) -> Iterable[frozenset]:
    for r in range(len(V), -1, -1):
        for W in combinations(V, r):
            yield frozenset(W)


@lru_cache(maxsize=256)
def link_sums(L: SimplicialComplex, k: CoefficientField) -> dict[frozenset, dict[int, int]]:
    """``sums[W][i]``: the link-homology sum above, for every ``W`` and degree."""
    k.require_field()
    L.require_nonvoid()
    _check_budget(len(L.vertices))
    links = {sigma: link(L, sigma) for sigma in L.faces()}
    out = {}
    for W in _subsets_by_decreasing_size(L.vertices):
        acc: dict[int, int] = {}
        for sigma, lk in links.items():
            if W.intersection(sigma):
                continue
            h = reduced_homology(restrict(lk, W), k)
            for q, b in h.betti.items():
                if b:
                    i = q + 1 + len(sigma)
                    acc[i] = acc.get(i, 0) + b
        out[W] = acc
    return out


def _maximal_sets(sets: Iterable[frozenset]) -> list[frozenset]:
    kept: list[frozenset] = []
    for W in sorted(sets, key=lambda s: (-len(s), sorted(s))):
        if not any(W <= K for K in kept):
            kept.append(W)
    return kept


@dataclass
class SubspaceArrangementLocus:
    """Jump loci as unions of coordinate subspaces (or subtori), by degree.

    ``layers[i]`` holds the maximal vertex subsets ``W``, as sorted tuples of
    vertex labels.  ``origin[i]`` records separately whether ``0`` (or the
    trivial character) lies in the degree-i locus.
    """

    kind: str
    depth: int
    field: CoefficientField
    vertices: tuple
    top_degree: int
    layers: dict = field(default_factory=dict)
    origin: dict = field(default_factory=dict)

    def contains_support(self, i: int, support: Iterable[int]) -> bool:
        """Is a point with this support (vertex labels with nonzero coordinate,
        or with character value different from 1) in the degree-i locus?"""
        S = set(support)
        return any(S <= set(W) for W in self.layers.get(i, ()))

    def contains_point(self, i: int, a) -> bool:
        if self.kind == RESONANCE:
            supp = [v for v, x in zip(self.vertices, a) if x]
        else:
            one = self.field.one()
            supp = [v for v, x in zip(self.vertices, a) if x != one]
        return self.contains_support(i, supp)

    def as_dict(self):
        return {
            "kind": self.kind,
            "depth": self.depth,
            "field": str(self.field),
            "vertices": list(self.vertices),
            "top_degree": self.top_degree,
            "layers": {str(i): [list(W) for W in ws] for i, ws in sorted(self.layers.items())},
            "origin": {str(i): v for i, v in sorted(self.origin.items())},
        }


def _locus(L: SimplicialComplex, k: CoefficientField, depth: int, kind: str):
    if depth < 1:
        raise ValueError("depth must be at least 1")
    sums = link_sums(L, k)
    top = L.dim + 1
    loc = SubspaceArrangementLocus(kind, depth, k, L.vertices, top)
    for i in range(0, top + 1):
        good = [W for W, acc in sums.items() if acc.get(i, 0) >= depth]
        loc.layers[i] = [tuple(sorted(W)) for W in _maximal_sets(good)]
        loc.origin[i] = sums[frozenset()].get(i, 0) >= depth
    return loc


def toric_resonance(L: SimplicialComplex, k: CoefficientField, depth: int = 1) -> SubspaceArrangementLocus:
    return _locus(L, k, depth, RESONANCE)


def toric_characteristic(L: SimplicialComplex, k: CoefficientField, depth: int = 1) -> SubspaceArrangementLocus:
    return _locus(L, k, depth, CHARACTERISTIC)


def aomoto_dimension_formula(L: SimplicialComplex, k: CoefficientField, support: Iterable[int]) -> dict[int, int]:
    """Closed-form ``dim H^i(k<L>, a)`` at a point whose support is ``support``."""
    return dict(link_sums(L, k)[frozenset(support)])


def raag_degree1(G: Graph) -> list[tuple]:
    """Maximal vertex subsets ``W`` whose induced subgraph is disconnected."""
    _check_budget(len(G.vertices))
    disconnected = [W for W in _subsets_by_decreasing_size(G.vertices)
                    if len(G.induced(W).components()) >= 2]
    return [tuple(sorted(W)) for W in _maximal_sets(disconnected)]


def check_propagation(locus: SubspaceArrangementLocus, top_degree: int | None = None) -> PropagationVerdict:
    """Every component of layer ``i`` lies in a component of layer ``i + 1``,
    for ``0 <= i < top_degree``.  For coordinate subspaces (subtori) this
    inclusion test is exact."""
    top = locus.top_degree if top_degree is None else top_degree
    for i in range(0, top):
        nxt = [set(W) for W in locus.layers.get(i + 1, ())]
        for W in locus.layers.get(i, ()):
            if not any(set(W) <= N for N in nxt):
                return PropagationVerdict(False, (i, W))
    return PropagationVerdict(True)
