"""Reduced simplicial homology over Z, Q or GF(p)."""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import lru_cache

from .linalg import CoefficientField, rank, smith_normal_form
from .simplicial import SimplicialComplex


@dataclass(frozen=True)
class HomologyProfile:
    """Reduced homology in degrees ``-1 .. dim``.

    ``betti[q]`` is the free rank (or the dimension over a field) of
    ``H~_q``; ``torsion[q]`` lists its invariant factors greater than one and
    is always empty over a field.
    """

    coefficients: CoefficientField
    betti: dict = dc_field(default_factory=dict)
    torsion: dict = dc_field(default_factory=dict)

    def rank(self, q: int) -> int:
        return self.betti.get(q, 0)

    def torsion_in(self, q: int) -> tuple:
        return self.torsion.get(q, ())

    def is_zero(self, q: int) -> bool:
        return self.rank(q) == 0 and not self.torsion_in(q)

    def nonzero_degrees(self) -> list[int]:
        return sorted(q for q in set(self.betti) | set(self.torsion) if not self.is_zero(q))

    def is_acyclic(self) -> bool:
        return not self.nonzero_degrees()

    def as_dict(self) -> dict:
        return {str(q): {"betti": self.rank(q), "torsion": list(self.torsion_in(q))}
                for q in sorted(self.betti)}


def boundary_matrix(L: SimplicialComplex, q: int) -> list[dict]:
    """Columns of the augmented boundary map ``C_q -> C_{q-1}`` as sparse dicts.

    Chains in degree ``q`` are the faces with ``q + 1`` vertices; degree
    ``-1`` is spanned by the empty face, so ``C_0 -> C_{-1}`` is augmentation.
    """
    fs = L.faces_by_size
    if q < 0 or q + 1 >= len(fs):
        return []
    lower = {f: i for i, f in enumerate(fs[q])}
    cols = []
    for f in fs[q + 1]:
        col = {}
        for k in range(len(f)):
            col[lower[f[:k] + f[k + 1:]]] = -1 if k % 2 else 1
        cols.append(col)
    return cols


def _dense(cols: list[dict], nrows: int) -> list[list[int]]:
    out = [[0] * len(cols) for _ in range(nrows)]
    for j, col in enumerate(cols):
        for i, v in col.items():
            out[i][j] = v
    return out


@lru_cache(maxsize=65536)
def reduced_homology(L: SimplicialComplex, k: CoefficientField) -> HomologyProfile:
    L.require_nonvoid()
    fs = L.faces_by_size
    top = L.dim
    ranks, divisors = {}, {}
    for q in range(0, top + 1):
        cols = boundary_matrix(L, q)
        if k.kind == "Z":
            r, d = smith_normal_form(_dense(cols, len(fs[q])))
            ranks[q], divisors[q] = r, tuple(x for x in d if x > 1)
        else:
            ranks[q] = rank(cols, k)
    betti, torsion = {}, {}
    for q in range(-1, top + 1):
        betti[q] = len(fs[q + 1]) - ranks.get(q, 0) - ranks.get(q + 1, 0)
        t = divisors.get(q + 1, ())
        if t:
            torsion[q] = t
    return HomologyProfile(k, betti, torsion)


def euler_characteristic(L: SimplicialComplex) -> int:
    """Reduced Euler characteristic ``sum_q (-1)^q f_q`` with ``f_{-1} = 1``."""
    return sum((-1) ** (i - 1) * n for i, n in enumerate(L.f_vector))
