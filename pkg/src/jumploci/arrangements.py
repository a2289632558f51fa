"""
Central hyperplane arrangements: column matroid circuits, the Orlik-Solomon
algebra, and Aomoto cohomology of the projective complement at a point.

Hyperplanes are numbered ``0..m-1`` by the columns of the defining matrix
(or by the order of the edges for a graphic arrangement).
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

from .algebra import (GradedAlgebraModel, aomoto_cohomology, exterior_algebra,
                      ideal_generated, quotient_model, random_scalar)
from .errors import JumpLociError, NotCentral, NotEssential, NotProjectivePoint
from .linalg import QQ, CoefficientField, Echelon, rank
from .verdicts import PropagationVerdict, pointwise_propagation


class Arrangement:
    """Arrangement of the hyperplanes ``ker(column_j)`` in ``k^{rows}``.

    ``constants`` (optional) are affine offsets; any nonzero offset makes the
    arrangement non-central, which the algebra constructions reject.
    """

    def __init__(self, matrix: Sequence[Sequence], constants: Sequence | None = None,
                 edges: Sequence[tuple] | None = None):
        rows = [[Fraction(x) if not isinstance(x, str) else Fraction(x.strip()) for x in r]
                for r in matrix]
        if not rows or not rows[0]:
            raise JumpLociError("an arrangement needs at least one hyperplane")
        if len({len(r) for r in rows}) != 1:
            raise JumpLociError("ragged defining matrix")
        self.matrix = rows
        self.constants = [Fraction(c) for c in constants] if constants is not None else None
        self.edges = tuple(edges) if edges is not None else None
        self.source_graph = None
        for j in range(self.size):
            if not any(r[j] for r in rows):
                raise JumpLociError(f"column {j} is zero and defines no hyperplane")

    @classmethod
    def graphic(cls, vertices: Iterable[int], edges: Sequence[Sequence[int]]) -> "Arrangement":
        """``x_i - x_j`` for each edge, in the given order, restricted to the
        quotient by the common kernel so the result is essential."""
        vs = sorted(set(vertices))
        pos = {v: i for i, v in enumerate(vs)}
        cols = []
        for u, v in edges:
            c = [0] * len(vs)
            c[pos[min(u, v)]] += 1
            c[pos[max(u, v)]] -= 1
            cols.append(c)
        full = [[cols[j][i] for j in range(len(cols))] for i in range(len(vs))]
        ech = Echelon(QQ)
        basis_rows = [r for r in full if ech.add({j: Fraction(x) for j, x in enumerate(r) if x})]
        out = cls(basis_rows, edges=[tuple(e) for e in edges])
        out.source_graph = (tuple(vs), tuple(tuple(e) for e in edges))
        return out

    @property
    def size(self) -> int:
        return len(self.matrix[0])

    @property
    def ambient_dim(self) -> int:
        return len(self.matrix)

    def column(self, j: int) -> list:
        return [r[j] for r in self.matrix]

    @cached_property
    def rank(self) -> int:
        return rank(self.matrix, QQ)

    @property
    def is_central(self) -> bool:
        return self.constants is None or not any(self.constants)

    @property
    def is_essential(self) -> bool:
        return self.rank == self.ambient_dim

    def subset_rank(self, S: Iterable[int]) -> int:
        return rank([self.column(j) for j in S], QQ)

    @cached_property
    def circuits(self) -> list[tuple]:
        return circuits(self)


def circuits(A: Arrangement) -> list[tuple]:
    """Minimal dependent sets of columns, by increasing size then lexicographically."""
    found: list[tuple] = []
    for r in range(1, A.rank + 2):
        for S in combinations(range(A.size), r):
            if any(set(C) <= set(S) for C in found):
                continue
            if A.subset_rank(S) < r:
                found.append(S)
    return found


def _boundary(C: tuple, E: GradedAlgebraModel, k: CoefficientField) -> tuple[int, dict]:
    p = len(C) - 1
    index = {S: i for i, S in enumerate(E.basis[p])}
    vec = {}
    for pos in range(len(C)):
        vec[index[C[:pos] + C[pos + 1:]]] = k.coerce(-1 if pos % 2 else 1)
    return p, vec


def orlik_solomon(A: Arrangement, k: CoefficientField) -> GradedAlgebraModel:
    """Central Orlik-Solomon algebra ``E / (boundary e_C : C circuit)``."""
    k.require_field()
    if not A.is_central:
        raise NotCentral("nonzero affine constants")
    if not A.is_essential:
        raise NotEssential(f"rank {A.rank} < ambient dimension {A.ambient_dim}")
    E = exterior_algebra(A.size, k)
    ideal = ideal_generated(E, [_boundary(C, E, k) for C in A.circuits])
    return quotient_model(E, ideal, "OS")


def nbc_sets(A: Arrangement) -> list[list[tuple]]:
    """Independent sets containing no broken circuit ``C - min(C)``, by size."""
    broken = [set(C[1:]) for C in A.circuits]
    out = []
    for r in range(A.rank + 1):
        out.append([S for S in combinations(range(A.size), r)
                    if A.subset_rank(S) == r and not any(b <= set(S) for b in broken)])
    return out


@dataclass
class ProjectiveModel:
    """An arrangement with its central OS algebra over a fixed field."""

    arrangement: Arrangement
    field: CoefficientField
    algebra: GradedAlgebraModel

    @classmethod
    def build(cls, A: Arrangement, k: CoefficientField) -> "ProjectiveModel":
        return cls(A, k, orlik_solomon(A, k))

    @property
    def projective_dim(self) -> int:
        return self.arrangement.rank - 1

    def projective_dims(self) -> list[int]:
        return deconed(self.algebra.dims, self.projective_dim)

    def resonance_at(self, a: Sequence) -> list[int]:
        a = self.algebra.coerce_point(a)
        f = self.field
        total = f.zero()
        for x in a:
            total = f.add(total, x)
        if total:
            raise NotProjectivePoint("coordinates must sum to zero")
        return deconed(aomoto_cohomology(self.algebra, a), self.projective_dim)


def deconed(central: Sequence[int], n: int) -> list[int]:
    """Split ``h_M^p = h_U^p + h_U^{p-1}`` and return ``h_U^0..h_U^n``."""
    out = []
    for p in range(n + 1):
        prev = out[p - 1] if p else 0
        out.append((central[p] if p < len(central) else 0) - prev)
    return out


def projective_resonance_at(A: Arrangement, a: Sequence, k: CoefficientField) -> list[int]:
    return ProjectiveModel.build(A, k).resonance_at(a)


def random_projective_point(rng: random.Random, m: int, k: CoefficientField) -> list:
    pts = [random_scalar(rng, k, nonzero=False) for _ in range(m - 1)]
    total = k.zero()
    for x in pts:
        total = k.add(total, x)
    return pts + [k.neg(total)]


def sample_propagation(A: Arrangement, points: Sequence[Sequence], k: CoefficientField,
                       model: ProjectiveModel | None = None) -> list[tuple[list[int], PropagationVerdict]]:
    """For each projective point, ``h^p != 0 => h^q != 0`` for ``p <= q <= n``."""
    model = model or ProjectiveModel.build(A, k)
    n = model.projective_dim
    out = []
    for a in points:
        h = model.resonance_at(a)
        bad = pointwise_propagation(h, 0, n)
        out.append((h, PropagationVerdict(bad is None, None if bad is None else (bad, list(map(str, a))))))
    return out
