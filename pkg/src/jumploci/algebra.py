"""
Graded quotients of exterior algebras: exterior Stanley-Reisner rings,
Orlik-Solomon style quotients, the Bestvina-Brady ring E/(J_L + (a)),
Aomoto complexes and a degree-bounded exactness check of the BGG complex.

Basis monomials are increasing tuples of generator indices ``0..m-1``.
Left multiplication by ``e_i`` sends ``e_S`` to
``(-1)^{#{s in S : s < i}} e_{S + i}``.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, combinations_with_replacement
from typing import Iterable, Sequence

from .errors import LengthMismatch, NotAcyclic
from .homology import reduced_homology
from .linalg import CoefficientField, Echelon, rank
from .simplicial import SimplicialComplex


def wedge_sign(i: int, S: Sequence[int]) -> int:
    return -1 if sum(1 for s in S if s < i) % 2 else 1


def insert(i: int, S: tuple) -> tuple:
    return tuple(sorted(S + (i,)))


@dataclass
class GradedAlgebraModel:
    """Finite graded algebra generated in degree one.

    ``basis[p]`` lists the degree-p basis monomials.  ``mult[p][j]`` is the
    matrix of left multiplication by the j-th generator ``A^p -> A^{p+1}``,
    stored as a list of sparse columns ``{row: coefficient}``.
    ``monomial`` is set when every product of basis monomials is plus or
    minus a basis monomial or zero (true for Stanley-Reisner rings), which
    makes all constructions graded by the support of the monomials.
    """

    field: CoefficientField
    ngens: int
    basis: list
    mult: list
    monomial: bool = False
    labels: tuple = ()
    name: str = ""

    @property
    def dims(self) -> list[int]:
        return [len(b) for b in self.basis]

    @property
    def socle_degree(self) -> int:
        nz = [p for p, b in enumerate(self.basis) if b]
        return nz[-1] if nz else -1

    def aomoto_differential(self, a: Sequence, p: int) -> list[dict]:
        """Sparse columns of ``a . : A^p -> A^{p+1}``."""
        f = self.field
        cols = [dict() for _ in self.basis[p]]
        if p + 1 >= len(self.basis):
            return cols
        for j, aj in enumerate(a):
            if not aj:
                continue
            for b, col in enumerate(self.mult[p][j]):
                tgt = cols[b]
                for r, v in col.items():
                    nv = f.add(tgt.get(r, f.zero()), f.mul(aj, v))
                    if nv:
                        tgt[r] = nv
                    else:
                        tgt.pop(r, None)
        return cols

    def coerce_point(self, a: Sequence) -> list:
        if len(a) != self.ngens:
            raise LengthMismatch(f"point has {len(a)} coordinates, algebra has {self.ngens} generators")
        return [self.field.coerce(x) for x in a]

    def check_square_zero(self) -> bool:
        """``e_i e_j + e_j e_i = 0`` and ``e_i e_i = 0`` on every basis element,
        which is equivalent to ``a . a = 0`` for all degree-one ``a``."""
        f = self.field
        for p in range(len(self.basis) - 2):
            for i in range(self.ngens):
                for j in range(i, self.ngens):
                    for b in range(len(self.basis[p])):
                        acc: dict = {}
                        for x, y in ((i, j), (j, i)) if i != j else ((i, i),):
                            for r, v in self.mult[p][y][b].items():
                                for r2, v2 in self.mult[p + 1][x][r].items():
                                    acc[r2] = f.add(acc.get(r2, f.zero()), f.mul(v, v2))
                        if any(acc.values()):
                            return False
        return True


def _monomial_model(basis_sets: list[list[tuple]], m: int, k: CoefficientField,
                    labels, name) -> GradedAlgebraModel:
    index = [{S: i for i, S in enumerate(b)} for b in basis_sets]
    mult = []
    for p in range(len(basis_sets) - 1):
        per_gen = []
        for j in range(m):
            cols = []
            for S in basis_sets[p]:
                col = {}
                if j not in S:
                    T = insert(j, S)
                    r = index[p + 1].get(T)
                    if r is not None:
                        col[r] = k.coerce(wedge_sign(j, S))
                cols.append(col)
            per_gen.append(cols)
        mult.append(per_gen)
    return GradedAlgebraModel(k, m, basis_sets, mult, True, tuple(labels), name)


def exterior_algebra(m: int, k: CoefficientField) -> GradedAlgebraModel:
    k.require_field()
    basis = [list(combinations(range(m), p)) for p in range(m + 1)]
    return _monomial_model(basis, m, k, range(m), f"E({m})")


def stanley_reisner_ring(L: SimplicialComplex, k: CoefficientField) -> GradedAlgebraModel:
    """Exterior face ring ``k<L>``: degree-p basis = the (p-1)-faces of L."""
    k.require_field()
    L.require_nonvoid()
    pos = {v: i for i, v in enumerate(L.vertices)}
    basis = [sorted(tuple(pos[v] for v in f) for f in b) for b in L.faces_by_size]
    return _monomial_model(basis, len(L.vertices), k, L.vertices, "SR")


def quotient_model(A: GradedAlgebraModel, ideal: list[list[dict]],
                   name: str = "") -> GradedAlgebraModel:
    """``A / I`` where ``ideal[p]`` spans ``I^p`` inside ``A^p`` (sparse vectors).

    ``I`` must be a two-sided ideal.  Pivots are taken on the
    lexicographically largest monomials first, so the surviving basis is the
    set of standard monomials; for Orlik-Solomon ideals this is the no-broken-
    circuit basis.
    """
    f = A.field
    echs, keep, new_index = [], [], []
    for p, b in enumerate(A.basis):
        order = sorted(range(len(b)), key=lambda i: b[i], reverse=True)
        col_of = {i: c for c, i in enumerate(order)}
        ech = Echelon(f)
        for v in (ideal[p] if p < len(ideal) else []):
            ech.add({col_of[i]: x for i, x in v.items() if x})
        standard = [i for i in range(len(b)) if col_of[i] not in ech.pivots]
        echs.append((ech, col_of, order))
        keep.append(standard)
        new_index.append({i: n for n, i in enumerate(standard)})
    basis = [[A.basis[p][i] for i in keep[p]] for p in range(len(A.basis))]
    while len(basis) > 1 and not basis[-1]:
        basis.pop()
    mult = []
    for p in range(len(basis) - 1):
        ech, col_of, order = echs[p + 1]
        per_gen = []
        for j in range(A.ngens):
            cols = []
            for i in keep[p]:
                img = A.mult[p][j][i]
                nf = ech.reduce({col_of[r]: v for r, v in img.items()})
                cols.append({new_index[p + 1][order[c]]: v for c, v in nf.items()})
            per_gen.append(cols)
        mult.append(per_gen)
    return GradedAlgebraModel(f, A.ngens, basis, mult, False, A.labels, name)


def ideal_generated(A: GradedAlgebraModel,
                    generators: Iterable[tuple[int, dict]]) -> list[list[dict]]:
    """Bases of ``I^p`` for the ideal generated by homogeneous elements
    ``(degree, sparse vector)``; ``I^{p+1} = gens + A^1 . I^p``."""
    f = A.field
    top = len(A.basis)
    incoming: list[list[dict]] = [[] for _ in range(top)]
    for p, v in generators:
        if p < top and v:
            incoming[p].append(v)
    layers = []
    for p in range(top):
        ech = Echelon(f)
        for v in incoming[p]:
            ech.add(dict(v))
        layer = [dict(r) for r in ech.pivots.values()]
        layers.append(layer)
        if p + 1 == top:
            break
        for v in layer:
            for j in range(A.ngens):
                img: dict = {}
                for i, x in v.items():
                    for r, y in A.mult[p][j][i].items():
                        img[r] = f.add(img.get(r, f.zero()), f.mul(x, y))
                img = {r: y for r, y in img.items() if y}
                if img:
                    incoming[p + 1].append(img)
    return layers


def aomoto_cohomology(A: GradedAlgebraModel, a: Sequence) -> list[int]:
    """``dim H^i(A, a.)`` for ``0 <= i <= socle degree``."""
    a = A.coerce_point(a)
    n = A.socle_degree
    ranks = [rank(A.aomoto_differential(a, p), A.field) for p in range(n)]
    return [A.dims[i] - (ranks[i] if i < n else 0) - (ranks[i - 1] if i > 0 else 0)
            for i in range(n + 1)]


def aomoto_homology_dual(A: GradedAlgebraModel, a: Sequence) -> list[int]:
    """Homology of the dual chain complex ``(A^*, a)``: the transposes of the
    Aomoto differentials, read in the opposite direction."""
    a = A.coerce_point(a)
    n = A.socle_degree
    ranks = []
    for p in range(n):
        cols = A.aomoto_differential(a, p)
        rows: dict[int, dict] = {}
        for c, col in enumerate(cols):
            for r, v in col.items():
                rows.setdefault(r, {})[c] = v
        ranks.append(rank(list(rows.values()), A.field))
    return [A.dims[i] - (ranks[i] if i < n else 0) - (ranks[i - 1] if i > 0 else 0)
            for i in range(n + 1)]


def resonance_membership(A: GradedAlgebraModel, a: Sequence, degree: int, depth: int = 1) -> bool:
    dims = aomoto_cohomology(A, a)
    return 0 <= degree < len(dims) and dims[degree] >= depth


def bb_quotient_ring(L: SimplicialComplex, k: CoefficientField) -> GradedAlgebraModel:
    """``B = E / (J_L + (a))`` with ``a = e_1 + ... + e_m``; requires L acyclic."""
    if not reduced_homology(L, k).is_acyclic():
        raise NotAcyclic("the complex has nonzero reduced homology")
    A = stanley_reisner_ring(L, k)
    one = k.one()
    a = [one] * A.ngens
    ideal = [[]]
    for p in range(len(A.basis) - 1):
        ideal.append([c for c in A.aomoto_differential(a, p) if c])
    return quotient_model(A, ideal, "BB")


# -- sampling -----------------------------------------------------------------


def random_scalar(rng: random.Random, k: CoefficientField, nonzero: bool = True):
    while True:
        if k.kind == "GF":
            x = rng.randrange(k.p)
        else:
            x = Fraction(rng.randint(-9, 9), rng.randint(1, 4))
        if x or not nonzero:
            return k.coerce(x)


def generic_point(rng: random.Random, m: int, support: Iterable[int],
                  k: CoefficientField) -> list:
    """Random point whose coordinates are nonzero exactly on ``support``."""
    S = set(support)
    return [random_scalar(rng, k) if i in S else k.zero() for i in range(m)]


def sample_points(m: int, k: CoefficientField, count: int, seed: int,
                  supports: Iterable[Iterable[int]] = ()) -> list[list]:
    """Seeded points: one generic point per requested support, then ``count``
    points with random support and random nonzero coordinates on it."""
    rng = random.Random(seed)
    pts = [generic_point(rng, m, s, k) for s in supports]
    for _ in range(count):
        supp = [i for i in range(m) if rng.random() < 0.6]
        pts.append(generic_point(rng, m, supp, k))
    return pts


# -- BGG ----------------------------------------------------------------------


@dataclass
class BGGReport:
    degree_bound: int
    socle_degree: int
    homology: dict = field(default_factory=dict)
    nonzero: list = field(default_factory=list)

    @property
    def vanishing(self) -> dict[int, bool]:
        out = {i: True for i in range(1, self.socle_degree + 1)}
        for t, i, _ in self.nonzero:
            out[i] = False
        return out

    @property
    def consistent_with_koszul(self) -> bool:
        return not self.nonzero

    def as_dict(self):
        return {
            "degree_bound": self.degree_bound,
            "socle_degree": self.socle_degree,
            "consistent_with_koszul_up_to_bound": self.consistent_with_koszul,
            "vanishing": {str(i): v for i, v in self.vanishing.items()},
            "nonzero_pieces": [{"internal_degree": t, "index": i, "dim": d}
                               for t, i, d in self.nonzero],
            "homology": {str(t): {str(i): d for i, d in row.items()}
                         for t, row in self.homology.items()},
        }


def _sym_monomials(m: int, d: int) -> list[tuple]:
    out = []
    for c in combinations_with_replacement(range(m), d):
        e = [0] * m
        for i in c:
            e[i] += 1
        out.append(tuple(e))
    return out


def bgg_complex_check(A: GradedAlgebraModel, degree_bound: int | None = None) -> BGGReport:
    """Homology of the graded pieces of ``L(P)``, ``P = A(-n)``, up to a bound.

    In internal degree ``t`` the complex has terms ``A^{n-i} (x) S_{t-i}`` in
    homological index ``i`` and differential ``b (x) s -> sum_j e_j b (x) x_j s``.
    All pieces with ``t <= degree_bound`` are computed; vanishing there is
    consistent with, but does not prove, a linear resolution.
    """
    n = A.socle_degree
    m = A.ngens
    D = n + m if degree_bound is None else degree_bound
    if D < 1:
        raise ValueError("degree bound must be at least 1")
    f = A.field
    supports = [[frozenset(S) for S in b] for b in A.basis] if A.monomial else None
    report = BGGReport(D, n)
    sym_cache: dict[int, list] = {}

    def sym(d):
        if d not in sym_cache:
            sym_cache[d] = _sym_monomials(m, d) if d >= 0 else []
        return sym_cache[d]

    for t in range(D + 1):
        # terms[i]: list of (basis index in A^{n-i}, monomial exponent)
        idx_range = [i for i in range(0, n + 1) if t - i >= 0]
        terms = {i: [(b, s) for b in range(len(A.basis[n - i])) for s in sym(t - i)]
                 for i in idx_range}

        def key(i, b, s):
            if supports is None:
                return None
            S = supports[n - i][b]
            return tuple(e - (1 if v in S else 0) for v, e in enumerate(s))

        ranks = {}
        for i in idx_range:
            if i == 0 or i - 1 not in terms:
                ranks[i] = 0
                continue
            tgt_index: dict = {}
            for pos, (b, s) in enumerate(terms[i - 1]):
                tgt_index[(b, s)] = pos
            blocks: dict = {}
            p = n - i
            for b, s in terms[i]:
                img: dict = {}
                for j in range(m):
                    col = A.mult[p][j][b] if p + 1 < len(A.basis) else {}
                    if not col:
                        continue
                    s2 = s[:j] + (s[j] + 1,) + s[j + 1:]
                    for r, v in col.items():
                        pos = tgt_index[(r, s2)]
                        img[pos] = f.add(img.get(pos, f.zero()), v)
                img = {c: v for c, v in img.items() if v}
                if img:
                    blocks.setdefault(key(i, b, s), []).append(img)
            ranks[i] = sum(rank(rows, f) for rows in blocks.values())
        row = {}
        for i in idx_range:
            h = len(terms[i]) - ranks[i] - ranks.get(i + 1, 0)
            row[i] = h
            if i != 0 and h:
                report.nonzero.append((t, i, h))
        report.homology[t] = row
    return report
