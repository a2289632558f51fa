"""
Exact linear algebra over the integers, the rationals and prime fields.

Everything here works on plain Python integers and ``fractions.Fraction``;
there is no floating point anywhere.  Matrices are lists of rows.  Internally
rows are stored sparsely as ``{column: value}`` dictionaries since almost all
matrices met in this package (boundary maps, multiplication maps, Fox
Jacobians) are very sparse.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

from .errors import IntegerCoefficientsUnsupported, JumpLociError, NotAComplex

_GF_RE = re.compile(r"^\s*GF\(\s*(\d+)\s*\)\s*$")


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class CoefficientField:
    """Coefficient ring tag: ``"Z"``, ``"Q"`` or ``"GF"`` with a prime ``p``.

    Despite the name, the integers are allowed here; they select the Smith
    normal form code paths instead of field ranks.
    """

    kind: str
    p: int = 0

    def __post_init__(self):
        if self.kind not in ("Z", "Q", "GF"):
            raise JumpLociError(f"unknown coefficient kind {self.kind!r}")
        if self.kind == "GF" and not _is_prime(self.p):
            raise JumpLociError(f"GF({self.p}): {self.p} is not prime")
        if self.kind != "GF" and self.p != 0:
            raise JumpLociError("only prime fields carry a characteristic")

    @classmethod
    def parse(cls, text: str) -> "CoefficientField":
        text = text.strip()
        if text in ("Z", "ZZ"):
            return ZZ
        if text in ("Q", "QQ"):
            return QQ
        m = _GF_RE.match(text)
        if m:
            return cls("GF", int(m.group(1)))
        raise JumpLociError(f"cannot parse coefficient field {text!r}; use Q, Z or GF(p)")

    def __str__(self):
        return f"GF({self.p})" if self.kind == "GF" else self.kind

    @property
    def is_field(self) -> bool:
        return self.kind != "Z"

    @property
    def characteristic(self) -> int:
        return self.p

    def require_field(self) -> None:
        if not self.is_field:
            raise IntegerCoefficientsUnsupported(
                "this operation needs a field (Q or GF(p)), not Z")

    # -- scalar arithmetic -------------------------------------------------

    def coerce(self, x):
        """Convert an int, Fraction or string like ``"3/4"`` into this ring."""
        if isinstance(x, str):
            x = Fraction(x.strip())
        if self.kind == "Z":
            if isinstance(x, Fraction):
                if x.denominator != 1:
                    raise JumpLociError(f"{x} is not an integer")
                return x.numerator
            return int(x)
        if self.kind == "Q":
            return Fraction(x)
        x = Fraction(x)
        den = x.denominator % self.p
        if den == 0:
            raise JumpLociError(f"{x} has no image in GF({self.p})")
        return x.numerator * pow(den, -1, self.p) % self.p

    def zero(self):
        return Fraction(0) if self.kind == "Q" else 0

    def one(self):
        return Fraction(1) if self.kind == "Q" else 1

    def add(self, a, b):
        return (a + b) % self.p if self.kind == "GF" else a + b

    def sub(self, a, b):
        return (a - b) % self.p if self.kind == "GF" else a - b

    def mul(self, a, b):
        return a * b % self.p if self.kind == "GF" else a * b

    def neg(self, a):
        return -a % self.p if self.kind == "GF" else -a

    def inv(self, a):
        if self.kind == "GF":
            return pow(a, -1, self.p)
        if self.kind == "Q":
            return 1 / Fraction(a)
        if a in (1, -1):
            return a
        raise ZeroDivisionError(f"{a} is not a unit in Z")

    def power(self, a, e: int):
        if e < 0:
            a, e = self.inv(a), -e
        return pow(a, e, self.p) if self.kind == "GF" else a ** e

    def to_str(self, a) -> str:
        return str(a)


ZZ = CoefficientField("Z")
QQ = CoefficientField("Q")


def GF(p: int) -> CoefficientField:
    return CoefficientField("GF", p)


# -- sparse row echelon -------------------------------------------------------


class Echelon:
    """Incrementally maintained row echelon form over a field.

    Rows are added one at a time; ``add`` reports whether the row was
    independent of the rows seen so far.  Pivot rows are normalised to have
    leading coefficient one and are kept fully reduced against each other, so
    ``reduce`` returns a canonical normal form modulo the row space.
    """

    def __init__(self, field: CoefficientField):
        field.require_field()
        self.field = field
        self.pivots: dict[int, dict] = {}

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def reduce(self, row: dict) -> dict:
        f = self.field
        row = {c: v for c, v in row.items() if v}
        if not self.pivots:
            return row
        done = set()
        while True:
            todo = [c for c in row if c in self.pivots and c not in done]
            if not todo:
                return row
            c = min(todo)
            coef = row[c]
            for cc, pv in self.pivots[c].items():
                nv = f.sub(row.get(cc, 0), f.mul(coef, pv))
                if nv:
                    row[cc] = nv
                else:
                    row.pop(cc, None)
            done.add(c)

    def add(self, row: dict) -> bool:
        f = self.field
        row = self.reduce(row)
        if not row:
            return False
        lead = min(row)
        inv = f.inv(row[lead])
        row = {c: f.mul(v, inv) for c, v in row.items()}
        # keep older pivot rows reduced against the new pivot
        for other in self.pivots.values():
            coef = other.get(lead)
            if coef:
                for cc, pv in row.items():
                    nv = f.sub(other.get(cc, 0), f.mul(coef, pv))
                    if nv:
                        other[cc] = nv
                    else:
                        other.pop(cc, None)
        self.pivots[lead] = row
        return True


def to_sparse(rows: Iterable[Sequence]) -> list[dict]:
    return [{j: v for j, v in enumerate(r) if v} for r in rows]


def rank(matrix, field: CoefficientField) -> int:
    """Rank of a matrix given as dense rows or sparse ``{col: val}`` rows.

    Over ``Z`` the rank is the rank over ``Q``.
    """
    if field.kind == "Z":
        field = QQ
    ech = Echelon(field)
    for r in matrix:
        if not isinstance(r, dict):
            r = {j: v for j, v in enumerate(r) if v}
        ech.add({j: field.coerce(v) for j, v in r.items()})
    return ech.rank


def matmul(a: Sequence[Sequence], b: Sequence[Sequence], field: CoefficientField):
    """Dense product ``a @ b``; ``a`` is p x q, ``b`` is q x r."""
    if not a:
        return []
    q = len(a[0])
    r = len(b[0]) if b else 0
    out = []
    for row in a:
        acc = [field.zero()] * r
        for k in range(q):
            x = row[k]
            if x:
                bk = b[k]
                for j in range(r):
                    if bk[j]:
                        acc[j] = field.add(acc[j], field.mul(x, bk[j]))
        out.append(acc)
    return out


def transpose(m: Sequence[Sequence], ncols: int | None = None) -> list[list]:
    if not m:
        return [[] for _ in range(ncols or 0)]
    return [list(col) for col in zip(*m)]


def is_zero_matrix(m) -> bool:
    return all(not v for row in m for v in row)


def cochain_cohomology(deltas: Sequence, dims: Sequence[int],
                       field: CoefficientField, check: bool = True) -> list[int]:
    """Cohomology dimensions of ``C^0 -> C^1 -> ... -> C^n``.

    ``dims[i]`` is the dimension of ``C^i`` and ``deltas[i]`` the matrix of
    ``C^i -> C^{i+1}`` acting on column vectors, so it has ``dims[i+1]`` rows
    and ``dims[i]`` columns.  Over ``Z`` this returns free ranks only.
    """
    if len(deltas) != max(len(dims) - 1, 0):
        raise NotAComplex("need exactly one differential between consecutive terms")
    for i, d in enumerate(deltas):
        if len(d) != dims[i + 1] or any(len(r) != dims[i] for r in d):
            raise NotAComplex(f"differential {i} has the wrong shape")
    if check:
        ring = QQ if field.kind == "Z" else field
        for i in range(len(deltas) - 1):
            if dims[i] and dims[i + 2] and not is_zero_matrix(
                    matmul(deltas[i + 1], deltas[i], ring)):
                raise NotAComplex(f"delta^{i + 1} * delta^{i} != 0")
    ranks = [rank(d, field) for d in deltas]
    out = []
    for i, n in enumerate(dims):
        r_out = ranks[i] if i < len(ranks) else 0
        r_in = ranks[i - 1] if i > 0 else 0
        out.append(n - r_out - r_in)
    return out


# -- Smith normal form ----------------------------------------------------------


def smith_normal_form(matrix: Sequence[Sequence[int]]) -> tuple[int, list[int]]:
    """Rank and invariant factors ``d1 | d2 | ... | dr`` of an integer matrix.

    Elimination pivots on the entry of least absolute value in the remaining
    block, which keeps intermediate entries small on boundary matrices.
    """
    a = [[int(v) for v in row] for row in matrix]
    nrows = len(a)
    ncols = len(a[0]) if a else 0
    diag: list[int] = []
    t = 0
    while t < min(nrows, ncols):
        best = None
        for i in range(t, nrows):
            row = a[i]
            for j in range(t, ncols):
                v = row[j]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, j)
                    if best[0] == 1:
                        break
            if best is not None and best[0] == 1:
                break
        if best is None:
            break
        _, i, j = best
        a[t], a[i] = a[i], a[t]
        if j != t:
            for row in a:
                row[t], row[j] = row[j], row[t]
        while True:
            p = a[t][t]
            dirty = False
            for i in range(t + 1, nrows):
                v = a[i][t]
                if v:
                    q = v // p
                    if q:
                        rt, ri = a[t], a[i]
                        for j in range(t, ncols):
                            if rt[j]:
                                ri[j] -= q * rt[j]
                    if a[i][t]:
                        dirty = True
            rt = a[t]
            for j in range(t + 1, ncols):
                v = rt[j]
                if v:
                    q = v // p
                    if q:
                        for row in a[t:]:
                            if row[t]:
                                row[j] -= q * row[t]
                    if rt[j]:
                        dirty = True
            if not dirty:
                break
            # move the smallest remaining entry of row/column t into the pivot
            cands = [(abs(a[i][t]), i, t) for i in range(t, nrows) if a[i][t]]
            cands += [(abs(a[t][j]), t, j) for j in range(t, ncols) if a[t][j]]
            _, i, j = min(cands)
            a[t], a[i] = a[i], a[t]
            if j != t:
                for row in a:
                    row[t], row[j] = row[j], row[t]
        diag.append(abs(a[t][t]))
        t += 1
    # diag(a, b) ~ diag(gcd, lcm) restores the divisibility chain
    for i in range(len(diag)):
        for j in range(i + 1, len(diag)):
            g = gcd(diag[i], diag[j])
            if g != diag[i]:
                diag[i], diag[j] = g, diag[i] * diag[j] // g
    return len(diag), diag
