"""
Cohen-Macaulay certification for simplicial complexes, and the verdicts it
implies for toric complexes T_L and Bestvina-Brady groups.

For a toric complex the three properties "L is Cohen-Macaulay over k",
"T_L is an abelian duality space over k" and "H*(T_L, k) has the EPY
property" are equivalent, so a single link computation decides all three.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Optional

from .errors import PreconditionNotCertified
from .homology import HomologyProfile, reduced_homology
from .linalg import CoefficientField
from .simplicial import Graph, SimplicialComplex, flag_complex, link

TORIC_THEOREMS = (
    "L Cohen-Macaulay over k <=> T_L abelian duality space of dimension dim L + 1",
    "L Cohen-Macaulay over k <=> H*(T_L, k) has the EPY property",
)
BB_THEOREM = "N_Gamma abelian duality group <=> flag complex acyclic and Cohen-Macaulay"


@dataclass(frozen=True)
class Witness:
    face: tuple
    degree: Optional[int]
    reason: str

    def as_dict(self):
        return {"face": list(self.face), "degree": self.degree, "reason": self.reason}


@dataclass
class CMCertificate:
    dimension: int
    coefficients: CoefficientField
    verdict: bool
    pure: bool
    witnesses: list = field(default_factory=list)
    table: dict = field(default_factory=dict)
    complete: bool = False

    def as_dict(self):
        return {
            "dimension": self.dimension,
            "field": str(self.coefficients),
            "cohen_macaulay": self.verdict,
            "pure": self.pure,
            "witnesses": [w.as_dict() for w in self.witnesses],
            "complete_table": self.complete,
            "links": [{"face": list(s), "expected_degree": self.dimension - len(s),
                       "homology": h.as_dict()} for s, h in self.table.items()],
        }


def _violations(h: HomologyProfile, expected: int, sigma) -> list[Witness]:
    out = []
    for q in h.nonzero_degrees():
        if q != expected:
            what = f"rank {h.rank(q)}" if h.rank(q) else f"torsion {list(h.torsion_in(q))}"
            out.append(Witness(sigma, q, f"reduced homology in degree {q} ({what})"))
        elif h.torsion_in(q):
            out.append(Witness(sigma, q, f"torsion {list(h.torsion_in(q))} in degree {q}"))
    return out


def is_cohen_macaulay(L: SimplicialComplex, k: CoefficientField,
                      full_table: bool = False) -> CMCertificate:
    """Decide whether every link ``lk(sigma)`` has reduced homology
    concentrated in degree ``dim L - |sigma|`` (torsion-free over Z).

    Faces are scanned smallest first, lexicographically within a size, so the
    first witness is deterministic.  Without ``full_table`` the scan stops at
    the first violation.
    """
    L.require_nonvoid()
    n = L.dim
    if not L.is_pure:
        sizes = sorted({len(f) for f in L.facets})
        small = next(f for f in L.facets if len(f) == sizes[0])
        return CMCertificate(n, k, False, False, [Witness(
            small, None, f"not pure: facet sizes {sizes[0]} and {sizes[-1]}")])
    cert = CMCertificate(n, k, True, True, complete=True)
    for sigma in L.faces():
        h = reduced_homology(link(L, sigma), k)
        cert.table[sigma] = h
        bad = _violations(h, n - len(sigma), sigma)
        if bad:
            cert.verdict = False
            cert.witnesses.extend(bad)
            if not full_table:
                cert.complete = False
                break
    return cert


@dataclass
class BettiBounds:
    betti: tuple
    binomials: tuple
    margins: tuple
    lower_bounds_hold: bool
    positive: bool
    first_betti_ok: bool

    @property
    def passed(self) -> bool:
        return self.lower_bounds_hold and self.positive and self.first_betti_ok

    def as_dict(self):
        return {"betti": list(self.betti), "binomials": list(self.binomials),
                "margins": list(self.margins), "passed": self.passed,
                "lower_bounds_hold": self.lower_bounds_hold,
                "positive": self.positive, "first_betti_ok": self.first_betti_ok}


def betti_bounds_check(L: SimplicialComplex, k: CoefficientField,
                       certificate: CMCertificate | None = None) -> BettiBounds:
    """Betti number inequalities forced on ``T_L`` by the EPY property.

    With ``b_p(T_L) = f_{p-1}(L)`` and ``N = dim L + 1`` this checks
    ``b_p >= C(N, p)``, ``b_p > 0`` for ``0 <= p <= N`` and ``b_1 >= N``.
    """
    if certificate is None:
        certificate = is_cohen_macaulay(L, k)
    if not certificate.verdict:
        raise PreconditionNotCertified("betti bounds need a Cohen-Macaulay certificate")
    N = L.dim + 1
    betti = tuple(L.f_vector)
    binom = tuple(comb(N, p) for p in range(N + 1))
    margins = tuple(b - c for b, c in zip(betti, binom))
    return BettiBounds(betti, binom, margins,
                       all(m >= 0 for m in margins),
                       all(b > 0 for b in betti),
                       N == 0 or betti[1] >= N)


@dataclass
class DualityVerdict:
    abelian_duality: bool
    epy: bool
    dimension: Optional[int]
    basis: CMCertificate
    implications: tuple = TORIC_THEOREMS
    betti_bounds: Optional[BettiBounds] = None
    acyclic: Optional[bool] = None
    cohen_macaulay: Optional[bool] = None

    def as_dict(self):
        out = {"abelian_duality": self.abelian_duality, "epy": self.epy,
               "dimension": self.dimension, "implications": list(self.implications),
               "certificate": self.basis.as_dict()}
        if self.betti_bounds is not None:
            out["betti_bounds"] = self.betti_bounds.as_dict()
        if self.acyclic is not None:
            out["acyclic"] = self.acyclic
            out["cohen_macaulay"] = self.cohen_macaulay
        return out


def certify_toric(L: SimplicialComplex, k: CoefficientField,
                  full_table: bool = False) -> DualityVerdict:
    cert = is_cohen_macaulay(L, k, full_table=full_table)
    v = cert.verdict
    bounds = betti_bounds_check(L, k, cert) if v else None
    return DualityVerdict(v, v, L.dim + 1 if v else None, cert, betti_bounds=bounds)


def certify_bestvina_brady(G: Graph, k: CoefficientField,
                           full_table: bool = False) -> DualityVerdict:
    delta = flag_complex(G)
    acyclic = reduced_homology(delta, k).is_acyclic()
    cert = is_cohen_macaulay(delta, k, full_table=full_table)
    v = acyclic and cert.verdict
    return DualityVerdict(v, v, delta.dim if v else None, cert,
                          implications=(BB_THEOREM,), acyclic=acyclic,
                          cohen_macaulay=cert.verdict)
