"""
The acceptance suite: eight end-to-end checks over the bundled corpus.

Each criterion returns a ``CriterionResult`` with a pass flag, a JSON-ready
detail record and its wall-clock time.  A criterion whose checks all hold
but which overruns its time limit is reported as failed.
"""
from __future__ import annotations

import random
import time
import warnings
from dataclasses import dataclass, field
from math import comb
from typing import Callable

from .algebra import (aomoto_cohomology, aomoto_homology_dual, bgg_complex_check,
                      sample_points, stanley_reisner_ring)
from .arrangements import ProjectiveModel, random_projective_point
from .cm import betti_bounds_check, is_cohen_macaulay
from .corpus import CM_COMPLEXES, load_corpus
from .errors import NegativeEulerCharacteristic
from .fox import (Character, chi_propagation_check, fundamental_identity_holds,
                  sample_characters, twisted_cohomology, twisted_homology)
from .linalg import GF, QQ, CoefficientField, rank, smith_normal_form
from .simplicial import alexander_dual, flag_complex
from .toric import check_propagation, toric_characteristic, toric_resonance

DEFAULT_SEED = 20240601


@dataclass
class CriterionResult:
    number: int
    name: str
    tags: tuple
    passed: bool
    limit: float | None
    seconds: float = 0.0
    checks: dict = field(default_factory=dict)

    @property
    def within_limit(self) -> bool:
        return self.limit is None or self.seconds < self.limit

    @property
    def ok(self) -> bool:
        return self.passed and self.within_limit

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        limit = f" (limit {self.limit:g} s)" if self.limit is not None else ""
        return f"[{status}] criterion {self.number}: {self.name}: {self.seconds:.2f} s{limit}"

    def as_dict(self) -> dict:
        return {"criterion": self.number, "name": self.name, "passed": self.passed,
                "limit_seconds": self.limit, "checks": self.checks}


def _complexes(corpus):
    return {n: d.obj for n, d in corpus.items() if d.kind == "complex"}


def cm_characteristic(corpus, seed) -> tuple[bool, dict]:
    L = corpus["rp2_flag"].obj
    expected = {"Q": True, "GF(3)": True, "GF(2)": False, "Z": False}
    checks = {}
    ok = L.is_flag()
    for name, want in expected.items():
        cert = is_cohen_macaulay(L, CoefficientField.parse(name))
        w = cert.witnesses[0] if cert.witnesses else None
        good = cert.verdict == want
        if not want:
            good = good and w is not None and w.face == () and w.degree == 1
        checks[name] = {"cohen_macaulay": cert.verdict, "expected": want,
                        "witness": w.as_dict() if w else None}
        ok = ok and good
    checks["flag"] = L.is_flag()
    return ok, checks


def toric_failure(corpus, seed) -> tuple[bool, dict]:
    L = flag_complex(corpus["graph_two_cliques"].obj)
    loc = toric_resonance(L, QQ, 1)
    verdict = check_propagation(loc)
    ok = (loc.layers[1] == [(1, 2, 3, 4)] and loc.layers[2] == [(1, 2), (3, 4)]
          and not verdict.propagates and verdict.first_failure[0] == 1)
    return ok, {"layers": loc.as_dict()["layers"], "propagation": verdict.as_dict()}


def oracle_agreement(corpus, seed) -> tuple[bool, dict]:
    small = {n: L for n, L in _complexes(corpus).items() if len(L.vertices) <= 6}
    checks = {"complexes": len(small), "mismatches": []}
    points_total = 0
    for fname, k in (("Q", QQ), ("GF(2)", GF(2))):
        for name, L in sorted(small.items()):
            A = stanley_reisner_ring(L, k)
            loci = {d: toric_resonance(L, k, d) for d in (1, 2)}
            supports = sorted({tuple(L.vertices.index(v) for v in W)
                               for loc in loci.values() for ws in loc.layers.values()
                               for W in ws})
            pts = sample_points(len(L.vertices), k, 10, seed, supports)
            points_total += len(pts)
            for a in pts:
                dims = aomoto_cohomology(A, a)
                for i in range(L.dim + 2):
                    h = dims[i] if i < len(dims) else 0
                    for d, loc in loci.items():
                        if (h >= d) != loc.contains_point(i, a):
                            checks["mismatches"].append(
                                {"field": fname, "complex": name, "degree": i, "depth": d,
                                 "point": [k.to_str(x) for x in a], "aomoto": h})
    checks["points"] = points_total
    return len(small) >= 20 and not checks["mismatches"], checks


def cm_propagation(corpus, seed) -> tuple[bool, dict]:
    ok = True
    checks = {}
    certified = []
    for name, L in sorted(_complexes(corpus).items()):
        if len(L.vertices) > 6:
            continue
        cert = is_cohen_macaulay(L, QQ)
        if not cert.verdict:
            continue
        certified.append(name)
        n = L.dim + 1
        res = check_propagation(toric_resonance(L, QQ, 1))
        char = check_propagation(toric_characteristic(L, QQ, 1))
        bounds = betti_bounds_check(L, QQ, cert)
        binom_ok = all(b >= comb(n, p) for p, b in enumerate(bounds.betti))
        good = res.propagates and char.propagates and bounds.passed and binom_ok
        checks[name] = {"resonance": res.propagates, "characteristic": char.propagates,
                        "betti": list(bounds.betti), "bounds": bounds.passed}
        ok = ok and good
    missing = [n for n in CM_COMPLEXES if n not in certified]
    checks["missing_required"] = missing
    return ok and not missing, checks


def arrangement_points(corpus, seed) -> tuple[bool, dict]:
    A = corpus["square_triangle"].obj
    model = ProjectiveModel.build(A, QQ)
    n = model.projective_dim
    h_a = model.resonance_at([0, 0, 0, 1, 1, -2])
    h_b = model.resonance_at([1, -1, 1, -1, 0, 0])
    ok = n == 3 and all(h_a[p] >= 1 for p in (1, 2, 3))
    ok = ok and h_b[1] == 0 and h_b[2] >= 1 and h_b[3] >= 1
    rng = random.Random(seed)
    failures = []
    for h, pt in ((h_a, "P_1|2|3|456"), (h_b, "P_1234|5|6")):
        if any(h[p] and not h[q] for p in range(n + 1) for q in range(p, n + 1)):
            failures.append(pt)
    for _ in range(50):
        a = random_projective_point(rng, A.size, QQ)
        h = model.resonance_at(a)
        if any(h[p] and not h[q] for p in range(n + 1) for q in range(p, n + 1)):
            failures.append([str(x) for x in a])
    return ok and not failures, {"h_triangle_point": h_a, "h_square_point": h_b,
                                 "random_points": 50, "propagation_failures": failures}


def fox_examples(corpus, seed) -> tuple[bool, dict]:
    g2 = corpus["genus2"].obj
    ex = corpus["one_relator"].obj
    Y = corpus["one_relator_wedge"].obj
    h_g2 = twisted_cohomology(g2, Character.make(g2, [2, 1, 1, 1], QQ))
    h_52 = twisted_cohomology(ex, Character.make(ex, [5, 2], QQ))
    h_33 = twisted_cohomology(ex, Character.make(ex, [3, 3], QQ))
    rho_y = Character.make(Y, [1, 3, 1], QQ)
    h_y = twisted_cohomology(Y, rho_y)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", NegativeEulerCharacteristic)
        verdict = chi_propagation_check(Y, [rho_y])
    ok = (h_g2 == (0, 2, 0) and h_52[1] >= 1 and h_52[2] >= 1 and h_33 == (0, 0, 0)
          and h_y[1] >= 1 and h_y[2] == 0 and not verdict.propagates)
    return ok, {"genus2": list(h_g2), "ex_5_2": list(h_52), "ex_3_3": list(h_33),
                "wedge": list(h_y), "wedge_propagation": verdict.as_dict()}


def bgg_both_ways(corpus, seed) -> tuple[bool, dict]:
    octa = bgg_complex_check(stanley_reisner_ring(corpus["octahedron"].obj, QQ), 6)
    edges = bgg_complex_check(stanley_reisner_ring(corpus["two_edges"].obj, QQ), 6)
    ok = octa.consistent_with_koszul and not edges.consistent_with_koszul
    return ok, {"octahedron_nonzero": octa.nonzero, "two_edges_nonzero": edges.nonzero[:5]}


def property_suites(corpus, seed) -> tuple[bool, dict]:
    checks = {}
    # Fox fundamental identity and chain/cochain duality
    fox_ok = dual_ok = True
    for name, doc in sorted(corpus.items()):
        if doc.kind != "presentation":
            continue
        P = doc.obj
        chars = sample_characters(P, QQ, 20, seed)
        fox_ok = fox_ok and len(chars) == 20
        for rho in chars:
            fox_ok = fox_ok and fundamental_identity_holds(P, rho)
            dual_ok = dual_ok and twisted_cohomology(P, rho) == twisted_homology(P, rho.inverse())
    checks["fox_fundamental_identity"] = fox_ok
    checks["chain_cochain_duality"] = dual_ok
    # Aomoto complexes
    aomoto_ok = True
    for name, L in sorted(_complexes(corpus).items()):
        if len(L.vertices) > 6:
            continue
        A = stanley_reisner_ring(L, QQ)
        chi = sum((-1) ** p * d for p, d in enumerate(A.dims))
        aomoto_ok = aomoto_ok and A.check_square_zero()
        for a in sample_points(A.ngens, QQ, 5, seed):
            h = aomoto_cohomology(A, a)
            aomoto_ok = aomoto_ok and sum((-1) ** p * x for p, x in enumerate(h)) == chi
            aomoto_ok = aomoto_ok and aomoto_homology_dual(A, a) == h
    checks["aomoto_square_zero_and_euler"] = aomoto_ok
    # Smith normal form
    rng = random.Random(seed)
    snf_ok = True
    for _ in range(30):
        r, c = rng.randint(1, 6), rng.randint(1, 6)
        M = [[rng.randint(-6, 6) for _ in range(c)] for _ in range(r)]
        rk, d = smith_normal_form(M)
        snf_ok = snf_ok and rk == rank(M, QQ) and len(d) == rk
        snf_ok = snf_ok and all(x > 0 for x in d) and all(d[i + 1] % d[i] == 0 for i in range(len(d) - 1))
    checks["snf_divisibility"] = snf_ok
    # Alexander duality
    dual_inv = all(alexander_dual(alexander_dual(L, L.vertices), L.vertices) == L
                   for L in _complexes(corpus).values() if len(L.vertices) <= 10)
    checks["alexander_dual_involution"] = dual_inv
    return all(checks.values()), checks


@dataclass(frozen=True)
class Criterion:
    number: int
    name: str
    tags: tuple
    limit: float | None
    run: Callable


CRITERIA = (
    Criterion(1, "CM depends on the characteristic (flag RP^2)", ("cm",), 5.0, cm_characteristic),
    Criterion(2, "toric propagation fails for K2 + K2", ("toric",), 1.0, toric_failure),
    Criterion(3, "closed-form loci agree with Aomoto oracle", ("toric", "oracle"), 60.0,
              oracle_agreement),
    Criterion(4, "Cohen-Macaulay complexes propagate", ("cm", "toric"), 10.0, cm_propagation),
    Criterion(5, "graphic arrangement pointwise resonance", ("arrangements",), 10.0,
              arrangement_points),
    Criterion(6, "Fox calculus examples", ("fox",), 1.0, fox_examples),
    Criterion(7, "BGG bounded exactness both ways", ("bgg",), 20.0, bgg_both_ways),
    Criterion(8, "property suites", ("properties", "fox"), None, property_suites),
)


def select(only: str | None = None) -> list[Criterion]:
    """Criteria matching a comma-separated list of tags or numbers."""
    if not only:
        return list(CRITERIA)
    wanted = {w.strip() for w in only.split(",") if w.strip()}
    return [c for c in CRITERIA if str(c.number) in wanted or wanted & set(c.tags)]


def run_criterion(c: Criterion, corpus, seed: int = DEFAULT_SEED) -> CriterionResult:
    t0 = time.perf_counter()
    passed, checks = c.run(corpus, seed)
    seconds = time.perf_counter() - t0
    return CriterionResult(c.number, c.name, c.tags, bool(passed), c.limit, seconds, checks)


def run_all(seed: int = DEFAULT_SEED, only: str | None = None, corpus_dir=None,
            report: Callable[[str], None] | None = None) -> list[CriterionResult]:
    corpus = load_corpus(corpus_dir)
    out = []
    for c in select(only):
        res = run_criterion(c, corpus, seed)
        if report is not None:
            report(res.line())
        out.append(res)
    return out
