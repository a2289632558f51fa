"""
Command-line front end.

Every subcommand reads JSON documents, computes, and writes one JSON report
to stdout.  Exit status: 0 when the computation succeeded and its verdict
(if any) is positive, 1 when the verdict is negative, 2 on input errors.
"""
from __future__ import annotations

import argparse
import json
import random
import sys
import warnings
from typing import Sequence

from . import __version__
from .acceptance import DEFAULT_SEED, run_all, select
from .algebra import (aomoto_cohomology, bb_quotient_ring, bgg_complex_check,
                      sample_points, stanley_reisner_ring)
from .arrangements import (ProjectiveModel, nbc_sets, orlik_solomon,
                           random_projective_point, sample_propagation)
from .cm import certify_bestvina_brady, certify_toric
from .errors import JumpLociError, NegativeEulerCharacteristic
from .fox import (Character, chi_propagation_check, sample_characters,
                  twisted_cohomology, twisted_homology)
from .homology import reduced_homology
from .io import InputError, complex_json, digest, load, parse_text, parse_vector
from .linalg import CoefficientField
from .simplicial import (SimplicialComplex, alexander_dual, compose, flag_complex,
                         link, simplicial_wedge)
from .toric import (check_propagation, raag_degree1, toric_characteristic,
                    toric_resonance)
from .verdicts import pointwise_propagation

PROVENANCE = {
    "cm": ["Reisner: L is Cohen-Macaulay iff every link has reduced homology only in "
           "degree dim L - |sigma|",
           "for toric complexes: L Cohen-Macaulay <=> T_L abelian duality <=> EPY"],
    "toric": ["toric jump loci are unions of coordinate subspaces k^W selected by "
              "sums of link homology of L_W"],
    "raag": ["degree-one resonance of a right-angled Artin group: maximal W with "
             "disconnected induced subgraph"],
    "propagation": ["abelian duality (or EPY) implies propagation of jump loci"],
    "bgg": ["EPY <=> the BGG complex L(A(-n)) is exact off degree 0; checked up to a "
            "degree bound only"],
    "os": ["Orlik-Solomon algebra: exterior algebra modulo boundaries of circuits; "
           "NBC sets give a basis"],
    "arrangement": ["complements of essential central arrangements are abelian duality "
                    "spaces, so projective resonance propagates"],
    "fox": ["twisted cochains k -> k^g -> k^r with the Fox Jacobian as second "
            "differential"],
    "bb": ["N_Gamma is an abelian duality group iff the flag complex is acyclic and "
           "Cohen-Macaulay"],
}


def _field(args) -> CoefficientField:
    try:
        return CoefficientField.parse(args.field)
    except ValueError as e:
        raise InputError(str(e)) from None


def _read(path: str):
    if path == "-":
        return parse_text(sys.stdin.read(), "<stdin>")
    return load(path)


def _expect(doc, *kinds):
    if doc.kind not in kinds:
        raise InputError(f"expected a {' or '.join(kinds)} document, got {doc.kind!r}")
    return doc.obj


def _complex_of(doc) -> SimplicialComplex:
    obj = _expect(doc, "complex", "graph")
    return flag_complex(obj) if doc.kind == "graph" else obj


def _ints(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise InputError(f"{text!r} is not a comma-separated list of integers") from None


def _report(args, docs, body: dict, provenance: Sequence[str] = ()) -> dict:
    return {
        "command": [args.command] + list(args.argv_echo),
        "input_digest": digest([d.to_json() for d in docs]),
        "provenance": list(provenance),
        **body,
    }


# -- subcommands ------------------------------------------------------------


def cmd_cm(args):
    doc = _read(args.input)
    L = _complex_of(doc)
    k = _field(args)
    verdict = certify_toric(L, k, full_table=args.full_table)
    return _report(args, [doc], {"verdict": verdict.basis.verdict, **verdict.as_dict()},
                   PROVENANCE["cm"]), verdict.basis.verdict


def cmd_homology(args):
    doc = _read(args.input)
    L = _complex_of(doc)
    h = reduced_homology(L, _field(args))
    return _report(args, [doc], {"reduced_homology": h.as_dict()}), True


def cmd_link(args):
    doc = _read(args.input)
    L = _complex_of(doc)
    lk = link(L, _ints(args.face))
    return _report(args, [doc], {"complex": complex_json(lk)}), True


def cmd_flag(args):
    doc = _read(args.input)
    G = _expect(doc, "graph")
    L = flag_complex(G)
    return _report(args, [doc], {"complex": complex_json(L, G.vertices)}), True


def cmd_compose(args):
    docs = [_read(p) for p in [args.input] + args.parts]
    L = _expect(docs[0], "complex")
    Ks = [_expect(d, "complex") for d in docs[1:]]
    out = compose(L, Ks, ambient=docs[0].ambient)
    names = {str(v): list(src) for v, src in sorted(out.names.items())}
    return _report(args, docs, {"complex": complex_json(out, out.ambient),
                                "names": names}), True


def cmd_wedge(args):
    doc = _read(args.input)
    L = _expect(doc, "complex")
    out = simplicial_wedge(L, _ints(args.mult))
    names = {str(v): list(src) for v, src in sorted(out.names.items())}
    return _report(args, [doc], {"complex": complex_json(out, tuple(sorted(out.names))),
                                 "names": names}), True


def cmd_dual(args):
    doc = _read(args.input)
    L = _expect(doc, "complex")
    V = doc.ambient or L.vertices
    return _report(args, [doc], {"complex": complex_json(alexander_dual(L, V), V)}), True


def _toric(args, kind):
    doc = _read(args.input)
    L = _complex_of(doc)
    k = _field(args)
    fn = toric_resonance if kind == "resonance" else toric_characteristic
    loc = fn(L, k, args.depth)
    verdict = check_propagation(loc)
    body = {"locus": loc.as_dict(), "propagation": verdict.as_dict(),
            "verdict": verdict.propagates}
    prov = list(PROVENANCE["toric"])
    if doc.kind == "graph":
        body["raag_degree1"] = [list(W) for W in raag_degree1(doc.obj)]
        prov += PROVENANCE["raag"]
    return _report(args, [doc], body, prov), verdict.propagates


def cmd_toric_resonance(args):
    return _toric(args, "resonance")


def cmd_toric_charvar(args):
    return _toric(args, "characteristic")


def cmd_propagation(args):
    doc = _read(args.input)
    k = _field(args)
    if doc.kind in ("complex", "graph"):
        L = _complex_of(doc)
        res = check_propagation(toric_resonance(L, k, args.depth))
        char = check_propagation(toric_characteristic(L, k, args.depth))
        cm = certify_toric(L, k)
        ok = res.propagates and char.propagates
        body = {"resonance": res.as_dict(), "characteristic": char.as_dict(),
                "cohen_macaulay": cm.basis.verdict, "verdict": ok}
        return _report(args, [doc], body, PROVENANCE["toric"] + PROVENANCE["propagation"]), ok
    if doc.kind == "arrangement":
        A = doc.obj
        model = ProjectiveModel.build(A, k)
        rng = random.Random(args.seed)
        pts = [parse_vector(args.point)] if args.point else []
        pts += [random_projective_point(rng, A.size, k) for _ in range(args.samples)]
        rows = sample_propagation(A, pts, k, model)
        ok = all(v.propagates for _, v in rows)
        body = {"points": [{"point": [k.to_str(k.coerce(x)) for x in a], "h": h,
                            **v.as_dict()} for a, (h, v) in zip(pts, rows)],
                "verdict": ok}
        return _report(args, [doc], body, PROVENANCE["arrangement"]), ok
    P = _expect(doc, "presentation")
    chars = [Character.make(P, parse_vector(args.char), k)] if args.char else []
    chars += sample_characters(P, k, args.samples, args.seed)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", NegativeEulerCharacteristic)
        verdict = chi_propagation_check(P, chars)
    body = {"euler_characteristic": P.euler_characteristic, "characters": len(chars),
            "propagation": verdict.as_dict(), "verdict": verdict.propagates}
    return _report(args, [doc], body, PROVENANCE["fox"] + PROVENANCE["propagation"]), verdict.propagates


def _algebra(doc, k):
    if doc.kind == "arrangement":
        return orlik_solomon(doc.obj, k)
    return stanley_reisner_ring(_complex_of(doc), k)


def cmd_aomoto(args):
    doc = _read(args.input)
    k = _field(args)
    A = _algebra(doc, k)
    if args.point:
        pts = [parse_vector(args.point)]
    else:
        pts = sample_points(A.ngens, k, args.samples, args.seed)
    rows = [{"point": [k.to_str(x) for x in A.coerce_point(a)],
             "cohomology": aomoto_cohomology(A, a)} for a in pts]
    return _report(args, [doc], {"algebra": A.name, "dims": A.dims, "points": rows}), True


def cmd_bgg_check(args):
    doc = _read(args.input)
    A = _algebra(doc, _field(args))
    rep = bgg_complex_check(A, args.bound)
    ok = rep.consistent_with_koszul
    return _report(args, [doc], {"bgg": rep.as_dict(), "verdict": ok},
                   PROVENANCE["bgg"]), ok


def cmd_os(args):
    doc = _read(args.input)
    A = _expect(doc, "arrangement")
    k = _field(args)
    model = ProjectiveModel.build(A, k)
    body = {"rank": A.rank, "circuits": [list(C) for C in A.circuits],
            "nbc_counts": [len(s) for s in nbc_sets(A)], "dims": model.algebra.dims,
            "projective_dims": model.projective_dims()}
    return _report(args, [doc], body, PROVENANCE["os"]), True


def cmd_os_resonance(args):
    doc = _read(args.input)
    A = _expect(doc, "arrangement")
    k = _field(args)
    if not args.point:
        raise InputError("--point is required")
    model = ProjectiveModel.build(A, k)
    a = parse_vector(args.point)
    h = model.resonance_at(a)
    bad = pointwise_propagation(h, 0, model.projective_dim)
    body = {"point": [k.to_str(x) for x in model.algebra.coerce_point(a)],
            "projective_h": h, "propagates": bad is None, "verdict": bad is None}
    return _report(args, [doc], body, PROVENANCE["os"] + PROVENANCE["arrangement"]), bad is None


def cmd_fox(args):
    doc = _read(args.input)
    P = _expect(doc, "presentation")
    k = _field(args)
    rho = (Character.make(P, parse_vector(args.char), k) if args.char
           else Character.trivial(P, k))
    h = twisted_cohomology(P, rho)
    body = {"character": [k.to_str(v) for v in rho.values], "cohomology": list(h),
            "homology_at_inverse": list(twisted_homology(P, rho.inverse())),
            "euler_characteristic": P.euler_characteristic}
    return _report(args, [doc], body, PROVENANCE["fox"]), True


def cmd_bb_check(args):
    doc = _read(args.input)
    G = _expect(doc, "graph")
    k = _field(args)
    v = certify_bestvina_brady(G, k)
    body = {"verdict": v.abelian_duality, **v.as_dict()}
    if v.acyclic:
        body["bb_ring_dims"] = bb_quotient_ring(flag_complex(G), k).dims
    return _report(args, [doc], body, PROVENANCE["bb"]), v.abelian_duality


def cmd_corpus_verify(args):
    if args.only and not select(args.only):
        raise InputError(f"--only {args.only!r} matches no criterion")
    results = run_all(args.seed, args.only, args.corpus,
                      report=lambda line: print(line, file=sys.stderr))
    ok = all(r.ok for r in results)
    report = {"command": [args.command] + list(args.argv_echo), "seed": args.seed,
              "criteria": [r.as_dict() for r in results], "verdict": ok}
    return report, ok


COMMANDS = {
    "cm": (cmd_cm, "Cohen-Macaulay certificate and toric duality verdict"),
    "homology": (cmd_homology, "reduced homology"),
    "link": (cmd_link, "link of a face"),
    "flag": (cmd_flag, "flag complex of a graph"),
    "compose": (cmd_compose, "composition L o (K_1, ..., K_m)"),
    "wedge": (cmd_wedge, "simplicial wedge L(J)"),
    "dual": (cmd_dual, "Alexander dual"),
    "toric-resonance": (cmd_toric_resonance, "resonance varieties of T_L"),
    "toric-charvar": (cmd_toric_charvar, "characteristic varieties of T_L"),
    "propagation": (cmd_propagation, "propagation check"),
    "aomoto": (cmd_aomoto, "Aomoto complex cohomology at points"),
    "bgg-check": (cmd_bgg_check, "bounded exactness of the BGG complex"),
    "os": (cmd_os, "Orlik-Solomon algebra of an arrangement"),
    "os-resonance": (cmd_os_resonance, "projective resonance at a point"),
    "fox": (cmd_fox, "twisted cohomology of a presentation"),
    "bb-check": (cmd_bb_check, "Bestvina-Brady duality verdict"),
    "corpus-verify": (cmd_corpus_verify, "run the acceptance suite"),
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", default="Q", help='"Q", "Z" or "GF(p)" (default Q)')
    common.add_argument("--seed", type=int, default=DEFAULT_SEED)
    common.add_argument("--pretty", action="store_true", help="human-readable tables")
    parser = argparse.ArgumentParser(prog="jumploci", description=__doc__.strip().splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_text) in COMMANDS.items():
        p = sub.add_parser(name, parents=[common], help=help_text)
        if name != "corpus-verify":
            p.add_argument("input", help="JSON document, or - for stdin")
        if name == "cm":
            p.add_argument("--full-table", action="store_true")
        if name == "link":
            p.add_argument("--face", required=True, help="comma-separated vertices")
        if name == "compose":
            p.add_argument("parts", nargs="+", help="one complex per vertex of L")
        if name == "wedge":
            p.add_argument("--mult", required=True, help="comma-separated multiplicities")
        if name in ("toric-resonance", "toric-charvar", "propagation"):
            p.add_argument("--depth", type=int, default=1)
        if name in ("aomoto", "os-resonance", "propagation"):
            p.add_argument("--point", help='comma-separated coordinates, e.g. "1,-1/2,0"')
        if name in ("aomoto", "propagation"):
            p.add_argument("--samples", type=int, default=10)
        if name in ("fox", "propagation"):
            p.add_argument("--char", help="comma-separated character values")
        if name == "bgg-check":
            p.add_argument("--bound", type=int, default=None)
        if name == "corpus-verify":
            p.add_argument("--corpus", default=None, help="corpus directory")
            p.add_argument("--only", default=None, help="tags or criterion numbers")
    return parser


def render_pretty(obj, indent: int = 0) -> str:
    """Indented ``key: value`` text with short lists of scalars on one line."""
    pad = "  " * indent
    lines = []
    if isinstance(obj, dict):
        for k, v in obj.items():
            if isinstance(v, (dict, list)) and not _flat(v):
                lines.append(f"{pad}{k}:")
                lines.append(render_pretty(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {_scalar(v)}")
    elif isinstance(obj, list):
        for v in obj:
            if isinstance(v, (dict, list)) and not _flat(v):
                lines.append(f"{pad}-")
                lines.append(render_pretty(v, indent + 1))
            else:
                lines.append(f"{pad}- {_scalar(v)}")
    else:
        lines.append(f"{pad}{_scalar(obj)}")
    return "\n".join(line for line in lines if line)


def _flat(v) -> bool:
    if isinstance(v, list):
        return all(not isinstance(x, dict) and _flat(x) if isinstance(x, list) else
                   not isinstance(x, dict) for x in v)
    return not v


def _scalar(v) -> str:
    return json.dumps(v)


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 0 if e.code == 0 else 2
    args.argv_echo = argv[1:]
    fn = COMMANDS[args.command][0]
    try:
        report, ok = fn(args)
    except (JumpLociError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    if args.pretty:
        print(render_pretty(report))
    else:
        print(json.dumps(report, sort_keys=True))
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
