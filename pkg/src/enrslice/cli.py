"""Command-line front end.

Exit codes: 0 pass or yes, 1 fail or no, 2 unknown, 3 bad input.
"""
from __future__ import annotations

import argparse
import random
import sys
import time
from importlib import resources
from pathlib import Path

from . import __version__
from .bicat import SigmaFinSet, validate_bicategory
from .connect import (DEFAULT_PROBES, ConnectError, InconsistentVerdict, colimit_presentation, is_cat_connected,
                      standard_weights)
from .document import Document, DocumentError, dump_data, emit, from_value, parse
from .enriched import (BFunctor, EnrichmentError, encode_category, encode_functor, enumerate_bcategories,
                       finset_carriers, underlying_morphisms)
from .fibration import cartesian_lift, cross_check, has_singleton_powers, is_fibration
from .fincat import DISC2, IDEMMON, ONE, PAR, TWO, FinCategory, Functor
from .harness import enumerate_report, named_base, named_over, roundtrip_suite
from .slice import SliceBicategory, UnsupportedBase, oplax_limit, oplax_universal_check, to_sliced, \
    validate_oplax_cone

EXIT_PASS, EXIT_FAIL, EXIT_UNKNOWN, EXIT_INPUT = 0, 1, 2, 3
DEFAULT_SEED = 20240901
PROBES = {"one": ONE, "disc2": DISC2, "two": TWO, "idem": IDEMMON, "idemmon": IDEMMON, "par": PAR}
FIXTURES = ("two.cat", "cod-over-two.encat")


class InputError(Exception):
    pass


def fixture_text(name: str) -> str:
    return resources.files("enrslice.fixtures").joinpath(name).read_text(encoding="utf-8")


def read_document(path: str) -> Document:
    p = Path(path)
    if p.exists():
        text = p.read_text(encoding="utf-8")
    elif p.name in FIXTURES:
        text = fixture_text(p.name)
    else:
        raise InputError(f"no such file: {path}")
    return parse(text)


def _pick(doc: Document, kind: str, name: str | None):
    try:
        return doc.get(kind, name)
    except KeyError:
        raise InputError(f"no {kind} block" + (f" named {name!r}" if name else "")) from None


def _as_enriched_functor(F) -> BFunctor:
    if isinstance(F, Functor):
        return encode_functor(F)
    return F


# -- verbs -------------------------------------------------------------------------------

def cmd_validate(args, out: dict) -> int:
    try:
        doc = read_document(args.file)
    except DocumentError as e:
        if e.kind == "validation":
            out["verdict"] = "fail"
            out["problems"] = [str(e)]
            return EXIT_FAIL
        raise
    out["verdict"] = "pass"
    out["blocks"] = [[kind, name] for kind, name, _ in doc]
    return EXIT_PASS


def cmd_slice(args, out: dict, full: bool) -> int:
    doc = read_document(args.file)
    X = _pick(doc, "enriched", args.over)
    W = SliceBicategory(X.base, X)
    homs = []
    for x in X.objects:
        for y in X.objects:
            cells = W.onecells(x, y) if W.finite else W.fibred_onecells(x, y, args.fibre_bound)
            homs.append([from_value(x), from_value(y), len(cells)])
    probe = []
    for (x, y) in [(x, y) for x in X.objects for y in X.objects]:
        probe += (W.onecells(x, y) if W.finite else W.fibred_onecells(x, y, 1))[:3]
    problems = validate_bicategory(W, probe)
    out["slice"] = {"base": X.base.name, "over": X.name, "objects": [from_value(x) for x in X.objects],
                    "onecells_per_hom": homs, "fibre_bound": None if W.finite else args.fibre_bound}
    out["verdict"] = "pass" if not problems else "fail"
    cert = {"validation_problems": problems, "onecells_checked": len(probe)}
    sliced = Document()
    for name in doc.names("functor"):
        F = doc.get("functor", name)
        if isinstance(F, BFunctor) and F.target == X:
            sliced.add("enriched", f"{name}-sliced", to_sliced(F, W))
    if full:
        out["certificate"] = cert
        if sliced.names("enriched"):
            out["document"] = emit(sliced)
    else:
        out["validation_problems"] = len(problems)
    return EXIT_PASS if not problems else EXIT_FAIL


def cmd_oplax(args, out: dict, full: bool) -> int:
    doc = read_document(args.file)
    F = _as_enriched_functor(_pick(doc, "functor", args.functor))
    cone = oplax_limit(F)
    problems = validate_oplax_cone(cone)
    B = F.source.base
    cells = finset_carriers(1) if isinstance(B, SigmaFinSet) else None
    tests = list(enumerate_bcategories(B, args.max_objects, onecells=cells)) if not problems else []
    uni = oplax_universal_check(cone, tests)
    ok = not problems and not uni["failures"]
    out["verdict"] = "pass" if ok else "fail"
    out["apex_objects"] = [from_value(l) for l in cone.apex.objects]
    out["universal_check"] = {"test_categories": len(tests), "cones_checked": uni["checked"],
                              "failures": len(uni["failures"]), "object_bound": args.max_objects}
    if full:
        out["certificate"] = {
            "validation_problems": problems,
            "pullbacks": [[from_value(k[0]), from_value(k[1]), from_value(p1), from_value(p2)]
                          for k, (f1, f2, (p1, p2)) in cone.squares.items()],
        }
        out["document"] = emit(Document().add("enriched", "apex", cone.apex))
    return EXIT_PASS if ok else EXIT_FAIL


def cmd_fibration(args, out: dict, full: bool) -> int:
    doc = read_document(args.file)
    F = _as_enriched_functor(_pick(doc, "functor", args.functor))
    report = cross_check(F)
    out["fibration"] = report["fibration"]
    out["singleton_powers"] = report["singleton_powers"]
    out["agree"] = report["agree"]
    out["verdict"] = "pass" if report["agree"] else "fail"
    if full:
        lifts = []
        X = F.target
        for y in F.source.objects:
            for x in X.objects:
                for c in underlying_morphisms(X, x, F.ob(y)):
                    h = cartesian_lift(F, y, (x, c, F.ob(y)))
                    lifts.append({"over": from_value((x, c, F.ob(y))), "at": from_value(y),
                                  "lift": from_value(h) if h is not None else None})
        out["certificate"] = {"cartesian_lifts": lifts}
    return EXIT_PASS if report["agree"] else EXIT_FAIL


def cmd_connected(args, out: dict, full: bool) -> int:
    if args.standard:
        makers = standard_weights()
        if args.standard not in makers:
            raise InputError(f"unknown standard weight {args.standard!r}; choose from {sorted(makers)}")
        if args.standard == "power":
            W = makers["power"](PROBES[args.power_of.lower()] if args.power_of else TWO)
        else:
            W = makers[args.standard]()
    elif args.file:
        W = _pick(read_document(args.file), "weight", args.weight)
    else:
        raise InputError("give a weight file or --standard NAME")
    if args.probe:
        try:
            probes = [PROBES[p.lower()] for p in args.probe]
        except KeyError as e:
            raise InputError(f"unknown probe {e.args[0]!r}; choose from {sorted(PROBES)}") from None
    else:
        probes = list(DEFAULT_PROBES)
    v = is_cat_connected(W, probes, args.depth)
    out["weight"] = W.name
    out["verdict"] = v.kind
    out["depth"] = args.depth
    out["probes"] = [X.name for X in probes]
    if v.kind == "no":
        out["witness"] = {str(k): from_value(w) for k, w in v.witness.items()}
    if v.kind == "yes":
        out["proof_depth"] = v.bound
    if full and v.kind == "yes":
        P = colimit_presentation(W)
        out["certificate"] = {"relations": [[from_value(l), from_value(r), lab] for l, r, lab in P.relations],
                              "collapse": [[from_value(g), [[from_value(u), from_value(w), rid] for u, w, rid in steps]]
                                           for g, steps in v.proof.items()]}
    return {"yes": EXIT_PASS, "no": EXIT_FAIL}.get(v.kind, EXIT_UNKNOWN)


def cmd_roundtrip(args, out: dict, full: bool) -> int:
    B = named_base(args.base)
    X = named_over(args.over, B)
    rep = roundtrip_suite(B, X, args.max_objects, args.fibre_bound, base_name=args.base, over_name=args.over)
    d = rep.as_dict()
    if not full:
        d.pop("mismatch_detail")
    out.update(d)
    out["verdict"] = "pass" if not rep.mismatches else "fail"
    return EXIT_PASS if not rep.mismatches else EXIT_FAIL


def cmd_enumerate(args, out: dict, full: bool) -> int:
    B = named_base(args.base)
    X = named_over(args.over, B) if args.over else None
    rep = enumerate_report(B, X, args.max_objects, args.fibre_bound)
    out["base"] = rep["base"]
    out["max_objects"] = args.max_objects
    out["categories"] = rep["categories"]
    out["verdict"] = "pass"
    if full:
        doc = Document()
        for i, Z in enumerate(rep["items"]):
            doc.add("enriched", f"E{i}", Z)
        out["document"] = emit(doc)
    return EXIT_PASS


VERBS = {"validate": cmd_validate, "slice": cmd_slice, "oplax": cmd_oplax, "fibration": cmd_fibration,
         "connected": cmd_connected, "roundtrip": cmd_roundtrip, "enumerate": cmd_enumerate}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="enrslice", description="Enriched categories over slice bicategories.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("summary", "full"), default="summary")
    common.add_argument("--seed", type=int, default=DEFAULT_SEED)
    sub = p.add_subparsers(dest="verb", required=True)

    s = sub.add_parser("validate", parents=[common], help="parse and validate a document")
    s.add_argument("file")

    s = sub.add_parser("slice", parents=[common], help="build the slice bicategory over an enriched category")
    s.add_argument("file")
    s.add_argument("--over", help="enriched block to slice over (default: the first)")
    s.add_argument("--fibre-bound", type=int, default=1)

    s = sub.add_parser("oplax", parents=[common], help="oplax limit of a functor, with its universal check")
    s.add_argument("file")
    s.add_argument("--functor")
    s.add_argument("--max-objects", type=int, default=2)

    s = sub.add_parser("fibration", parents=[common], help="fibration and singleton-powers cross-check")
    s.add_argument("file")
    s.add_argument("--functor")

    s = sub.add_parser("connected", parents=[common], help="decide whether a weight is Cat-connected")
    s.add_argument("file", nargs="?")
    s.add_argument("--weight")
    s.add_argument("--standard", help="one of: " + ", ".join(standard_weights()))
    s.add_argument("--power-of", help="probe name used by --standard power (default two)")
    s.add_argument("--probe", action="append", help="repeatable; " + ", ".join(PROBES))
    s.add_argument("--depth", type=int, default=4)

    for verb, hlp in (("roundtrip", "exhaustive slice round trips"), ("enumerate", "count enriched categories")):
        s = sub.add_parser(verb, parents=[common], help=hlp)
        s.add_argument("--base", default="set")
        s.add_argument("--over", default="two" if verb == "roundtrip" else None)
        s.add_argument("--max-objects", type=int, default=2)
        s.add_argument("--fibre-bound", type=int, default=2)
    return p


def run(argv: list[str] | None = None, stream=None) -> int:
    stream = stream or sys.stdout
    argv = list(sys.argv[1:] if argv is None else argv)
    args = build_parser().parse_args(argv)
    random.seed(args.seed)
    full = args.format == "full"
    out: dict = {"command": ["enrslice", *argv], "tool": {"name": "enrslice", "version": __version__},
                 "seed": args.seed}
    start = time.perf_counter()
    try:
        if args.verb == "validate":
            code = cmd_validate(args, out)
        else:
            code = VERBS[args.verb](args, out, full)
    except (InputError, DocumentError, KeyError) as e:
        out["verdict"] = "input-error"
        out["error"] = str(e).strip("'\"")
        code = EXIT_INPUT
    except (UnsupportedBase, EnrichmentError, ConnectError) as e:
        out["verdict"] = "input-error"
        out["error"] = f"{type(e).__name__}: {e}"
        code = EXIT_INPUT
    except InconsistentVerdict as e:
        out["verdict"] = "internal-error"
        out["error"] = str(e)
        code = EXIT_FAIL
    out["exit_code"] = code
    doc_text = out.pop("document", None)
    stream.write(dump_data(out))
    if doc_text:
        stream.write("---\n")
        stream.write(doc_text)
    stream.write("...\n")
    stream.write(f"# elapsed {time.perf_counter() - start:.3f} s\n")
    return code


def main() -> None:
    sys.exit(run())
