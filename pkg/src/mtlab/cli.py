"""Command-line front end.

Exit codes: 0 success or property true, 1 property false or vacuous (a
witness or reason is printed), 2 invalid input, 3 internal error.
"""

from __future__ import annotations

import argparse
import sys
from typing import Any

from .documents import Document, dumps, load, resolve_map, serialize, to_object
from .errors import MTLabError, ParseError, SizeGuardExceeded, ValidationError
from .frames import FRAME_PREDICATES, Frame, check_frame_hom, frame_predicate, validate_frame
from .functors import (
    ROUNDTRIP_TARGETS,
    atoms_space,
    bool_ext_mt,
    canonical_ext,
    opens_frame,
    points_space,
    powerset_mt,
    roundtrip_check,
    roundtrip_input_kind,
)
from .generate import GEN_KINDS, generate
from .mt import (
    COMPACTNESS_KINDS,
    SEPARATION_AXIOMS,
    MTAlgebra,
    check_mt_morphism,
    check_predicate,
    hofmann_mislove,
    normalize_axiom,
)
from .order import FiniteBooleanAlgebra, FiniteLattice, validate_boolean
from .spaces import SPACE_PREDICATES, FiniteSpace, check_map, space_predicates
from .sweep import SUITES, sweep

OK, FALSE, INVALID, INTERNAL = 0, 1, 2, 3
CONSTRUCT_OPS = ("opens", "points", "atoms", "pspace", "boolext", "canonical")


class UsageError(Exception):
    """Input of the wrong kind for the requested command."""


def jsonable(x: Any) -> Any:
    if isinstance(x, (str, int, float, bool)) or x is None:
        return x
    if isinstance(x, dict):
        return {str(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, (frozenset, set)):
        return sorted(jsonable(v) for v in x)
    if isinstance(x, (list, tuple)):
        return [jsonable(v) for v in x]
    return str(x)


def _emit(args, obj: dict, text: str) -> None:
    sys.stdout.write(dumps(obj) if args.json else text.rstrip("\n") + "\n")


# coercions between document kinds


def as_mt(doc: Document) -> MTAlgebra:
    if doc.kind == "mt":
        return doc.structure
    if doc.kind == "space":
        return powerset_mt(doc.structure)
    raise UsageError(f"expected an mt or space document, got {doc.kind!r}")


def as_frame(doc: Document) -> Frame:
    s = doc.structure
    if isinstance(s, Frame):
        return s
    if isinstance(s, FiniteBooleanAlgebra):
        return Frame(s.lattice)
    if isinstance(s, FiniteLattice):
        return validate_frame(s)
    raise UsageError(f"expected a frame, lattice or boolean document, got {doc.kind!r}")


def as_boolean(doc: Document) -> FiniteBooleanAlgebra:
    s = doc.structure
    if isinstance(s, FiniteBooleanAlgebra):
        return s
    if isinstance(s, Frame):
        return validate_boolean(s.lattice)
    if isinstance(s, FiniteLattice):
        return validate_boolean(s)
    raise UsageError(f"expected a boolean document, got {doc.kind!r}")


def as_space(doc: Document) -> FiniteSpace:
    if doc.kind == "space":
        return doc.structure
    if doc.kind == "mt" and doc.structure.space is not None:
        return doc.structure.space
    raise UsageError(f"expected a space document, got {doc.kind!r}")


def coerce(doc: Document, kind: str):
    return {"mt": as_mt, "frame": as_frame, "boolean": as_boolean, "space": as_space}[kind](doc)


# commands


def cmd_validate(args) -> int:
    doc = load(args.file)
    s = doc.structure
    size = getattr(s, "size", len(s) if isinstance(s, dict) else None)
    _emit(args, {"valid": True, "kind": doc.kind, "name": doc.name, "size": size}, f"valid {doc.kind} ({size} elements)")
    return OK


def construct(op: str, doc: Document) -> Document:
    name = f"{op}({doc.name})" if doc.name else None
    if op == "opens":
        return Document("frame", opens_frame(as_mt(doc)), name)
    if op == "points":
        return Document("space", points_space(as_frame(doc)), name)
    if op == "atoms":
        return Document("space", atoms_space(as_mt(doc)), name)
    if op == "pspace":
        return Document("mt", powerset_mt(as_space(doc)), name)
    if op == "boolext":
        return Document("mt", bool_ext_mt(as_frame(doc)), name)
    if op == "canonical":
        return Document("mt", canonical_ext(as_boolean(doc)).sigma, name)
    raise UsageError(f"unknown construction {op!r}")


def cmd_construct(args) -> int:
    out = construct(args.op, load(args.file))
    sys.stdout.write(serialize(out))
    return OK


def evaluate_predicate(pred: str, doc: Document):
    if doc.kind in ("frame", "lattice", "boolean"):
        if pred not in FRAME_PREDICATES:
            raise UsageError(f"unknown frame predicate {pred!r}; choose from {', '.join(FRAME_PREDICATES)}")
        return frame_predicate(as_frame(doc), pred)
    if pred not in COMPACTNESS_KINDS:
        try:
            pred = normalize_axiom(pred)
        except ValueError:
            known = SEPARATION_AXIOMS + COMPACTNESS_KINDS
            raise UsageError(f"unknown predicate {pred!r}; choose from {', '.join(known)}") from None
    if doc.kind == "space" and pred in SPACE_PREDICATES:
        space_predicates(doc.structure, pred)  # raises if the point-level check disagrees
    return check_predicate(as_mt(doc), pred)


def cmd_check(args) -> int:
    r = evaluate_predicate(args.pred, load(args.file))
    obj = {"predicate": args.pred, "holds": r.holds, "witness": jsonable(r.witness), "reason": r.reason}
    text = f"{args.pred}: true" if r.holds else f"{args.pred}: false ({r.reason}); witness {r.witness}"
    _emit(args, obj, text)
    return OK if r.holds else FALSE


def cmd_hm(args) -> int:
    m = as_mt(load(args.file))
    table = hofmann_mislove(m, require_sober_hypothesis=not args.unconditional)
    rows = table.rows()
    text = "\n".join([f"hofmann-mislove: {len(rows)} pairs (compact saturated -> Scott-open filter generator)"]
                     + [f"  {s} -> up {g}" for s, g in rows])
    _emit(args, {"bijection": True, "rows": [list(r) for r in rows]}, text)
    return OK


def cmd_roundtrip(args) -> int:
    doc = load(args.file)
    structure = coerce(doc, roundtrip_input_kind(args.which))
    r = roundtrip_check(args.which, structure)
    obj = {"target": r.target, "verdict": r.verdict, "witness": jsonable(r.witness), "detail": jsonable(r.detail)}
    text = f"{r.target}: {r.verdict}"
    if r.witness is not None:
        text += f"; witness {r.witness}"
    if r.detail:
        text += "".join(f"\n  {k}: {v}" for k, v in sorted(r.detail.items()))
    _emit(args, obj, text)
    return OK if r.holds else FALSE


def cmd_gen(args) -> int:
    docs = generate(args.kind, args.size, args.seed, args.count)
    if args.json:
        sys.stdout.write(dumps([to_object(d) for d in docs]))
    else:
        sys.stdout.write("".join(serialize(d) for d in docs))
    return OK


def cmd_sweep(args) -> int:
    report = sweep(args.suite, args.size, args.seed, args.count, args.jobs)
    sys.stdout.write(report.to_json() if args.json else report.text())
    if not report.accounting_holds():
        raise AssertionError("sweep accounting does not add up")
    return OK if report.total_failures == 0 else FALSE


def cmd_hom(args) -> int:
    src_doc, dst_doc, map_doc = load(args.src), load(args.dst), load(args.mapfile)
    if args.check == "mt":
        src, dst = as_mt(src_doc), as_mt(dst_doc)
        table = resolve_map(map_doc, src, dst)
        r = check_mt_morphism(table, src, dst, strict=False)
        holds, proper, witness = r.is_mt_morphism, r.is_proper, r.witness
    elif args.check == "frame":
        src, dst = as_frame(src_doc), as_frame(dst_doc)
        table = resolve_map(map_doc, src, dst)
        fr = check_frame_hom(table, src, dst, strict=False)
        holds, proper, witness = fr.is_frame_hom, fr.is_proper, fr.witness
    else:
        src, dst = as_space(src_doc), as_space(dst_doc)
        table = resolve_map(map_doc, src, dst)
        cm = check_map(table, src, dst)
        holds, proper, witness = cm.is_continuous, cm.is_proper, cm.witness
    what = {"mt": "MT-morphism", "frame": "frame homomorphism", "map": "continuous map"}[args.check]
    obj = {"check": args.check, "holds": holds, "proper": proper if holds else False, "witness": jsonable(witness)}
    if holds:
        text = f"{what}: yes; proper: {'yes' if proper else 'no'}"
        if witness is not None:
            text += f" ({witness})"
    else:
        text = f"{what}: no; witness {witness}"
    _emit(args, obj, text)
    return OK if holds else FALSE


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print a machine-readable document")
    p = argparse.ArgumentParser(prog="mtlab", description="Finite MT-algebras, frames and spaces.", parents=[common])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("validate", parents=[common], help="parse and validate a document")
    s.add_argument("file")
    s.set_defaults(fn=cmd_validate)

    s = sub.add_parser("construct", parents=[common], help="apply a construction and print the result")
    s.add_argument("--op", required=True, choices=CONSTRUCT_OPS)
    s.add_argument("file")
    s.set_defaults(fn=cmd_construct)

    s = sub.add_parser("check", parents=[common], help="evaluate a predicate")
    s.add_argument("--pred", required=True)
    s.add_argument("file")
    s.set_defaults(fn=cmd_check)

    s = sub.add_parser("hm", parents=[common], help="tabulate the compact-saturated / Scott-open filter bijection")
    s.add_argument("--unconditional", action="store_true", help="do not require sobriety")
    s.add_argument("file")
    s.set_defaults(fn=cmd_hm)

    s = sub.add_parser("roundtrip", parents=[common], help="check a functorial round trip")
    s.add_argument("--which", required=True, choices=ROUNDTRIP_TARGETS)
    s.add_argument("file")
    s.set_defaults(fn=cmd_roundtrip)

    s = sub.add_parser("gen", parents=[common], help="generate structures deterministically")
    s.add_argument("--kind", required=True, choices=GEN_KINDS)
    s.add_argument("--size", required=True, type=int)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--count", type=int, default=1)
    s.set_defaults(fn=cmd_gen)

    s = sub.add_parser("sweep", parents=[common], help="run a property suite over a corpus")
    s.add_argument("--suite", required=True, choices=SUITES)
    s.add_argument("--size", required=True, type=int)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--count", type=int, default=0)
    s.add_argument("--jobs", type=int, default=1)
    s.set_defaults(fn=cmd_sweep)

    s = sub.add_parser("hom", parents=[common], help="check a map between two structures")
    s.add_argument("--check", required=True, choices=("mt", "frame", "map"))
    s.add_argument("src")
    s.add_argument("dst")
    s.add_argument("mapfile")
    s.set_defaults(fn=cmd_hom)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return OK if exc.code == 0 else INVALID
    try:
        return args.fn(args)
    except ParseError as exc:
        print(f"error: ParseError at {exc}", file=sys.stderr)
        return INVALID
    except (ValidationError, SizeGuardExceeded, UsageError, FileNotFoundError, ValueError) as exc:
        w = getattr(exc, "witness", None)
        extra = f" (witness {w})" if w is not None else ""
        print(f"error: {type(exc).__name__}: {exc}{extra}", file=sys.stderr)
        return INVALID
    except MTLabError as exc:
        # hypothesis not met, bijection failure: the property is not established
        w = getattr(exc, "witness", None)
        print(f"false: {type(exc).__name__}: {exc}" + (f" (witness {w})" if w is not None else ""))
        return FALSE
    except Exception as exc:  # noqa: BLE001
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return INTERNAL


if __name__ == "__main__":
    sys.exit(main())
