"""Canonical JSON structure documents.

Every document is an object with a ``kind`` and an optional ``name``.
Ordered structures list ``elements`` and the Hasse ``order`` as cover pairs;
spaces list ``points`` and ``opens`` as label arrays; MT-algebras carry
either a ``space`` payload or ``elements``/``order``/``box``; maps carry a
``mapping`` from source labels to target labels.  Serialization sorts
everything, so ``serialize(parse(text)) == text`` for canonical text.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Any

from ._subsets import bits
from .errors import ParseError, ValidationError
from .frames import Frame, validate_frame
from .mt import MTAlgebra, validate_mt
from .order import (
    FiniteBooleanAlgebra,
    FiniteLattice,
    FinitePoset,
    lattice_structure,
    validate_boolean,
    validate_poset,
)
from .spaces import FiniteSpace, space_from_labels

KINDS = ("poset", "lattice", "frame", "boolean", "mt", "space", "map")


@dataclass(frozen=True, eq=False)
class Document:
    kind: str
    structure: Any
    name: str | None = None


def _need(obj: dict, key: str, where: str, typ=None):
    if key not in obj:
        raise ParseError(f"missing key {key!r}", location=f"{where}")
    val = obj[key]
    if typ is not None and not isinstance(val, typ):
        raise ParseError(f"{key!r} has the wrong type", location=f"{where}.{key}")
    return val


def _labels(val, where: str) -> list[str]:
    if not isinstance(val, list) or not all(isinstance(x, str) for x in val):
        raise ParseError("expected an array of strings", location=where)
    return list(val)


def _pairs(val, where: str) -> list[tuple[str, str]]:
    if not isinstance(val, list):
        raise ParseError("expected an array of pairs", location=where)
    out = []
    for i, p in enumerate(val):
        if not (isinstance(p, list) and len(p) == 2 and all(isinstance(x, str) for x in p)):
            raise ParseError("expected a pair of labels", location=f"{where}[{i}]")
        out.append((p[0], p[1]))
    return out


def _poset_payload(obj: dict, where: str) -> FinitePoset:
    elements = _labels(_need(obj, "elements", where), f"{where}.elements")
    pairs = _pairs(_need(obj, "order", where), f"{where}.order")
    return validate_poset(elements, pairs)


def _space_payload(obj: dict, where: str) -> FiniteSpace:
    points = _labels(_need(obj, "points", where), f"{where}.points")
    opens_raw = _need(obj, "opens", where, list)
    opens = [_labels(u, f"{where}.opens[{i}]") for i, u in enumerate(opens_raw)]
    return space_from_labels(points, opens)


def from_object(obj: Any) -> Document:
    if not isinstance(obj, dict):
        raise ParseError("document must be an object", location="$")
    kind = _need(obj, "kind", "$", str)
    name = obj.get("name")
    if name is not None and not isinstance(name, str):
        raise ParseError("'name' must be a string", location="$.name")
    if kind not in KINDS:
        raise ParseError(f"unknown kind {kind!r}", location="$.kind")
    if kind == "poset":
        return Document(kind, _poset_payload(obj, "$"), name)
    if kind == "lattice":
        return Document(kind, lattice_structure(_poset_payload(obj, "$")), name)
    if kind == "frame":
        return Document(kind, validate_frame(lattice_structure(_poset_payload(obj, "$"))), name)
    if kind == "boolean":
        return Document(kind, validate_boolean(lattice_structure(_poset_payload(obj, "$"))), name)
    if kind == "space":
        return Document(kind, _space_payload(obj, "$"), name)
    if kind == "mt":
        if "space" in obj:
            sp = _need(obj, "space", "$", dict)
            return Document(kind, validate_mt(_space_payload(sp, "$.space")), name)
        ba = validate_boolean(lattice_structure(_poset_payload(obj, "$")))
        box_raw = _need(obj, "box", "$", dict)
        index = ba.lattice.poset.index
        box = []
        for label in ba.elements:
            if label not in box_raw:
                raise ParseError(f"box has no entry for {label!r}", location="$.box")
            target = box_raw[label]
            if target not in index:
                raise ParseError(f"box value {target!r} is not an element", location=f"$.box.{label}")
            box.append(index[target])
        extra = set(box_raw) - set(index)
        if extra:
            raise ParseError(f"box mentions unknown element {sorted(extra)[0]!r}", location="$.box")
        return Document(kind, validate_mt(ba, box), name)
    mapping = _need(obj, "mapping", "$", dict)
    if not all(isinstance(k, str) and isinstance(v, str) for k, v in mapping.items()):
        raise ParseError("mapping must send labels to labels", location="$.mapping")
    return Document(kind, dict(mapping), name)


def parse(text: str) -> Document:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, location=f"line {exc.lineno} column {exc.colno}") from None
    return from_object(obj)


def _order_payload(p: FinitePoset) -> dict:
    order = sorted([p.elements[a], p.elements[b]] for a, b in p.covers())
    return {"elements": sorted(p.elements), "order": order}


def _space_obj(x: FiniteSpace) -> dict:
    opens = [sorted(x.points[i] for i in bits(u)) for u in x.opens]
    return {"points": sorted(x.points), "opens": sorted(opens, key=lambda u: (len(u), u))}


def to_object(doc: Document) -> dict:
    s = doc.structure
    obj: dict[str, Any] = {"kind": doc.kind}
    if doc.name is not None:
        obj["name"] = doc.name
    if doc.kind == "poset":
        obj.update(_order_payload(s))
    elif doc.kind in ("lattice", "frame", "boolean"):
        lat = s.lattice if isinstance(s, (Frame, FiniteBooleanAlgebra)) else s
        obj.update(_order_payload(lat.poset))
    elif doc.kind == "space":
        obj.update(_space_obj(s))
    elif doc.kind == "mt":
        m: MTAlgebra = s
        if m.space is not None:
            obj["space"] = _space_obj(m.space)
        else:
            obj.update(_order_payload(m.ba.lattice.poset))
            obj["box"] = {m.labels[a]: m.labels[m.box[a]] for a in range(m.size)}
    elif doc.kind == "map":
        obj["mapping"] = dict(s)
    else:
        raise ValidationError(f"unknown kind {doc.kind!r}")
    return obj


def dumps(obj: Any) -> str:
    """Canonical JSON text: sorted keys, two-space indent, trailing newline."""
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def serialize(doc: Document) -> str:
    return dumps(to_object(doc))


def fixture_names() -> list[str]:
    root = resources.files("mtlab") / "fixtures"
    return sorted(p.name[: -len(".json")] for p in root.iterdir() if p.name.endswith(".json"))


def fixture_text(name: str) -> str:
    return (resources.files("mtlab") / "fixtures" / f"{name}.json").read_text(encoding="utf-8")


def read_text(ref: str) -> str:
    """File path, or the name of a built-in fixture."""
    path = Path(ref)
    if path.is_file():
        return path.read_text(encoding="utf-8")
    if ref in fixture_names():
        return fixture_text(ref)
    raise FileNotFoundError(ref)


def load(ref: str) -> Document:
    return parse(read_text(ref))


def resolve_map(doc: Document, src, dst) -> tuple[int, ...]:
    """Turn a label mapping into an index table between two parsed structures."""
    if doc.kind != "map":
        raise ValidationError(f"expected a map document, got {doc.kind!r}")
    src_index, n_src = _label_index(src)
    dst_index, _ = _label_index(dst)
    table = [-1] * n_src
    for k, v in doc.structure.items():
        if k not in src_index:
            raise ValidationError(f"mapping source {k!r} is not in the domain", witness=k)
        if v not in dst_index:
            raise ValidationError(f"mapping target {v!r} is not in the codomain", witness=v)
        table[src_index[k]] = dst_index[v]
    if -1 in table:
        missing = [lab for lab, i in src_index.items() if table[i] == -1][0]
        raise ValidationError(f"mapping is not total: {missing!r} has no image", witness=missing)
    return tuple(table)


def _label_index(s) -> tuple[dict[str, int], int]:
    if isinstance(s, MTAlgebra):
        return s.index, s.size
    if isinstance(s, FiniteSpace):
        return s.index, s.size
    if isinstance(s, Frame):
        return s.lattice.poset.index, s.size
    if isinstance(s, FiniteBooleanAlgebra):
        return s.lattice.poset.index, s.size
    if isinstance(s, FiniteLattice):
        return s.poset.index, s.size
    if isinstance(s, FinitePoset):
        return s.index, s.size
    raise ValidationError(f"cannot map between {type(s).__name__} structures")
