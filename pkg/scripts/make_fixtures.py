"""Regenerate the bundled fixture documents in canonical form.

    python3 scripts/make_fixtures.py [--check]

With --check nothing is written; the script exits 1 if any file on disk
differs from what would be generated.
"""

import argparse
import sys
from pathlib import Path

from mtlab.documents import Document, dumps, serialize
from mtlab.frames import Frame
from mtlab.mt import mt_from_table
from mtlab.order import boolean_powerset, lattice_structure, validate_poset
from mtlab.spaces import discrete_space, indiscrete_space, sierpinski_space, space_from_labels

FIXTURES = Path(__file__).resolve().parents[1] / "src" / "mtlab" / "fixtures"


def chain(n):
    labels = [f"c{i}" for i in range(n)]
    return lattice_structure(validate_poset(labels, list(zip(labels, labels[1:]))))


def documents() -> dict[str, str]:
    sier = sierpinski_space()
    docs = {
        "sierpinski": Document("space", sier, "sierpinski"),
        "sierpinski_mt": Document("mt", mt_from_table(2, [sier.interior(a) for a in range(4)], None, sier.points, space=sier), "sierpinski"),
        # same algebra given only by its box table
        "sierpinski_table": Document("mt", mt_from_table(2, [sier.interior(a) for a in range(4)], None, sier.points), "sierpinski-table"),
        "discrete2": Document("space", discrete_space(2), "discrete2"),
        "indiscrete2": Document("space", indiscrete_space(2), "indiscrete2"),
        "three_point": Document(
            "space", space_from_labels(["a", "b", "c"], [[], ["a"], ["a", "b"], ["a", "c"], ["a", "b", "c"]]), "three-point"
        ),
        "chain3": Document("frame", Frame(chain(3)), "chain3"),
        "chain2_poset": Document("poset", validate_poset(["lo", "hi"], [("lo", "hi")]), "chain2"),
        "m3": Document(
            "lattice",
            lattice_structure(validate_poset(["0", "a", "b", "c", "1"], [("0", "a"), ("0", "b"), ("0", "c"), ("a", "1"), ("b", "1"), ("c", "1")])),
            "m3",
        ),
        "boolean4": Document("boolean", boolean_powerset(2, ("p", "q")), "boolean4"),
        "boolean8": Document("boolean", boolean_powerset(3, ("p", "q", "r")), "boolean8"),
        # point maps and element maps, by label
        "map_discrete2_to_sierpinski": Document("map", {"0": "0", "1": "1"}, "identity points"),
        "map_sierpinski_swap": Document("map", {"0": "1", "1": "0"}, "swap points"),
        "map_powerset_identity": Document("map", {"{}": "{}", "{0}": "{0}", "{1}": "{1}", "{0,1}": "{0,1}"}, "P(identity)"),
    }
    out = {name: serialize(doc) for name, doc in docs.items()}
    # neither the whole space nor the union of {0} and {1} is open
    out["broken_topology"] = dumps({"kind": "space", "name": "broken", "points": ["0", "1"], "opens": [[], ["0"], ["1"]]})
    return out


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--check", action="store_true")
    args = ap.parse_args()
    stale = []
    for name, text in sorted(documents().items()):
        path = FIXTURES / f"{name}.json"
        if args.check:
            if not path.exists() or path.read_text(encoding="utf-8") != text:
                stale.append(name)
        else:
            path.write_text(text, encoding="utf-8")
    for name in stale:
        print(f"stale fixture: {name}")
    return 1 if stale else 0


if __name__ == "__main__":
    sys.exit(main())
