#!/usr/bin/env python3
"""Write the sample weight and move-script fixtures used by the CLI golden tests."""
import json
import pathlib
import random

FIX = pathlib.Path(__file__).resolve().parent.parent / "fixtures"


def dump(name, doc):
    (FIX / name).write_text(json.dumps(doc, indent=1) + "\n")


def main():
    rng = random.Random(36)
    graph = json.loads((FIX / "schubert36.json").read_text())
    weights = {}
    for e in graph["edges"]:
        p, q = rng.randint(1, 9), rng.randint(1, 9)
        weights[e["id"]] = f"{p}/{q}"
    dump("schubert36_weights.json", weights)
    dump("square4_moves.json", [
        {"kind": "urban-renewal", "site": "F1"},
        {"kind": "boundary-add", "site": 1},
        {"kind": "boundary-remove", "site": "b1"},
    ])
    dump("bad_move.json", [{"kind": "contract", "site": "v1"}])


if __name__ == "__main__":
    main()
