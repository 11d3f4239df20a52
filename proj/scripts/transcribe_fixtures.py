#!/usr/bin/env python3
"""Regenerate the graph fixtures in fixtures/ from drawing coordinates.

Each graph is given as vertex coordinates plus an edge list.  The rotation at
every internal vertex is the clockwise order of its incident edges, read off
from the angles of the neighbours.
"""
import json
import math
import pathlib
import sys

OUT = pathlib.Path(__file__).resolve().parent.parent / "fixtures"


def polar(deg, r=4.0):
    return (r * math.cos(math.radians(deg)), r * math.sin(math.radians(deg)))


def build(name, n, internal, boundary_pos, edges, extra=None):
    """internal: {id: (color, (x, y))}; boundary_pos: {i: (x, y)};
    edges: [(edge_id, u, v)] with boundary endpoints given as ints."""
    pos = {**{i: p for i, p in boundary_pos.items()},
           **{v: p for v, (_, p) in internal.items()}}
    incident = {v: [] for v in internal}
    for eid, u, v in edges:
        for a, b in ((u, v), (v, u)):
            if a in incident:
                dx = pos[b][0] - pos[a][0]
                dy = pos[b][1] - pos[a][1]
                incident[a].append((math.atan2(dy, dx), eid))
    rotation = {}
    for v, lst in incident.items():
        # clockwise = decreasing polar angle
        lst.sort(key=lambda t: -t[0])
        rotation[v] = [eid for _, eid in lst]
    doc = {
        "n": n,
        "internal": [{"id": v, "color": c} for v, (c, _) in internal.items()],
        "edges": [{"id": eid, "ends": [u, v]} for eid, u, v in edges],
        "rotation": rotation,
    }
    if extra:
        doc.update(extra)
    path = OUT / f"{name}.json"
    path.write_text(json.dumps(doc, indent=1) + "\n")
    print("wrote", path)


def square4():
    internal = {
        "v1": ("white", (0, 1)), "v2": ("black", (1, 0)),
        "v3": ("white", (0, -1)), "v4": ("black", (-1, 0)),
    }
    bpos = {1: (0, 2), 2: (2, 0), 3: (0, -2), 4: (-2, 0)}
    edges = [(f"l{i}", i, f"v{i}") for i in range(1, 5)]
    edges += [("v1v2", "v1", "v2"), ("v2v3", "v2", "v3"),
              ("v3v4", "v3", "v4"), ("v4v1", "v4", "v1")]
    build("square4", 4, internal, bpos, edges, {
        "expected": {"perm": [3, 4, 5, 6], "faces": 5,
                     "source_internal": [[2, 4]]}})


def schubert36():
    W, B = "white", "black"
    internal = {
        "a": (W, (-2.75, .25)), "b": (B, (-1.5, 2)), "c": (W, (1.5, 2)),
        "d": (B, (2.75, .25)), "e": (B, (-1.5, -.8)), "f": (W, (-.45, .75)),
        "g": (B, (.45, .75)), "h": (W, (1.5, -.8)), "i": (B, (.5, -2)),
        "j": (W, (-.5, -2)), "b'": (W, (-1.75, 2.75)),
        "d'": (W, (3.4, .125)), "i'": (W, (1.25, -2.75)),
    }
    # drawing node k sits at angle 180-60(k-1) and carries label k+1 (mod 6)
    bpos = {}
    for k in range(1, 7):
        label = k % 6 + 1
        bpos[label] = polar(180 - 60 * (k - 1))
    edges = [
        ("i", 2, "a"), ("d", "a", "b"), ("b", "b", "b'"), ("a", "b'", 3),
        ("e", "b", "f"), ("f", "f", "g"), ("g", "g", "c"), ("c", "c", 4),
        ("h", "c", "d"), ("n", "d", "d'"), ("o", "d'", 5),
        ("m", "d", "h"), ("r", "h", "i"), ("t", "i", "i'"), ("u", "i'", 6),
        ("q", "i", "j"), ("s", "j", 1),
        ("p", "j", "e"), ("j", "e", "a"), ("k", "e", "f"), ("l", "g", "h"),
    ]
    build("schubert36", 6, internal, bpos, edges, {
        "expected": {
            "perm": [3, 5, 6, 7, 8, 10], "faces": 9,
            "source_labels": [[1, 2, 6], [2, 3, 6], [2, 3, 4], [3, 4, 5],
                              [4, 5, 6], [1, 5, 6], [1, 3, 6], [3, 5, 6],
                              [2, 3, 5]],
            "target_labels": [[3, 4, 5], [4, 5, 6], [1, 5, 6], [1, 2, 6],
                              [1, 2, 4], [2, 3, 4], [3, 4, 6], [2, 4, 6],
                              [2, 5, 6]]}})


def d4():
    W, B = "white", "black"
    internal = {
        "a": (W, (-.75, 2.75)), "b": (B, (.75, 2.75)), "c": (B, (-.75, 1.5)),
        "d": (W, (.75, 1.5)), "e": (B, (-2.75, .75)), "f": (W, (-1.5, .75)),
        "g": (W, (-2.75, -.75)), "h": (B, (-1.5, -.75)), "i": (B, (1.5, .75)),
        "j": (W, (2.75, .75)), "k": (W, (1.5, -.75)), "l": (B, (2.75, -.75)),
        "m": (W, (-.75, -1.5)), "n": (B, (.75, -1.5)), "o": (B, (-.75, -2.75)),
        "p": (W, (.75, -2.75)),
    }
    angles = {6: 157.5, 7: 112.5, 8: 67.5, 1: 22.5, 2: -22.5, 3: -67.5,
              4: -112, 5: -157}
    bpos = {i: polar(t) for i, t in angles.items()}
    pairs = [(1, "j"), (2, "l"), (3, "p"), (4, "o"), (5, "g"), (6, "e"),
             (7, "a"), (8, "b"),
             ("a", "b"), ("b", "d"), ("c", "d"), ("c", "a"), ("e", "f"),
             ("e", "g"), ("f", "h"), ("g", "h"), ("i", "j"), ("i", "k"),
             ("j", "l"), ("k", "l"), ("m", "n"), ("m", "o"), ("n", "p"),
             ("o", "p"), ("d", "i"), ("k", "n"), ("m", "h"), ("f", "c")]
    edges = [(f"{u}{v}", u, v) for u, v in pairs]
    build("d4", 8, internal, bpos, edges, {
        "expected": {
            "faces": 13,
            "source_labels": [[4, 6, 7, 8], [1, 6, 7, 8], [1, 2, 6, 8],
                              [1, 2, 3, 8], [2, 3, 4, 8], [2, 3, 4, 5],
                              [2, 4, 5, 6], [4, 5, 6, 7], [4, 5, 6, 8],
                              [2, 6, 7, 8], [1, 2, 4, 8], [2, 3, 4, 6],
                              [2, 4, 6, 8]]}})


def nonplucker36():
    W, B = "white", "black"
    inner = ["a", "b", "c", "d", "e", "f"]
    internal = {}
    for t, v in enumerate(inner):
        internal[v] = (W if t % 2 == 0 else B, polar(-60 * t, 1.5))
    outer_angles = [10, -70, -110, -190, -230, -310]
    for t, v in enumerate(inner):
        internal[v + "'"] = (B if t % 2 == 0 else W,
                             polar(outer_angles[t], 2.75))
    bpos = {i: polar(-60 * (i - 1)) for i in range(1, 7)}
    edges = []
    for t, v in enumerate(inner):
        nxt = inner[(t + 1) % 6]
        edges.append((f"{v}{nxt}", v, nxt))
        edges.append((f"{v}{v}'", v, v + "'"))
        edges.append((f"{v}'{t + 1}", v + "'", t + 1))
    edges += [("a'f'", "a'", "f'"), ("c'b'", "c'", "b'"),
              ("e'd'", "e'", "d'")]
    build("nonplucker36", 6, internal, bpos, edges, {
        "expected": {
            "faces": 10,
            "reference_labels": [[2, 4, 6], [1, 2, 4], [3, 4, 6], [2, 5, 6],
                              [1, 2, 3], [3, 4, 5], [1, 5, 6], [2, 3, 4],
                              [4, 5, 6], [1, 2, 6]]}})


def chamber():
    """Graph for the reduced word s2 s1 s2 in S3 (double wiring diagram)."""
    W, B = "white", "black"
    internal = {
        "a": (W, (-4, -2)), "b": (B, (-2, -2)), "c": (W, (0, -2)),
        "d": (B, (2, -2)), "e": (W, (4, -2)), "f": (W, (-2, 0)),
        "g": (B, (0, 0)), "h": (W, (2, 0)), "i": (W, (0, 2)),
    }
    bpos = {1: (5, 2), 2: (5, 0), 3: (5, -2), 4: (-5, -2), 5: (-5, 0),
            6: (-5, 2)}
    edges = [
        ("i6", "i", 6), ("i1", "i", 1),
        ("f5", "f", 5), ("fg", "f", "g"), ("gh", "g", "h"), ("h2", "h", 2),
        ("a4", "a", 4), ("ab", "a", "b"), ("bc", "b", "c"), ("cd", "c", "d"),
        ("de", "d", "e"), ("e3", "e", 3),
        ("bf", "b", "f"), ("dh", "d", "h"), ("gi", "g", "i"),
    ]
    build("chamber", 6, internal, bpos, edges, {
        "roles": {"d1": "i1", "d2": "h2", "d3": "e3",
                  "t1": "bf", "t2": "gi", "t3": "dh"}})


def hexc(a, b, c):
    ax, ay = 0.0, 1.0
    bx, by = math.cos(math.radians(-30)), math.sin(math.radians(-30))
    cx, cy = math.cos(math.radians(210)), math.sin(math.radians(210))
    return (a * ax + b * bx + c * cx, a * ay + b * by + c * cy)


def tri(m):
    """Honeycomb graph for three transverse flags in m-space (n = 3m)."""
    internal = {}
    for a in range(m):
        for b in range(m - a):
            c = m - 1 - a - b
            internal[f"w{a}.{b}.{c}"] = ("white", hexc(a, b, c))
    for a in range(m - 1):
        for b in range(m - 1 - a):
            c = m - 2 - a - b
            internal[f"b{a}.{b}.{c}"] = ("black", hexc(a, b, c))
    bpos, edges = {}, []
    for i in range(1, m + 1):
        bpos[i] = hexc(m - i + .5, i - .5, 0)
        edges.append((f"L{i}", i, f"w{m - i}.{i - 1}.0"))
    for j in range(1, m + 1):
        i = m + j
        bpos[i] = hexc(0, m - j + .5, j - .5)
        edges.append((f"L{i}", i, f"w0.{m - j}.{j - 1}"))
    for j in range(1, m + 1):
        i = 2 * m + j
        bpos[i] = hexc(j - .5, 0, m - j + .5)
        edges.append((f"L{i}", i, f"w{j - 1}.0.{m - j}"))
    for a in range(m - 1):
        for b in range(m - 1 - a):
            c = m - 2 - a - b
            blk = f"b{a}.{b}.{c}"
            for w in ((a + 1, b, c), (a, b + 1, c), (a, b, c + 1)):
                wid = "w%d.%d.%d" % w
                edges.append((f"{blk}-{wid}", blk, wid))
    build(f"tri{m}", 3 * m, internal, bpos, edges)


def matrices():
    ex = {"k": 3, "n": 5, "rows": [["1", "0", "1", "0", "1"],
                                   ["-1", "1", "0", "0", "0"],
                                   ["1", "-1", "0", "1", "1"]]}
    (OUT / "ex35.json").write_text(json.dumps(ex, indent=1) + "\n")
    d4m = {"k": 4, "n": 8, "rows": [
        ["2", "1", "1", "0", "-1", "0", "1", "0"],
        ["-1", "0", "2", "1", "1", "0", "-1", "0"],
        ["1", "0", "-1", "0", "2", "1", "1", "0"],
        ["-1", "0", "1", "0", "-1", "0", "2", "1"]]}
    (OUT / "d4_unit_matrix.json").write_text(json.dumps(d4m, indent=1) + "\n")


if __name__ == "__main__":
    OUT.mkdir(exist_ok=True)
    square4()
    schubert36()
    d4()
    nonplucker36()
    chamber()
    tri(3)
    tri(6)
    matrices()
    sys.exit(0)
