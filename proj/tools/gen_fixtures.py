#!/usr/bin/env python3
"""Writes the bundled instance files into fixtures/."""
import json
import pathlib

OUT = pathlib.Path(__file__).resolve().parent.parent / "fixtures"


def cycle(n):
    names = [str(i) for i in range(n)]
    edges = [[str(i), str((i + 1) % n)] for i in range(n)]
    return names, edges


def perm(mapping):
    return {str(k): str(v) for k, v in mapping.items() if k != v}


def arcs(count, inner, prefix="p"):
    """`count` arcs from a to b, each with `inner` interior vertices."""
    names = ["a", "b"]
    edges = []
    for i in range(1, count + 1):
        arc = [f"{prefix}{i}_{k}" for k in range(1, inner + 1)]
        names += arc
        path = ["a"] + arc + ["b"]
        edges += [[path[k], path[k + 1]] for k in range(len(path) - 1)]
    return names, edges


def arc_perm(sigma, inner, prefix="p", flip=False):
    m = {}
    for i, j in sigma.items():
        for k in range(1, inner + 1):
            kk = inner + 1 - k if flip else k
            m[f"{prefix}{i}_{k}"] = f"{prefix}{j}_{kk}"
    if flip:
        m["a"], m["b"] = "b", "a"
    return {k: v for k, v in m.items() if k != v}


def write(name, doc):
    (OUT / f"{name}.json").write_text(json.dumps(doc, indent=2) + "\n")


def main():
    OUT.mkdir(exist_ok=True)

    names, edges = arcs(3, 2, "x")
    theta_names = ["a", "b", "x1", "y1", "x2", "y2", "x3", "y3"]
    rename = {"x1_1": "x1", "x1_2": "y1", "x2_1": "x2", "x2_2": "y2", "x3_1": "x3", "x3_2": "y3"}
    edges = [[rename.get(u, u), rename.get(v, v)] for u, v in edges]
    write("theta", {
        "name": "theta",
        "vertices": theta_names,
        "edges": edges,
        "generators": [
            {"x1": "x2", "x2": "x1", "y1": "y2", "y2": "y1"},
            {"x1": "x2", "x2": "x3", "x3": "x1", "y1": "y2", "y2": "y3", "y3": "y1"},
        ],
        "cut_sets": [["a", "b"]],
    })

    names, edges = cycle(8)
    write("c8_cross", {
        "name": "c8_cross",
        "vertices": names,
        "edges": edges,
        "generators": [perm({i: (i + 2) % 8 for i in range(8)}), perm({i: (-i) % 8 for i in range(8)})],
        "cut_sets": [["0", "4"], ["2", "6"]],
    })
    write("c8_single", {
        "name": "c8_single",
        "vertices": names,
        "edges": edges,
        "cut_sets": [["0", "4"]],
    })
    write("c8_empty", {
        "name": "c8_empty",
        "vertices": names,
        "edges": edges,
        "generators": [perm({i: (i + 1) % 8 for i in range(8)})],
        "cut_sets": [],
    })
    write("c8_nested_degenerate", {
        "name": "c8_nested_degenerate",
        "vertices": names,
        "edges": edges,
        "cut_sets": [["1", "3"], ["5", "7"]],
    })

    names, edges = cycle(12)
    write("c12_nested", {
        "name": "c12_nested",
        "vertices": names,
        "edges": edges,
        "generators": [perm({i: (i + 6) % 12 for i in range(12)}), perm({i: (5 - i) % 12 for i in range(12)})],
        "cut_sets": [["1", "4"]],
    })

    names, edges = cycle(9)
    write("c9_thin", {
        "name": "c9_thin",
        "vertices": names,
        "edges": edges,
        "cut_sets": [["1", "4"], ["5", "8"]],
    })

    levels, cols = 7, 4
    v = lambda l, c: f"r{l}c{c}"
    names = [v(l, c) for l in range(levels) for c in range(cols)]
    edges = [[v(l, c), v(l, (c + 1) % cols)] for l in range(levels) for c in range(cols)]
    edges += [[v(l, c), v(l + 1, c)] for l in range(levels - 1) for c in range(cols)]
    write("grid", {
        "name": "grid",
        "vertices": names,
        "edges": edges,
        "generators": [
            {v(l, c): v(l, (c + 1) % cols) for l in range(levels) for c in range(cols)},
            {v(l, c): v(levels - 1 - l, c) for l in range(levels) for c in range(cols) if l != levels - 1 - l},
        ],
        "cut_sets": [[v(2, c) for c in range(cols)]],
    })

    names, edges = arcs(4, 2)
    write("wedge4", {
        "name": "wedge4",
        "vertices": names,
        "edges": edges,
        "generators": [
            arc_perm({1: 2, 2: 1}, 2),
            arc_perm({1: 2, 2: 3, 3: 4, 4: 1}, 2),
            arc_perm({i: i for i in range(1, 5)}, 2, flip=True),
        ],
        "cut_sets": [["a", "b"]],
    })

    names, edges = arcs(3, 6)
    write("theta_nested", {
        "name": "theta_nested",
        "vertices": names,
        "edges": edges,
        "generators": [arc_perm({1: 2, 2: 1}, 6), arc_perm({1: 2, 2: 3, 3: 1}, 6)],
        "cut_sets": [["a", "b"], ["p1_1", "p1_4"]],
    })

    write("p4", {
        "name": "p4",
        "vertices": ["0", "1", "2", "3"],
        "edges": [["0", "1"], ["1", "2"], ["2", "3"]],
        "cut_sets": [["1"]],
    })


if __name__ == "__main__":
    main()
