"""Flat-file formats: edge lists with a JSON header, clique reports, CSV summaries."""
from __future__ import annotations

import csv
import io
import json
from importlib import resources

import numpy as np

from .srg import EdgeLabel, LabeledGraph

_LABELS = {lab.tag: lab for lab in EdgeLabel if lab is not EdgeLabel.NONE}


def coord_string(p) -> str:
    return "".join(str(a) for a in p)


def parse_coord(s: str) -> tuple:
    return tuple(int(c) for c in s)


def edgelist_header(g: LabeledGraph) -> dict:
    meta = g.meta
    coords = all(isinstance(p, tuple) for p in g.vertices)
    return {
        "family": meta.get("family"),
        "n": meta.get("n"),
        "q": meta.get("q"),
        "v": g.order,
        "vertex_kind": "coords" if coords else "index",
        "vertices": [coord_string(p) if coords else str(p) for p in g.vertices],
        "meta": meta,
    }


def edgelist_text(g: LabeledGraph) -> str:
    out = io.StringIO()
    out.write(json.dumps(edgelist_header(g), sort_keys=True, separators=(",", ":")))
    out.write("\n")
    for u, v, lab in g.edges():
        out.write(f"{u} {v} {lab.tag}\n")
    return out.getvalue()


def write_edgelist(g: LabeledGraph, path) -> None:
    with open(path, "w", newline="\n") as fh:
        fh.write(edgelist_text(g))


def parse_edgelist(text: str) -> LabeledGraph:
    lines = text.splitlines()
    header = json.loads(lines[0])
    nv = header["v"]
    adj = np.zeros((nv, nv), dtype=bool)
    labels = np.zeros((nv, nv), dtype=np.uint8)
    for line in lines[1:]:
        if not line.strip():
            continue
        u, v, tag = line.split()
        u, v = int(u), int(v)
        adj[u, v] = adj[v, u] = True
        labels[u, v] = labels[v, u] = _LABELS[tag]
    if header.get("vertex_kind", "coords") == "coords":
        verts = tuple(parse_coord(s) for s in header["vertices"])
    else:
        verts = tuple(int(s) for s in header["vertices"])
    return LabeledGraph(verts, adj, labels, header.get("meta") or {})


def read_edgelist(path) -> LabeledGraph:
    with open(path) as fh:
        return parse_edgelist(fh.read())


def clique_report(records, histogram, expected=None) -> dict:
    hist = {k.value: v for k, v in histogram.items()}
    rep = {"cliques": [r.as_dict() for r in records], "histogram": hist,
           "total": sum(hist.values())}
    if expected is not None:
        exp = {k.value: v for k, v in expected.items()}
        rep["expected"] = exp
        rep["table1_match"] = all(hist.get(k, 0) == v for k, v in exp.items()) and \
            hist.get("Unclassified", 0) == 0 and rep["total"] == sum(exp.values())
    return rep


def histogram_csv(histogram, expected=None) -> str:
    out = io.StringIO()
    w = csv.writer(out, lineterminator="\n")
    w.writerow(["class", "count", "expected"])
    for k, v in histogram.items():
        exp = "" if expected is None else expected.get(k, 0)
        w.writerow([k.value, v, exp])
    return out.getvalue()


def load_schema(name: str) -> dict:
    """Load one of the JSON schemas shipped with the package."""
    return json.loads(resources.files("polarsrg").joinpath("schemas", name).read_text())


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"
