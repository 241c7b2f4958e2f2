"""Command-line front end.

Exit status: 0 on success, 1 on an operational error (a JSON error object is
written to stderr), 2 when a computation contradicts a known value.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

import numpy as np

from . import __version__
from .cliques import (TABLE1_COUNTS, classify_all, delsarte_bound,
                      maximal_cliques, size_histogram)
from .errors import PolarSRGError
from .export import (clique_report, dumps, edgelist_header, edgelist_text,
                     histogram_csv)
from .iso import DEFAULT_BUDGET, iso_check
from .quadric import quadric_new
from .srg import (Family, Gamma2Outcome, build, distance_two_subgraph_diameter,
                  printed_multiplicities, spectrum_of, theoretical_params,
                  trace_checks, verify_srg)

EXIT_OK, EXIT_ERROR, EXIT_MISMATCH = 0, 1, 2
COMMANDS = ("build", "params", "spectrum", "cliques", "classify", "isocheck", "gamma2", "report")


class UsageError(PolarSRGError, ValueError):
    pass


def parse_graph_spec(text: str) -> tuple:
    """'gn:3:2' -> ('gn', 3, 2); 'noplus:3' -> ('noplus', 3, 2)."""
    parts = text.split(":")
    try:
        fam = Family(parts[0])
        n = int(parts[1])
        q = int(parts[2]) if len(parts) > 2 else 2
    except (ValueError, IndexError):
        raise UsageError(f"bad graph spec {text!r}; expected family:n[:q]") from None
    if fam is Family.NOPLUS and q != 2:
        raise UsageError("noplus graphs exist here only for q = 2")
    return fam.value, n, q


def _threads(args) -> int:
    if args.threads is not None:
        return max(1, args.threads)
    try:
        return max(1, int(os.environ.get("POLARSRG_THREADS", "1")))
    except ValueError:
        return 1


def _emit(args, text: str) -> None:
    if args.output and args.output != "-":
        with open(args.output, "w", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _graph(args):
    if args.family == "noplus" and args.q != 2:
        raise UsageError("noplus forces q = 2")
    return build(args.family, args.n, args.q)


def _params_block(args):
    theo = theoretical_params(args.family, args.n, args.q)
    ver = verify_srg(_graph(args))
    return theo, ver


def _spectrum_block(p):
    s = spectrum_of(p)
    sizes_ok, trace_ok = trace_checks(s, p)
    pm1, pm2 = printed_multiplicities(p)
    return {
        **s.as_dict(),
        "trace_checks": {"sum_of_multiplicities": sizes_ok, "trace_zero": trace_ok},
        "closed_form_multiplicities": {
            "values": [str(pm1), str(pm2)],
            "integral": pm1.denominator == 1 and pm2.denominator == 1,
            "agrees_with_trace": (pm1, pm2) == (s.m1, s.m2),
        },
    }, s


def _gamma2(g, vertices):
    hist = {}
    per_vertex = []
    for v in vertices:
        d = distance_two_subgraph_diameter(g, v)
        key = d.value if isinstance(d, Gamma2Outcome) else d
        per_vertex.append(key)
        hist[str(key)] = hist.get(str(key), 0) + 1
    return dict(sorted(hist.items())), per_vertex


def _iso_expectation(left, right):
    """Known answer for G_n(2) versus NO+(2n+2, 2), or None."""
    fams = {left[0], right[0]}
    if fams == {"gn", "noplus"} and left[1] == right[1] and left[2] == right[2] == 2:
        return "isomorphic" if left[1] <= 2 else "non_isomorphic"
    return None


# ---------------------------------------------------------------------------
# commands

def cmd_build(args) -> int:
    g = _graph(args)
    if args.format == "json":
        doc = {"header": edgelist_header(g),
               "edges": [[u, v, lab.tag] for u, v, lab in g.edges()]}
        _emit(args, dumps(doc))
    else:
        _emit(args, edgelist_text(g))
    return EXIT_OK


def cmd_params(args) -> int:
    theo, ver = _params_block(args)
    match = theo == ver
    doc = {"family": args.family, "n": args.n, "q": args.q,
           "theoretical": list(theo.as_tuple()), "verified": list(ver.as_tuple()),
           "match": match}
    _emit(args, dumps(doc))
    return EXIT_OK if match else EXIT_MISMATCH


def cmd_spectrum(args) -> int:
    theo, ver = _params_block(args)
    block, s = _spectrum_block(ver)
    block["delsarte_bound"] = delsarte_bound(s)
    block["params"] = list(ver.as_tuple())
    _emit(args, dumps(block))
    return EXIT_OK if theo == ver else EXIT_MISMATCH


def cmd_cliques(args) -> int:
    g = _graph(args)
    cl = maximal_cliques(g, _threads(args))
    hist = size_histogram(cl)
    if args.format == "csv":
        lines = ["size,count"] + [f"{k},{v}" for k, v in hist.items()]
        _emit(args, "\n".join(lines) + "\n")
    else:
        _emit(args, dumps({"cliques": [list(c) for c in cl],
                           "histogram": {str(k): v for k, v in hist.items()},
                           "total": len(cl)}))
    return EXIT_OK


def cmd_classify(args) -> int:
    if (args.family, args.n, args.q) != ("gn", 3, 2):
        raise UsageError("classification is implemented for --family gn --n 3 --q 2")
    g = _graph(args)
    qc = quadric_new(3, 2)
    hist, records = classify_all(g, qc, maximal_cliques(g, _threads(args)), strict=False)
    expected = TABLE1_COUNTS if args.expect_table1 else None
    rep = clique_report(records, hist, TABLE1_COUNTS)
    if args.format == "csv":
        _emit(args, histogram_csv(hist, TABLE1_COUNTS))
    else:
        _emit(args, dumps(rep))
    if expected is not None and not rep["table1_match"]:
        return EXIT_MISMATCH
    return EXIT_OK


def cmd_isocheck(args) -> int:
    left = parse_graph_spec(args.left)
    right = parse_graph_spec(args.right)
    g1, g2 = build(*left), build(*right)
    res = iso_check(g1, g2, args.budget)
    doc = {"left": args.left, "right": args.right, **res.as_dict()}
    _emit(args, dumps(doc))
    expect = _iso_expectation(left, right)
    got = doc["result"]
    if expect is not None and got != "unknown" and got != expect:
        return EXIT_MISMATCH
    return EXIT_OK


def cmd_gamma2(args) -> int:
    g = _graph(args)
    verts = list(range(g.order))
    if args.sample:
        rng = np.random.default_rng(args.seed)
        verts = sorted(int(v) for v in rng.choice(g.order, size=min(args.sample, g.order),
                                                  replace=False))
    hist, per_vertex = _gamma2(g, verts)
    _emit(args, dumps({"vertices": verts, "diameters": per_vertex, "histogram": hist}))
    return EXIT_OK


def build_report(args) -> tuple[dict, bool]:
    g = _graph(args)
    theo = theoretical_params(args.family, args.n, args.q)
    ver = verify_srg(g)
    spec_block, s = _spectrum_block(ver)
    cl = maximal_cliques(g, _threads(args))
    table1 = None
    if (args.family, args.n, args.q) == ("gn", 3, 2):
        hist, records = classify_all(g, quadric_new(3, 2), cl, strict=False)
        table1 = clique_report(records, hist, TABLE1_COUNTS)["table1_match"]
    iso_results = []
    if args.q == 2:
        other = "noplus" if args.family == "gn" else "gn"
        h = build(other, args.n, 2)
        res = iso_check(g, h, args.budget, cliques1=cl)
        iso_results.append({"left": f"{args.family}:{args.n}:2", "right": f"{other}:{args.n}:2",
                            **res.as_dict()})
    ghist, _ = _gamma2(g, range(g.order))
    report = {
        "meta": {"family": args.family, "n": args.n, "q": args.q, "v": g.order,
                 "version": __version__},
        "params_theoretical": list(theo.as_tuple()),
        "params_verified": list(ver.as_tuple()),
        "spectrum": spec_block,
        "delsarte_bound": delsarte_bound(s),
        "clique_histogram": {str(k): v for k, v in size_histogram(cl).items()},
        "table1_match": table1,
        "iso_results": iso_results,
        "gamma2_diameters": ghist,
    }
    ok = theo == ver and table1 is not False
    expect = _iso_expectation(("gn", args.n, 2), ("noplus", args.n, 2))
    for r in iso_results:
        if expect is not None and r["result"] not in ("unknown", expect):
            ok = False
    return report, ok


def cmd_report(args) -> int:
    report, ok = build_report(args)
    _emit(args, dumps(report))
    return EXIT_OK if ok else EXIT_MISMATCH


HANDLERS = {
    "build": cmd_build, "params": cmd_params, "spectrum": cmd_spectrum,
    "cliques": cmd_cliques, "classify": cmd_classify, "isocheck": cmd_isocheck,
    "gamma2": cmd_gamma2, "report": cmd_report,
}


def make_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--family", choices=[f.value for f in Family], default="gn")
    common.add_argument("--n", type=int, default=3)
    common.add_argument("--q", type=int, default=2)
    common.add_argument("--format", choices=["json", "csv", "edgelist"], default=None)
    common.add_argument("--output", "-o", default=None, help="output path (default stdout)")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--threads", type=int, default=None,
                        help="worker processes for clique enumeration (env POLARSRG_THREADS)")
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                        help="node limit for the isomorphism search")

    parser = argparse.ArgumentParser(prog="polarsrg", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("build", parents=[common], help="write the graph as an edge list")
    sub.add_parser("params", parents=[common], help="theoretical vs counted parameters")
    sub.add_parser("spectrum", parents=[common], help="eigenvalues, multiplicities, clique bound")
    sub.add_parser("cliques", parents=[common], help="list all maximal cliques")
    p = sub.add_parser("classify", parents=[common], help="classes of maximal cliques of G_3(2)")
    p.add_argument("--expect-table1", action="store_true",
                   help="exit 2 unless the class counts are 10752/960/15/840/210")
    p = sub.add_parser("isocheck", parents=[common], help="compare two graphs")
    p.add_argument("--left", required=True, help="family:n[:q], e.g. gn:3:2")
    p.add_argument("--right", required=True, help="family:n[:q], e.g. noplus:3")
    p = sub.add_parser("gamma2", parents=[common], help="diameters of distance-2 subgraphs")
    p.add_argument("--sample", type=int, default=0, help="only this many random vertices")
    sub.add_parser("report", parents=[common], help="full pipeline as one JSON document")
    return parser


_DEFAULT_FORMAT = {"build": "edgelist", "classify": "json"}


def main(argv=None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    if args.format is None:
        args.format = _DEFAULT_FORMAT.get(args.command, "json")
    try:
        return HANDLERS[args.command](args)
    except (PolarSRGError, ValueError, OSError) as exc:
        err = {"error": type(exc).__name__, "message": str(exc), "command": args.command}
        sys.stderr.write(json.dumps(err, sort_keys=True) + "\n")
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
