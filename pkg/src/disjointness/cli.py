"""Command-line front door.

Commands: validate, stats, graph, witness, search, gen, render.
Exit codes: 0 success, 1 domain failure (validation, distance), 2 usage or
parse errors.  All outputs are deterministic for a fixed invocation.
"""
from __future__ import annotations

import argparse
import hashlib
import json
import sys

from . import io as psio
from .bounds import choose2, kappa
from .construct import collection_to_json, construct_menger_paths
from .errors import (
    DisjointnessError,
    GeneralPositionError,
    NotDistanceTwoError,
    ParseError,
)
from .generators import FAMILIES, generate
from .geometry import check_general_position, seg
from .graph import (
    build_graph,
    degree_stats,
    distance,
    graph_to_json,
    vertex_connectivity,
)
from .svg import render_svg

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_USAGE = 2


def _load(path):
    try:
        return psio.load(path)
    except FileNotFoundError:
        raise ParseError(f"no such file: {path}")


def cmd_validate(args) -> int:
    ps = _load(args.file)
    v = check_general_position(ps.points)
    if v is None:
        print(f"ok: {len(ps)} points in general position")
        return EXIT_OK
    print(f"violation: {v.kind} at indices {' '.join(map(str, v.indices))}")
    return EXIT_DOMAIN


def cmd_stats(args) -> int:
    ps = _load(args.file).validate()
    g = build_graph(ps)
    n = len(ps)
    dmin, dmax, hist = degree_stats(g)
    payload = {
        "n": n,
        "vertices": g.n,
        "edges": g.edge_count(),
        "delta": dmin,
        "Delta": dmax,
        "kappa_n": kappa(n),
        "Delta_formula": choose2(n - 2),
        "degree_histogram": {str(k): v for k, v in hist.items()},
    }
    if args.exact:
        payload["kappa_exact"] = vertex_connectivity(g)
    if args.json:
        print(json.dumps(payload))
    else:
        line = (f"n={n} vertices={g.n} edges={payload['edges']} "
                f"delta={dmin} Delta={dmax} kappa_n={payload['kappa_n']}")
        if args.exact:
            line += f" kappa_exact={payload['kappa_exact']}"
        print(line)
    return EXIT_OK


def cmd_graph(args) -> int:
    ps = _load(args.file).validate()
    g = build_graph(ps)
    text = graph_to_json(g)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
        print(f"wrote {args.out}")
    else:
        print(text)
    return EXIT_OK


def _parse_segment(tok: str):
    parts = tok.replace("-", ",").split(",")
    if len(parts) != 2:
        raise ParseError(f"segment must be 'i,j': got {tok!r}")
    try:
        return seg(int(parts[0]), int(parts[1]))
    except ValueError as e:
        raise ParseError(str(e))


def cmd_witness(args) -> int:
    ps = _load(args.file).validate()
    a = _parse_segment(args.a)
    b = _parse_segment(args.b)
    g = build_graph(ps)
    va, vb = g.vertex(a), g.vertex(b)
    d = distance(g, va, vb)
    if d != 2:
        print(f"error: d(a,b) = {'unreachable' if d is None else d}, need 2",
              file=sys.stderr)
        return EXIT_DOMAIN
    coll = construct_menger_paths(ps, a, b)
    text = collection_to_json(coll)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    if args.svg:
        with open(args.svg, "w", encoding="utf-8") as fh:
            fh.write(render_svg(ps, highlight_ab=(a, b), paths=coll.paths))
    print(f"paths={coll.size} kappa_n={coll.kappa_n} case={coll.case} "
          f"subcase={coll.subcase}", file=sys.stderr)
    return EXIT_OK


def cmd_search(args) -> int:
    rows = []
    extreme = None
    for t in range(args.trials):
        ps = generate("random_uniform", args.n, args.seed + t, args.bound)
        g = build_graph(ps)
        dmin, _, _ = degree_stats(g)
        gap = dmin - kappa(args.n)
        row = {"trial": t, "delta": dmin, "kappa_n": kappa(args.n), "gap": gap}
        if args.exact:
            kex = vertex_connectivity(g)
            row["kappa_exact"] = kex
            row["gap_exact"] = dmin - kex
        rows.append(row)
        key = row.get("gap_exact", row["gap"])
        if extreme is None or key > extreme[0]:
            extreme = (key, ps)
        print(f"trial {t}: {row}", file=sys.stderr)
    gaps = [r.get("gap_exact", r["gap"]) for r in rows]
    dist = {}
    for v in gaps:
        dist[v] = dist.get(v, 0) + 1
    summary = {"n": args.n, "trials": args.trials, "seed": args.seed,
               "distribution": {str(k): v for k, v in sorted(dist.items())},
               "max_gap": max(gaps), "rows": rows}
    print(json.dumps(summary))
    if args.out and extreme is not None:
        psio.dump(extreme[1], args.out)
        print(f"extremal specimen written to {args.out}", file=sys.stderr)
    return EXIT_OK


def cmd_gen(args) -> int:
    ps = generate(args.family, args.n, args.seed, args.bound)
    text = psio.dumps_text(ps)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    digest = hashlib.sha256(text.encode()).hexdigest()
    print(f"sha256={digest}", file=sys.stderr)
    return EXIT_OK


def cmd_render(args) -> int:
    ps = _load(args.file).validate()
    paths = None
    ab = None
    if args.cert:
        with open(args.cert, "r", encoding="utf-8") as fh:
            cert = json.load(fh)
        paths = [[tuple(v) for v in path] for path in cert["paths"]]
        ab = (tuple(cert["a"]), tuple(cert["b"]))
    text = render_svg(ps, highlight_ab=ab, paths=paths)
    with open(args.svg, "w", encoding="utf-8") as fh:
        fh.write(text)
    print(f"wrote {args.svg}")
    return EXIT_OK


def make_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="disjointness",
        description="connectivity toolkit for disjointness graphs of segments")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check a point-set file")
    p.add_argument("file")
    p.set_defaults(fn=cmd_validate)

    p = sub.add_parser("stats", help="graph statistics and bounds")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.add_argument("--exact", action="store_true",
                   help="also compute exact vertex connectivity")
    p.set_defaults(fn=cmd_stats)

    p = sub.add_parser("graph", help="export D(P) as JSON")
    p.add_argument("file")
    p.add_argument("--out")
    p.set_defaults(fn=cmd_graph)

    p = sub.add_parser("witness", help="construct Menger path certificate")
    p.add_argument("file")
    p.add_argument("a", help="segment as 'i,j'")
    p.add_argument("b", help="segment as 'k,l'")
    p.add_argument("--out")
    p.add_argument("--svg")
    p.set_defaults(fn=cmd_witness)

    p = sub.add_parser("search", help="sample random sets, report gap stats")
    p.add_argument("n", type=int)
    p.add_argument("--trials", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--bound", type=int, default=None)
    p.add_argument("--exact", action="store_true")
    p.add_argument("--out", help="where to save the extremal specimen")
    p.set_defaults(fn=cmd_search)

    p = sub.add_parser("gen", help="generate a point-set file")
    p.add_argument("family", choices=sorted(FAMILIES))
    p.add_argument("n", type=int)
    p.add_argument("seed", type=int)
    p.add_argument("--bound", type=int, default=None)
    p.add_argument("--out")
    p.set_defaults(fn=cmd_gen)

    p = sub.add_parser("render", help="render a point set (and certificate) to SVG")
    p.add_argument("file")
    p.add_argument("--svg", required=True)
    p.add_argument("--cert", help="path certificate JSON to overlay")
    p.set_defaults(fn=cmd_render)
    return ap


def main(argv=None) -> int:
    ap = make_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code not in (0, None) else EXIT_OK
    try:
        return args.fn(args)
    except ParseError as e:
        print(f"parse error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (GeneralPositionError, NotDistanceTwoError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_DOMAIN
    except DisjointnessError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
