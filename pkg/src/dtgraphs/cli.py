"""Command-line interface.

Exit codes: 0 = DT / success, 1 = not DT / no answer, 2 = input error,
unsupported input or failed self-check.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from .errors import DTGraphError, TooLarge
from .generators import WeightDistribution, gen_dt, gen_random_dt, gen_threshold, \
    gen_unit_interval, named_fixture
from .graph import Graph, read_edge_list, write_edge_list
from .metrics import metrics_report, minimum_layers
from .oracles import MAX_DT, brute_force_is_dt
from .recognition import recognize
from .weights import DEFAULT_ALPHA, DEFAULT_BETA, WeightAssignment, as_rational

EXIT_OK, EXIT_NO, EXIT_ERROR = 0, 1, 2


class NotDT(DTGraphError):
    def __init__(self, certificate):
        super().__init__(f"graph is not DT ({certificate.kind})")
        self.certificate = certificate


def _read_graph(path: str) -> Graph:
    text = sys.stdin.read() if path == "-" else Path(path).read_text()
    return read_edge_list(text)


def _dump(doc) -> str:
    return json.dumps(doc, indent=2, sort_keys=True)


def _list_arg(text: str) -> list[str]:
    return [t for t in text.replace(",", " ").split() if t]


def cmd_recognize(args) -> int:
    g = _read_graph(args.input)
    t0 = time.perf_counter()
    cert = recognize(g, args.alpha, args.beta, workers=args.threads)
    elapsed = time.perf_counter() - t0
    report = {
        "verdict": "dt" if cert.is_dt else "not-dt",
        "n": g.n,
        "edges": g.num_edges,
        "certificate": cert.to_json(),
        "certificate_verified": cert.verify(g),
    }
    code = EXIT_OK if cert.is_dt else EXIT_NO
    if args.verify:
        try:
            agree = brute_force_is_dt(g) == cert.is_dt
            report["oracle"] = "agree" if agree else "disagree"
            if not agree:
                code = EXIT_ERROR
        except TooLarge:
            report["oracle"] = f"skipped (n > {MAX_DT})"
    if not report["certificate_verified"]:
        code = EXIT_ERROR
    if args.timing:
        report["timing"] = {"recognize_seconds": round(elapsed, 6)}
    if args.text:
        print(f"verdict: {report['verdict']}")
        print(f"certificate: {cert.kind} (verified: {report['certificate_verified']})")
        doc = report["certificate"]
        if "weights" in doc:
            w = doc["weights"]
            print(f"alpha={w['alpha']} beta={w['beta']}")
            for i, x in enumerate(w["weights"]):
                print(f"  w({i}) = {x}")
        for key in ("witness", "witnesses"):
            if key in doc:
                print(f"{key}: {json.dumps(doc[key], sort_keys=True)}")
        if "oracle" in report:
            print(f"oracle: {report['oracle']}")
        if "timing" in report:
            print(f"time: {report['timing']['recognize_seconds']}s")
    else:
        print(_dump(report))
    return code


def cmd_metrics(args) -> int:
    g = _read_graph(args.input)
    if args.weights:
        wa = WeightAssignment.from_json(json.loads(Path(args.weights).read_text()))
    else:
        cert = recognize(g, args.alpha, args.beta)
        if not cert.is_dt:
            raise NotDT(cert)
        wa = cert.weights
    doc = metrics_report(g, wa)
    if args.text:
        for key in ("intersection_number", "diameter", "m", "lambda", "clustering"):
            print(f"{key}: {doc[key]}")
        for c in doc["cover"]:
            print(f"  clique {c}")
    else:
        print(_dump(doc))
    return EXIT_OK


def cmd_generate(args) -> int:
    wa = None
    fam = args.family
    if fam == "dt":
        w = [as_rational(x) for x in _list_arg(args.weights)]
        g = gen_dt(args.alpha, args.beta, w)
        wa = WeightAssignment(args.alpha, args.beta, w)
    elif fam == "threshold":
        g = gen_threshold([int(c) for c in args.bits if c in "01"])
    elif fam == "unit-interval":
        g = gen_unit_interval(_list_arg(args.weights), args.beta)
    elif fam == "random-dt":
        if args.dist == "uniform":
            dist = WeightDistribution.uniform(args.lo, args.hi, args.seed)
        else:
            dist = WeightDistribution.gaussian(args.mean, args.sd, args.seed)
        g, wa = gen_random_dt(args.n, args.alpha, args.beta, dist)
    else:
        g = named_fixture(args.name)
    text = write_edge_list(g)
    if args.out:
        Path(args.out).write_text(text)
        if wa is not None:
            wpath = args.weights_out or str(Path(args.out).with_suffix(".weights.json"))
            Path(wpath).write_text(_dump(wa.to_json()) + "\n")
    else:
        sys.stdout.write(text)
        if wa is not None and args.weights_out:
            Path(args.weights_out).write_text(_dump(wa.to_json()) + "\n")
    return EXIT_OK


def cmd_minlayers(args) -> int:
    g = _read_graph(args.input)
    cert = recognize(g)
    found = minimum_layers(g, args.max_m) if cert.is_dt else None
    doc = {"max_m": args.max_m, "dt": cert.is_dt, "m": None}
    if found is not None:
        m, p, part = found
        doc.update(m=m, p=p, vt=sorted(part.vt))
    if args.text:
        print(f"m = {doc['m']}" if found else f"none <= {args.max_m}")
    else:
        print(_dump(doc))
    return EXIT_OK if found else EXIT_NO


def _add_format(p: argparse.ArgumentParser) -> None:
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", help="JSON output (default)")
    fmt.add_argument("--text", action="store_true", help="human-readable summary")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="dtgraphs", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("recognize", help="decide DT-ness and print a certificate")
    p.add_argument("input", help="edge-list file or - for stdin")
    p.add_argument("--alpha", type=as_rational, default=DEFAULT_ALPHA)
    p.add_argument("--beta", type=as_rational, default=DEFAULT_BETA)
    p.add_argument("--verify", action="store_true", help="cross-check with the brute-force oracle")
    p.add_argument("--timing", action="store_true", help="include wall-clock timing")
    p.add_argument("--threads", type=int, default=1, help="workers for the per-vertex search")
    _add_format(p)
    p.set_defaults(func=cmd_recognize)

    p = sub.add_parser("metrics", help="intersection number, diameter, layers, clustering")
    p.add_argument("input")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--weights", help="weight JSON realizing the graph")
    src.add_argument("--auto", action="store_true", help="synthesize weights by recognition")
    p.add_argument("--alpha", type=as_rational, default=DEFAULT_ALPHA)
    p.add_argument("--beta", type=as_rational, default=DEFAULT_BETA)
    _add_format(p)
    p.set_defaults(func=cmd_metrics)

    p = sub.add_parser("generate", help="write a generated graph as an edge list")
    fams = p.add_subparsers(dest="family", required=True)
    f = fams.add_parser("dt")
    f.add_argument("--alpha", type=as_rational, required=True)
    f.add_argument("--beta", type=as_rational, required=True)
    f.add_argument("--weights", required=True, help="comma separated weights")
    f = fams.add_parser("threshold")
    f.add_argument("--bits", required=True, help="creation sequence such as 0011")
    f = fams.add_parser("unit-interval")
    f.add_argument("--weights", required=True)
    f.add_argument("--beta", type=as_rational, default=1)
    f = fams.add_parser("random-dt")
    f.add_argument("--n", type=int, required=True)
    f.add_argument("--alpha", type=as_rational, default=DEFAULT_ALPHA)
    f.add_argument("--beta", type=as_rational, default=DEFAULT_BETA)
    f.add_argument("--dist", choices=("uniform", "gaussian"), default="uniform")
    f.add_argument("--lo", type=float, default=0.0)
    f.add_argument("--hi", type=float, default=4.0)
    f.add_argument("--mean", type=float, default=1.5)
    f.add_argument("--sd", type=float, default=1.0)
    f = fams.add_parser("named")
    f.add_argument("name")
    for f in fams.choices.values():
        f.add_argument("--seed", type=int, default=0)
        f.add_argument("--out", help="edge-list path (default stdout)")
        f.add_argument("--weights-out", help="weight JSON path for DT families")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("minlayers", help="smallest layer count of a decomposition")
    p.add_argument("input")
    p.add_argument("--max-m", type=int, default=5)
    _add_format(p)
    p.set_defaults(func=cmd_minlayers)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except NotDT as exc:
        print(f"error: {exc}", file=sys.stderr)
        print(_dump(exc.certificate.to_json()), file=sys.stderr)
        return EXIT_NO
    except (DTGraphError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
