"""Command line interface.

Exit codes: 0 success, 2 unregistered verification violations, 3 bad input
(arguments, ring construction, malformed files), 4 resource caps exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .corpus import squarefree_moduli
from .errors import (
    InputFormatError,
    TooManyElements,
    TooManyFactors,
    ZdgraphError,
)
from .exports import graph_to_dot, graph_to_json, json_bytes, write_bytes_atomic, write_text_atomic
from .graphs import build_ag, build_gamma, domination, radius, vertex_label
from .rings import (
    DEFAULT_MAX_FACTORS,
    PrimeFactors,
    Ring,
    SquarefreeModulus,
    build_ring,
)
from .spectrum import fixed_place_status, maximal_annihilating, min_primes
from .tables import load_table_file
from .verify import ALL_SUITES, run_verification
from .edge_cases import load_registry
from .errors import NoAnnihilatingIdeals
from .version import __version__

ENV_MAX_FACTORS = "ZDGRAPH_MAX_FACTORS"

EXIT_OK = 0
EXIT_VIOLATIONS = 2
EXIT_INPUT = 3
EXIT_RESOURCE = 4


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would exit 2, which we reserve
        raise InputFormatError(message)


def _max_factors() -> int:
    raw = os.environ.get(ENV_MAX_FACTORS)
    if raw is None:
        return DEFAULT_MAX_FACTORS
    try:
        return int(raw)
    except ValueError:
        return DEFAULT_MAX_FACTORS


def _add_ring_args(p: argparse.ArgumentParser) -> None:
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--zn", type=int, metavar="N", help="the ring of integers modulo a squarefree N")
    g.add_argument("--fields", metavar="P1,P2,...", help="product of prime fields of these sizes")
    g.add_argument("--table", metavar="FILE", help="JSON file with addition and multiplication tables")


def _ring_from_args(args: argparse.Namespace) -> Ring:
    cap = _max_factors()
    if args.zn is not None:
        return build_ring(SquarefreeModulus(args.zn), max_factors=cap)
    if args.fields is not None:
        try:
            primes = tuple(int(part) for part in args.fields.split(",") if part.strip())
        except ValueError:
            raise InputFormatError(f"--fields expects comma-separated integers, got {args.fields!r}")
        if not primes:
            raise InputFormatError("--fields needs at least one prime")
        return build_ring(PrimeFactors(primes), max_factors=cap)
    return build_ring(load_table_file(args.table), max_factors=cap)


def _ring_title(ring: Ring) -> str:
    name = " x ".join(f"F{q}" for q in ring.qs)
    if ring.modulus is not None:
        return f"{name} (Z/{ring.modulus})"
    return name


def _parse_suites(raw: str | None) -> tuple[str, ...] | None:
    if raw is None:
        return None
    names = tuple(part.strip() for part in raw.split(",") if part.strip())
    if not names:
        raise InputFormatError("--suites given but empty")
    return names


def build_parser() -> _Parser:
    parser = _Parser(prog="zdgraph", description=__doc__)
    parser.add_argument("--version", action="version", version=f"zdgraph {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("inspect", help="summarize a ring and its graphs")
    _add_ring_args(p)
    p.add_argument("--json", action="store_true", help="emit machine-readable JSON")

    p = sub.add_parser("export", help="write a graph as DOT or JSON")
    _add_ring_args(p)
    p.add_argument("--graph", choices=("gamma", "ag"), required=True)
    p.add_argument("--format", choices=("dot", "json"), default="dot")
    p.add_argument("--explicit", action="store_true", help="one node per vertex instead of per class")
    p.add_argument("--output", metavar="PATH", help="write here instead of stdout")

    p = sub.add_parser("verify", help="run prediction-versus-oracle checks")
    _add_ring_args(p)
    p.add_argument("--suites", metavar="NAMES", help=f"comma-separated subset of: {', '.join(ALL_SUITES)}")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--pair-cap", type=int, default=6, help="sampled pairs per signature")
    p.add_argument("--report", metavar="PATH", help="write the JSON report here")
    p.add_argument("--registry", metavar="PATH", help="alternate edge-case registry")
    p.add_argument("--quiet", action="store_true")

    p = sub.add_parser("dominate", help="exact minimum (total) dominating set")
    _add_ring_args(p)
    p.add_argument("--graph", choices=("gamma", "ag"), required=True)
    p.add_argument("--total", action="store_true")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("batch", help="verify a family of rings and write reports")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--squarefree-below", type=int, metavar="N")
    g.add_argument("--moduli", metavar="N1,N2,...")
    p.add_argument("--out-dir", required=True, metavar="DIR")
    p.add_argument("--suites", metavar="NAMES")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--pair-cap", type=int, default=6)

    return parser


# ---------------------------------------------------------------------------
# commands


def _cmd_inspect(args: argparse.Namespace) -> int:
    ring = _ring_from_args(args)
    doc: dict = {
        "ring": ring.describe(),
        "size": ring.size,
        "modulus": ring.modulus,
        "min_primes": [p.render(ring) for p in min_primes(ring)],
    }
    status, kern = fixed_place_status(ring)
    doc["fixed_place"] = status.value
    doc["bourbaki_kernel"] = kern.render(ring)
    try:
        doc["maximal_annihilating"] = [i.render(ring) for i in maximal_annihilating(ring)]
    except NoAnnihilatingIdeals:
        doc["maximal_annihilating"] = []
    if ring.k >= 2:
        for kind, build in (("gamma", build_gamma), ("ag", build_ag)):
            G = build(ring)
            doc[kind] = {
                "vertices": G.vertex_count(),
                "edges": G.edge_count(),
                "classes": len(G.classes),
                "radius": radius(G),
            }
    else:
        doc["gamma"] = None
        doc["ag"] = None

    if args.json:
        print(json.dumps(doc, sort_keys=True, indent=2))
        return EXIT_OK

    print(f"ring {_ring_title(ring)} with {ring.size} elements")
    print(f"  minimal primes: {', '.join(doc['min_primes'])}")
    print(f"  fixed place status: {doc['fixed_place']} (kernel {doc['bourbaki_kernel']})")
    if doc["maximal_annihilating"]:
        print(f"  maximal annihilating ideals: {', '.join(doc['maximal_annihilating'])}")
    else:
        print("  maximal annihilating ideals: none (field)")
    for kind in ("gamma", "ag"):
        info = doc[kind]
        name = "zero-divisor graph" if kind == "gamma" else "annihilating-ideal graph"
        if info is None:
            print(f"  {name}: empty")
        else:
            print(
                f"  {name}: {info['vertices']} vertices, {info['edges']} edges, "
                f"{info['classes']} classes, radius {info['radius']}"
            )
    return EXIT_OK


def _cmd_export(args: argparse.Namespace) -> int:
    ring = _ring_from_args(args)
    G = build_gamma(ring) if args.graph == "gamma" else build_ag(ring)
    if args.format == "dot":
        text = graph_to_dot(G, compressed=not args.explicit)
        if args.output:
            write_text_atomic(args.output, text)
        else:
            sys.stdout.write(text)
    else:
        data = json_bytes(graph_to_json(G, compressed=not args.explicit))
        if args.output:
            write_bytes_atomic(args.output, data)
        else:
            sys.stdout.write(data.decode("utf-8"))
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    ring = _ring_from_args(args)
    registry = load_registry(args.registry) if args.registry else None
    report = run_verification(
        ring,
        suites=_parse_suites(args.suites),
        seed=args.seed,
        per_signature_cap=args.pair_cap,
        registry=registry,
    )
    if args.report:
        write_bytes_atomic(args.report, report.to_json_bytes())
    if not args.quiet:
        for line in report.summary_lines():
            print(line)
    return EXIT_VIOLATIONS if report.has_unregistered_violations else EXIT_OK


def _cmd_dominate(args: argparse.Namespace) -> int:
    ring = _ring_from_args(args)
    G = build_gamma(ring) if args.graph == "gamma" else build_ag(ring)
    result = domination(G, total=args.total)
    labels = [vertex_label(G, v) for v in result.witness]
    if args.json:
        print(
            json.dumps(
                {
                    "ring": ring.describe(),
                    "graph": args.graph,
                    "total": args.total,
                    "size": result.size,
                    "certified": result.certified,
                    "witness": labels,
                    "nodes_explored": result.nodes,
                },
                sort_keys=True,
                indent=2,
            )
        )
        return EXIT_OK
    flavor = "total dominating" if args.total else "dominating"
    certified = "certified" if result.certified else "NOT certified (budget hit)"
    print(f"{args.graph} of {_ring_title(ring)}: minimum {flavor} set has size {result.size} ({certified})")
    print(f"  witness: {', '.join(labels)}")
    return EXIT_OK


def _cmd_batch(args: argparse.Namespace) -> int:
    if args.squarefree_below is not None:
        moduli = squarefree_moduli(args.squarefree_below)
    else:
        try:
            moduli = [int(part) for part in args.moduli.split(",") if part.strip()]
        except ValueError:
            raise InputFormatError(f"--moduli expects comma-separated integers, got {args.moduli!r}")
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    suites = _parse_suites(args.suites)
    registry = load_registry()

    any_unregistered = False
    totals = {"confirmed": 0, "violated": 0, "violated_registered": 0, "not_applicable": 0}
    for n in moduli:
        ring = build_ring(SquarefreeModulus(n), max_factors=_max_factors())
        report = run_verification(
            ring, suites=suites, seed=args.seed, per_signature_cap=args.pair_cap, registry=registry
        )
        write_bytes_atomic(out_dir / f"zn{n:04d}.json", report.to_json_bytes())
        c = report.counts()
        for key in totals:
            totals[key] += c[key]
        flag = ""
        if report.has_unregistered_violations:
            any_unregistered = True
            flag = "  <-- UNREGISTERED VIOLATIONS"
        print(
            f"zn={n:<4d} k={ring.k}  confirmed={c['confirmed']:<4d} "
            f"registered={c['violated_registered']:<3d} unregistered={c['violated']:<3d} "
            f"na={c['not_applicable']:<3d}{flag}"
        )
    print(
        "totals: confirmed={confirmed} registered={violated_registered} "
        "unregistered={violated} na={not_applicable}".format(**totals)
    )
    return EXIT_VIOLATIONS if any_unregistered else EXIT_OK


_COMMANDS = {
    "inspect": _cmd_inspect,
    "export": _cmd_export,
    "verify": _cmd_verify,
    "dominate": _cmd_dominate,
    "batch": _cmd_batch,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return _COMMANDS[args.command](args)
    except (TooManyFactors, TooManyElements) as exc:
        print(f"zdgraph: resource cap: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except ZdgraphError as exc:
        print(f"zdgraph: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as exc:
        print(f"zdgraph: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
