"""Command-line surface over the pipeline.

Exit codes: 0 for success (or a Realizable verdict), 2 for a principled
mathematical refusal (connectivity failure, fired obstruction rules, a
NotRealizable verdict, a certificate that fails re-verification), 1 for
input or usage errors.  All outputs are byte-identical across runs for
identical inputs.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from .assemble import DEFAULT_MATCHING_STRATEGY, TOOL_VERSION
from .cycles import CycleAssignment
from .dot import band_incidence_dot, embedding_dot, hasse_dot, level_graph_dot
from .errors import (
    ConnectivityFailure,
    DisconnectedGraph,
    NotGradientShape,
    PreconditionViolated,
    SmaleOrderError,
    StarViolated,
)
from .gradient import check_gradient_like, check_necessary, level_graphs
from .order import check_connectivity, classify, load_order
from .pipeline import certificate_from_dict, realize, verify_certificate
from .assemble import plan_plugs
from . import corpus

COMMANDS = (
    "validate",
    "check",
    "realize",
    "plan-plugs",
    "gradient-like",
    "export-dot",
    "verify-cert",
)


@dataclass(frozen=True)
class RunConfig:
    command: str
    input_path: str
    output_path: str | None = None
    cycles_path: str | None = None
    max_genus: int | None = None
    matching_strategy: str = DEFAULT_MATCHING_STRATEGY
    verbosity: int = 0


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _emit(config: RunConfig, obj) -> None:
    text = _dump(obj)
    if config.output_path:
        Path(config.output_path).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _load_order_file(path: str):
    with open(path, encoding="utf-8") as fh:
        return load_order(json.load(fh))


def _load_cycles_file(path: str) -> CycleAssignment:
    with open(path, encoding="utf-8") as fh:
        return CycleAssignment.from_dict(json.load(fh))


def _refusal(stage: str, detail: str, extra: dict | None = None) -> dict:
    doc = {"refused_at": stage, "detail": detail}
    doc.update(extra or {})
    return doc


def run(config: RunConfig) -> int:
    """Execute one subcommand; returns the process exit status."""
    try:
        if config.command == "verify-cert":
            return _run_verify_cert(config)
        order = _load_order_file(config.input_path)
    except (OSError, json.JSONDecodeError, SmaleOrderError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1

    try:
        if config.command == "validate":
            report = check_connectivity(order)
            roles = classify(order)
            _emit(
                config,
                {
                    "order": order.to_dict(),
                    "roles": {e: r.value for e, r in sorted(roles.roles.items())},
                    "generations": dict(sorted(roles.generations.items())),
                    "north_south": [list(p) for p in order.north_south_pairs],
                    "connectivity": report.to_dict(),
                },
            )
            return 0

        if config.command == "check":
            report = check_connectivity(order)
            violations = check_necessary(order)
            _emit(
                config,
                {
                    "connectivity": report.to_dict(),
                    "violations": violations.to_dict()["violations"],
                    "passed": report.passed and violations.empty,
                },
            )
            return 0 if report.passed and violations.empty else 2

        if config.command == "realize":
            assignment = (
                _load_cycles_file(config.cycles_path) if config.cycles_path else None
            )
            try:
                certificate = realize(
                    order, assignment, matching_strategy=config.matching_strategy
                )
            except ConnectivityFailure as exc:
                _emit(
                    config,
                    _refusal(
                        "connectivity",
                        str(exc),
                        {"report": exc.report.to_dict() if exc.report else None},
                    ),
                )
                return 2
            _emit(config, certificate.to_dict())
            return 0

        if config.command == "plan-plugs":
            _emit(config, plan_plugs(order).to_dict())
            return 0

        if config.command == "gradient-like":
            try:
                verdict = check_gradient_like(order, config.max_genus)
            except (NotGradientShape, DisconnectedGraph) as exc:
                _emit(config, _refusal("gradient-shape", str(exc)))
                return 2
            _emit(config, verdict.to_dict())
            return 0 if verdict.realizable else 2

        if config.command == "export-dot":
            return _run_export_dot(config, order)

    except (PreconditionViolated, StarViolated, ValueError, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1

    sys.stderr.write(f"error: unknown command {config.command!r}\n")
    return 1


def _run_verify_cert(config: RunConfig) -> int:
    try:
        with open(config.input_path, encoding="utf-8") as fh:
            data = json.load(fh)
        certificate = certificate_from_dict(data)
    except (OSError, json.JSONDecodeError, KeyError, ValueError, SmaleOrderError) as exc:
        sys.stderr.write(f"error: unreadable certificate: {exc}\n")
        return 1
    problems = verify_certificate(certificate)
    reserialized = certificate.to_dict()
    if reserialized != data:
        problems = list(problems) + ["re-serialization differs from the input document"]
    _emit(config, {"passed": not problems, "problems": list(problems)})
    return 0 if not problems else 2


def _run_export_dot(config: RunConfig, order) -> int:
    outdir = Path(config.output_path or ".")
    outdir.mkdir(parents=True, exist_ok=True)
    stem = Path(config.input_path).stem
    written = []

    def write(name: str, text: str):
        path = outdir / f"{stem}-{name}.dot"
        path.write_text(text, encoding="utf-8")
        written.append(str(path))

    write("hasse", hasse_dot(order))

    assignment = _load_cycles_file(config.cycles_path) if config.cycles_path else None
    try:
        certificate = realize(
            order, assignment, matching_strategy=config.matching_strategy
        )
        write("bands", band_incidence_dot(certificate))
    except (ConnectivityFailure, PreconditionViolated):
        pass

    try:
        highest, lowest = level_graphs(order)
        write("level-highest", level_graph_dot(highest, "highest"))
        write("level-lowest", level_graph_dot(lowest, "lowest"))
        verdict = check_gradient_like(order, config.max_genus)
        if verdict.realizable:
            write("embedding", embedding_dot(verdict.embedding, highest))
            write("embedding-dual", level_graph_dot(verdict.dual, "dual"))
    except (NotGradientShape, DisconnectedGraph):
        pass

    sys.stdout.write(_dump({"written": written}))
    return 0


def seed_corpus(directory: str) -> list[str]:
    """Write the worked-example orders (and their cycle choices)
    as ready-made input files."""
    outdir = Path(directory)
    outdir.mkdir(parents=True, exist_ok=True)
    written = []
    for name, spec in sorted(corpus.SEED_ORDERS.items()):
        path = outdir / f"{name}.json"
        path.write_text(_dump(spec), encoding="utf-8")
        written.append(str(path))
    for name, factory in sorted(corpus.SEED_CYCLES.items()):
        path = outdir / f"{name}.cycles.json"
        path.write_text(_dump(factory().to_dict()), encoding="utf-8")
        written.append(str(path))
    return written


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="smale-orders",
        description=(
            "Decide and construct realizability of finite partial orders as"
            " Smale orders of surface diffeomorphisms with trivial attractors"
            " and repellers."
        ),
    )
    parser.add_argument("--version", action="version", version=TOOL_VERSION)
    parser.add_argument(
        "--seed-corpus",
        metavar="DIR",
        help="write the worked-example input files into DIR and exit",
    )
    sub = parser.add_subparsers(dest="command")
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("input", help="order file (certificate file for verify-cert)")
        p.add_argument("-o", "--output", help="output file (directory for export-dot)")
        p.add_argument("-v", "--verbose", action="count", default=0)
        if name in ("realize", "export-dot"):
            p.add_argument(
                "--cycles", help="externally chosen cycle assignment (JSON)"
            )
            p.add_argument(
                "--matching-strategy",
                default=DEFAULT_MATCHING_STRATEGY,
                help="band matching rule (only 'first-compatible' is implemented)",
            )
        if name in ("gradient-like", "export-dot"):
            p.add_argument(
                "--max-genus",
                type=int,
                default=None,
                help="genus search bound (default: number of saddles)",
            )
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.seed_corpus:
        for path in seed_corpus(args.seed_corpus):
            sys.stdout.write(path + "\n")
        return 0
    if not args.command:
        parser.print_usage(sys.stderr)
        return 1
    config = RunConfig(
        command=args.command,
        input_path=args.input,
        output_path=args.output,
        cycles_path=getattr(args, "cycles", None),
        max_genus=getattr(args, "max_genus", None),
        matching_strategy=getattr(args, "matching_strategy", DEFAULT_MATCHING_STRATEGY),
        verbosity=args.verbose,
    )
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
