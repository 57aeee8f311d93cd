"""Command-line front end.

Subcommands: ``validate``, ``paths``, ``metric``, ``scenario run``. All output
is JSON (plus optional CSV for scenario/metric reports). Exit codes: 0
success, 1 input error, 2 computation undefined or path-cap abort, 3
internal error. ``DEGENET_MAX_PATHS`` (default 100000) caps path enumeration.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from pathlib import Path as FsPath
from typing import Optional

from ._version import __version__
from .errors import (
    DegenetError,
    DocumentError,
    InputError,
    PathLimitError,
    UndefinedMetricError,
)
from .harness import (
    METRIC_NAMES,
    ScenarioInputs,
    emit_report,
    parse_scenario,
    run_scenario,
    single_step_scenario,
    with_cumulative,
    _round_tree,
)
from .kernels import DistanceKind
from .model import (
    Inventory,
    LayerStack,
    MetricConfig,
    Network,
    Portfolio,
    parse_document,
)
from .paths import enumerate_all, filter_qos, path_quality

DEFAULT_MAX_PATHS = 100_000

_METRIC_FAMILIES = {
    "dwpr": ("dwpr", "dwpr_star"),
    "fss": ("fss", "fss_star"),
    "arq": ("arq", "arq_star"),
    "mldi": ("mldi", "mldi_star"),
    "degeneracy": ("degeneracy_score",),
}


class _Parser(argparse.ArgumentParser):
    """argparse exits with status 2 on usage errors; map those to input errors."""

    def error(self, message):
        self.print_usage(sys.stderr)
        raise InputError(message)


def _max_paths_from_env() -> int:
    raw = os.environ.get("DEGENET_MAX_PATHS")
    if raw is None:
        return DEFAULT_MAX_PATHS
    try:
        value = int(raw)
    except ValueError:
        raise InputError(f"DEGENET_MAX_PATHS must be an integer, got {raw!r}") from None
    if value < 1:
        raise InputError(f"DEGENET_MAX_PATHS must be >= 1, got {value}")
    return value


def _read_text(path: str) -> str:
    try:
        return FsPath(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {path!r}: {exc}") from None


def _write_text(path: Optional[str], text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        FsPath(path).write_text(text, encoding="utf-8")


def _load(path: Optional[str], expect: str):
    if path is None:
        return None
    return parse_document(_read_text(path), expect=expect)


def _parse_log_base_flag(raw: str) -> float:
    return 2.0 if raw == "2" else math.e


def _config_from_args(args) -> MetricConfig:
    return MetricConfig(
        delta=args.delta,
        epsilon=args.epsilon,
        theta=args.theta,
        lambda_max=args.lambda_max,
        beta_min=args.beta_min,
        sigma=args.sigma,
        gamma_weight=args.gamma,
        log_base=_parse_log_base_flag(args.log_base),
        max_hops=args.max_hops,
    )


def _add_config_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--delta", type=float, default=0.0, help="structural threshold (default 0)")
    p.add_argument("--epsilon", type=float, default=0.0, help="functional threshold (default 0)")
    p.add_argument("--theta", type=float, default=0.0, help="path quality threshold (default 0)")
    p.add_argument("--lambda-max", type=float, default=math.inf, help="max total latency, ms (default inf)")
    p.add_argument("--beta-min", type=float, default=0.0, help="min bottleneck bandwidth, Mbit/s (default 0)")
    p.add_argument("--sigma", type=float, default=1.0, help="Gaussian kernel width (default 1)")
    p.add_argument("--gamma", type=float, default=0.5, help="cross-layer weight in [0,1] (default 0.5)")
    p.add_argument("--log-base", choices=("2", "e"), default="2", help="entropy log base (default 2)")
    p.add_argument("--max-hops", type=int, default=8, help="path enumeration hop cap (default 8)")
    p.add_argument(
        "--distance",
        choices=[k.value for k in DistanceKind],
        default=DistanceKind.EUCLIDEAN.value,
        help="embedding distance for fss/degeneracy (default euclidean)",
    )


def _add_input_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--net", help="network document path")
    p.add_argument("--inventory", help="element inventory document path")
    p.add_argument("--portfolio", help="algorithm portfolio document path")
    p.add_argument("--stack", help="layer stack document path")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="degenet", description=__doc__)
    parser.add_argument("--version", action="version", version=f"degenet {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p_validate = sub.add_parser("validate", help="parse and validate a document")
    p_validate.add_argument("document", help="path to a JSON document of any supported kind")
    p_validate.set_defaults(func=cmd_validate)

    p_paths = sub.add_parser("paths", help="enumerate simple paths, optionally QoS-filtered")
    p_paths.add_argument("--net", required=True, help="network document path")
    p_paths.add_argument("--src", required=True, help="source node id")
    p_paths.add_argument("--dst", required=True, help="destination node id")
    p_paths.add_argument("--max-hops", type=int, default=8, help="hop cap (default 8)")
    p_paths.add_argument("--lambda-max", type=float, default=None, help="max total latency, ms")
    p_paths.add_argument("--beta-min", type=float, default=None, help="min bottleneck bandwidth, Mbit/s")
    p_paths.add_argument("--out", help="output file (default stdout)")
    p_paths.set_defaults(func=cmd_paths)

    p_metric = sub.add_parser("metric", help="compute one metric family on intact inputs")
    p_metric.add_argument("name", choices=sorted(_METRIC_FAMILIES), help="metric family")
    _add_input_flags(p_metric)
    p_metric.add_argument("--src", help="source node id (dwpr)")
    p_metric.add_argument("--dst", help="destination node id (dwpr)")
    p_metric.add_argument("--function", help="function id (fss/degeneracy; default: all functions)")
    _add_config_flags(p_metric)
    p_metric.add_argument("--out", help="output file (default stdout)")
    p_metric.add_argument("--csv", help="also write a CSV flattening to this file")
    p_metric.set_defaults(func=cmd_metric)

    p_scenario = sub.add_parser("scenario", help="failure-injection scenarios")
    scen_sub = p_scenario.add_subparsers(dest="action", required=True, parser_class=_Parser)
    p_run = scen_sub.add_parser("run", help="run a scenario file")
    p_run.add_argument("--file", required=True, help="scenario JSON path")
    _add_input_flags(p_run)
    p_run.add_argument("--out", help="JSON report file (default stdout)")
    p_run.add_argument("--csv", help="also write a CSV flattening to this file")
    p_run.add_argument("--details", action="store_true", help="include per-path/per-pair details")
    p_run.add_argument(
        "--independent",
        action="store_true",
        help="apply each failure step to the intact baseline instead of cumulatively",
    )
    p_run.set_defaults(func=cmd_scenario_run)

    return parser


def cmd_validate(args) -> int:
    doc = parse_document(_read_text(args.document))
    if isinstance(doc, Network):
        summary = {
            "kind": "network",
            "nodes": len(doc.nodes),
            "edges": len(doc.edges),
            "modes": list(doc.mode_universe),
        }
    elif isinstance(doc, Inventory):
        summary = {
            "kind": "inventory",
            "functions": len(doc.functions),
            "elements": len(doc.elements),
            "embedding_dim": doc.embedding_dim,
        }
    elif isinstance(doc, Portfolio):
        summary = {"kind": "portfolio", "algorithms": len(doc.algorithms)}
    else:
        summary = {
            "kind": "layerstack",
            "layers": len(doc.layers),
            "functions": len(doc.function_universe),
            "elements": sum(len(l.elements) for l in doc.layers),
        }
    print(json.dumps(summary, sort_keys=True))
    return 0


def cmd_paths(args) -> int:
    net = parse_document(_read_text(args.net), expect="network")
    enum = enumerate_all(net, args.src, args.dst, args.max_hops, _max_paths_from_env())
    filtered = args.lambda_max is not None or args.beta_min is not None
    lam = args.lambda_max if args.lambda_max is not None else math.inf
    beta = args.beta_min if args.beta_min is not None else 0.0
    vps = filter_qos(enum.paths, lam, beta) if filtered else None
    valid = set(vps.paths) if vps is not None else None

    warnings = []
    if enum.hop_capped:
        warnings.append(
            f"path search was bounded by max_hops={args.max_hops}; longer paths were not explored"
        )
    doc = {
        "source": args.src,
        "destination": args.dst,
        "max_hops": args.max_hops,
        "hop_capped": enum.hop_capped,
        "path_count": len(enum.paths),
        "warnings": warnings,
        "paths": [
            {
                "nodes": list(p.nodes),
                "modes": list(p.mode_sequence),
                "hop_count": p.hop_count,
                "total_latency_ms": p.total_latency,
                "min_bandwidth_mbps": p.min_bandwidth,
                "quality": path_quality(p),
                **({"qos_valid": p in valid} if valid is not None else {}),
            }
            for p in enum.paths
        ],
    }
    if vps is not None:
        doc["lambda_max"] = lam if math.isfinite(lam) else "inf"
        doc["beta_min"] = beta
        doc["valid_path_count"] = len(vps)
        doc["unique_mode_combo_count"] = len(vps.unique_mode_combos)
    _write_text(args.out, json.dumps(_round_tree(doc), indent=2, sort_keys=True) + "\n")
    return 0


def cmd_metric(args) -> int:
    family = _METRIC_FAMILIES[args.name]
    endpoints = []
    if args.src is not None or args.dst is not None:
        if args.src is None or args.dst is None:
            raise InputError("--src and --dst must be given together")
        endpoints.append((args.src, args.dst))
    if args.name == "dwpr" and not endpoints:
        raise InputError("metric dwpr requires --src and --dst")
    scenario = single_step_scenario(
        name=f"metric-{args.name}",
        metrics=family,
        config=_config_from_args(args),
        endpoints=endpoints,
        functions=(args.function,) if args.function else None,
        distance=DistanceKind(args.distance),
    )
    inputs = ScenarioInputs(
        network=_load(args.net, "network"),
        inventory=_load(args.inventory, "inventory"),
        portfolio=_load(args.portfolio, "portfolio"),
        stack=_load(args.stack, "layerstack"),
    )
    report = run_scenario(inputs, scenario, max_paths=_max_paths_from_env(), details=True)
    _write_text(args.out, emit_report(report, "json"))
    if args.csv:
        _write_text(args.csv, emit_report(report, "csv"))
    return 2 if report.has_undefined() else 0


def cmd_scenario_run(args) -> int:
    scenario_path = FsPath(args.file)
    scenario = parse_scenario(_read_text(args.file))
    if args.independent:
        scenario = with_cumulative(scenario, False)

    def resolve(kind: str, flag: Optional[str]):
        if flag is not None:
            return _load(flag, kind)
        rel = scenario.inputs.get(kind)
        if rel is None:
            return None
        return _load(str((scenario_path.parent / rel)), kind)

    inputs = ScenarioInputs(
        network=resolve("network", args.net),
        inventory=resolve("inventory", args.inventory),
        portfolio=resolve("portfolio", args.portfolio),
        stack=resolve("layerstack", args.stack),
    )
    report = run_scenario(inputs, scenario, max_paths=_max_paths_from_env(), details=args.details)
    _write_text(args.out, emit_report(report, "json"))
    if args.csv:
        _write_text(args.csv, emit_report(report, "csv"))
    return 2 if report.has_undefined() else 0


def _print_error(exc: Exception, code: str) -> None:
    payload = {"error": {"code": code, "message": str(exc)}}
    print(json.dumps(payload, sort_keys=True), file=sys.stderr)


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except (DocumentError, InputError) as exc:
        _print_error(exc, exc.code)
        return 1
    except (UndefinedMetricError, PathLimitError) as exc:
        _print_error(exc, exc.code)
        return 2
    except DegenetError as exc:  # unexpected library error
        _print_error(exc, exc.code)
        return 3
    except Exception as exc:  # noqa: BLE001 - last-resort internal error
        _print_error(exc, "internal")
        return 3


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
