"""Failure-injection scenarios and machine-readable reports.

A scenario names the metrics to compute, a MetricConfig, endpoint pairs for
the path metrics, and a sequence of failure steps. Step 0 is always the
intact baseline; each later step removes nodes/edges (cumulatively by
default) and recomputes every requested metric, reporting values, deltas
against baseline, and the reasons for any undefined value.

Failed node ids are resolved against every loaded document: a network node,
an inventory element, a layer-stack element, or a portfolio algorithm with a
matching id is removed wherever it appears, so component loss also drives
the substitution / algorithm / layer metrics. Edge keys resolve against the
network only.

Reports round every float to 12 significant digits at construction, so two
runs over identical inputs serialize to byte-identical JSON.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field, replace
from typing import Mapping, Optional, Sequence

from ._version import __version__
from .algorithm_metrics import arq, arq_report, arq_star
from .errors import (
    DegenetError,
    DocumentError,
    InputError,
    UndefinedMetricError,
    UnknownIdError,
)
from .kernels import DistanceKind
from .layer_metrics import mldi, mldi_report, mldi_star
from .model import (
    EdgeKey,
    Inventory,
    Layer,
    LayerStack,
    MetricConfig,
    Network,
    Portfolio,
    canonical_edge_key,
    remove_failures,
)
from .path_metrics import degeneracy_score, dwpr, dwpr_report, dwpr_star
from .paths import enumerate_all, filter_qos
from .substitution_metrics import capable_set, fss, fss_report, fss_star

METRIC_NAMES = (
    "dwpr",
    "dwpr_star",
    "fss",
    "fss_star",
    "arq",
    "arq_star",
    "mldi",
    "mldi_star",
    "degeneracy_score",
)

_NETWORK_METRICS = {"dwpr", "dwpr_star"}
_INVENTORY_METRICS = {"fss", "fss_star", "degeneracy_score"}
_PORTFOLIO_METRICS = {"arq", "arq_star"}
_STACK_METRICS = {"mldi", "mldi_star"}

INPUT_KINDS = ("network", "inventory", "portfolio", "layerstack")


def round12(value: float) -> float:
    """Round to 12 significant digits; report floats are stored pre-rounded."""
    return float(format(value, ".12g"))


def _round_tree(value):
    if isinstance(value, bool) or value is None or isinstance(value, (int, str)):
        return value
    if isinstance(value, float):
        return round12(value)
    if isinstance(value, dict):
        return {k: _round_tree(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_round_tree(v) for v in value]
    raise InputError(f"unserializable report value of type {type(value).__name__}")


# ---------------------------------------------------------------------------
# Scenario


@dataclass(frozen=True)
class FailureStep:
    """One injection step: node ids and/or canonical (u, v, mode) edge keys."""

    nodes: tuple[str, ...] = ()
    edges: tuple[EdgeKey, ...] = ()


@dataclass(frozen=True)
class Scenario:
    name: str
    metrics: tuple[str, ...]
    config: MetricConfig = MetricConfig()
    failures: tuple[FailureStep, ...] = ()
    endpoints: tuple[tuple[str, str], ...] = ()
    functions: Optional[tuple[str, ...]] = None
    distance: DistanceKind = DistanceKind.EUCLIDEAN
    cumulative: bool = True
    inputs: Mapping[str, str] = field(default_factory=dict)  # document paths by kind

    def __post_init__(self):
        metrics = tuple(dict.fromkeys(self.metrics))  # dedupe, keep order
        if not metrics:
            raise InputError("scenario requests no metrics")
        unknown = [m for m in metrics if m not in METRIC_NAMES]
        if unknown:
            raise InputError(f"unknown metric(s) {unknown}; valid: {', '.join(METRIC_NAMES)}")
        object.__setattr__(self, "metrics", metrics)
        object.__setattr__(self, "failures", tuple(self.failures))
        object.__setattr__(self, "endpoints", tuple((str(s), str(d)) for s, d in self.endpoints))
        if self.functions is not None:
            object.__setattr__(self, "functions", tuple(self.functions))
        object.__setattr__(self, "distance", DistanceKind(self.distance))
        object.__setattr__(self, "inputs", dict(self.inputs))
        bad = set(self.inputs) - set(INPUT_KINDS)
        if bad:
            raise InputError(f"unknown input kind(s) {sorted(bad)}; valid: {', '.join(INPUT_KINDS)}")


def _parse_log_base(raw) -> float:
    if raw in (2, 2.0, "2"):
        return 2.0
    if raw in ("e", "E"):
        return math.e
    raise DocumentError("schema.bad-value", f"log_base must be 2 or \"e\", got {raw!r}")


def _config_from_dict(obj: dict) -> MetricConfig:
    if not isinstance(obj, dict):
        raise DocumentError("schema.bad-type", "scenario.config must be an object")
    known = {
        "delta", "epsilon", "theta", "lambda_max", "beta_min",
        "sigma", "gamma_weight", "log_base", "max_hops",
    }
    unknown = set(obj) - known
    if unknown:
        raise DocumentError("schema.bad-value", f"unknown config field(s) {sorted(unknown)}")
    kwargs = dict(obj)
    if "log_base" in kwargs:
        kwargs["log_base"] = _parse_log_base(kwargs["log_base"])
    for name in ("lambda_max", "theta", "beta_min"):
        if isinstance(kwargs.get(name), str):  # allow "inf" / "-inf"
            try:
                kwargs[name] = float(kwargs[name])
            except ValueError:
                raise DocumentError("schema.bad-value", f"config.{name} is not a number") from None
    return MetricConfig(**kwargs)


def scenario_from_dict(obj: dict) -> Scenario:
    if not isinstance(obj, dict):
        raise DocumentError("schema.bad-type", "scenario must be a JSON object")
    name = obj.get("name", "scenario")
    if not isinstance(name, str):
        raise DocumentError("schema.bad-type", "scenario.name must be a string")
    metrics = obj.get("metrics")
    if not isinstance(metrics, list) or not all(isinstance(m, str) for m in metrics):
        raise DocumentError("schema.bad-type", "scenario.metrics must be a list of metric names")
    steps = []
    raw_failures = obj.get("failures", [])
    if not isinstance(raw_failures, list):
        raise DocumentError("schema.bad-type", "scenario.failures must be a list of steps")
    for i, step in enumerate(raw_failures):
        if not isinstance(step, dict):
            raise DocumentError("schema.bad-type", f"scenario.failures[{i}] must be an object")
        nodes = step.get("nodes", [])
        if not isinstance(nodes, list) or not all(isinstance(n, str) for n in nodes):
            raise DocumentError("schema.bad-type", f"scenario.failures[{i}].nodes must be a string list")
        raw_edges = step.get("edges", [])
        if not isinstance(raw_edges, list):
            raise DocumentError("schema.bad-type", f"scenario.failures[{i}].edges must be a list")
        edges = []
        for spec in raw_edges:
            if not (isinstance(spec, list) and len(spec) == 3 and all(isinstance(x, str) for x in spec)):
                raise DocumentError(
                    "schema.bad-type",
                    f"scenario.failures[{i}].edges entries must be [u, v, mode] string triples",
                )
            edges.append(canonical_edge_key(*spec))
        steps.append(FailureStep(nodes=tuple(sorted(nodes)), edges=tuple(sorted(edges))))
    endpoints = []
    raw_endpoints = obj.get("endpoints", [])
    if not isinstance(raw_endpoints, list):
        raise DocumentError("schema.bad-type", "scenario.endpoints must be a list of [src, dst] pairs")
    for pair in raw_endpoints:
        if not (isinstance(pair, list) and len(pair) == 2 and all(isinstance(x, str) for x in pair)):
            raise DocumentError("schema.bad-type", "scenario.endpoints entries must be [src, dst] pairs")
        endpoints.append((pair[0], pair[1]))
    functions = obj.get("functions")
    if functions is not None and (
        not isinstance(functions, list) or not all(isinstance(f, str) for f in functions)
    ):
        raise DocumentError("schema.bad-type", "scenario.functions must be a list of strings")
    cumulative = obj.get("cumulative", True)
    if not isinstance(cumulative, bool):
        raise DocumentError("schema.bad-type", "scenario.cumulative must be a boolean")
    inputs = obj.get("inputs", {})
    if not isinstance(inputs, dict) or not all(
        isinstance(k, str) and isinstance(v, str) for k, v in inputs.items()
    ):
        raise DocumentError("schema.bad-type", "scenario.inputs must map document kinds to paths")
    distance = obj.get("distance", DistanceKind.EUCLIDEAN.value)
    try:
        kind = DistanceKind(distance)
    except ValueError:
        raise DocumentError("schema.bad-value", f"unknown distance kind {distance!r}") from None
    return Scenario(
        name=name,
        metrics=tuple(metrics),
        config=_config_from_dict(obj.get("config", {})),
        failures=tuple(steps),
        endpoints=tuple(endpoints),
        functions=tuple(functions) if functions is not None else None,
        distance=kind,
        cumulative=cumulative,
        inputs=inputs,
    )


def parse_scenario(text: str) -> Scenario:
    """Parse and validate a scenario document."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(
            "syntax", f"invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}"
        ) from exc
    return scenario_from_dict(obj)


@dataclass(frozen=True)
class ScenarioInputs:
    """The documents a scenario runs against; load only what the metrics need."""

    network: Optional[Network] = None
    inventory: Optional[Inventory] = None
    portfolio: Optional[Portfolio] = None
    stack: Optional[LayerStack] = None


# ---------------------------------------------------------------------------
# Report types


@dataclass(frozen=True)
class StepReport:
    index: int
    label: str
    failed_nodes: tuple[str, ...]
    failed_edges: tuple[EdgeKey, ...]
    metrics: Mapping[str, object]  # metric key -> float | int | None
    deltas: Mapping[str, object]
    reasons: Mapping[str, str]
    warnings: tuple[str, ...]
    details: Optional[Mapping[str, dict]] = None

    def to_dict(self) -> dict:
        out = {
            "index": self.index,
            "label": self.label,
            "failed_nodes": list(self.failed_nodes),
            "failed_edges": [list(k) for k in self.failed_edges],
            "metrics": dict(self.metrics),
            "deltas": dict(self.deltas),
            "reasons": dict(self.reasons),
            "warnings": list(self.warnings),
        }
        if self.details is not None:
            out["details"] = {k: dict(v) for k, v in self.details.items()}
        return out

    @classmethod
    def from_dict(cls, obj: dict) -> "StepReport":
        return cls(
            index=obj["index"],
            label=obj["label"],
            failed_nodes=tuple(obj["failed_nodes"]),
            failed_edges=tuple(tuple(k) for k in obj["failed_edges"]),
            metrics=dict(obj["metrics"]),
            deltas=dict(obj["deltas"]),
            reasons=dict(obj["reasons"]),
            warnings=tuple(obj["warnings"]),
            details=obj.get("details"),
        )


def _encode_real(value: float):
    if math.isinf(value):
        return "inf" if value > 0 else "-inf"
    return round12(value)


def _decode_real(value) -> float:
    return float(value)


def config_to_dict(config: MetricConfig) -> dict:
    return {
        "delta": _encode_real(config.delta),
        "epsilon": _encode_real(config.epsilon),
        "theta": _encode_real(config.theta),
        "lambda_max": _encode_real(config.lambda_max),
        "beta_min": _encode_real(config.beta_min),
        "sigma": _encode_real(config.sigma),
        "gamma_weight": _encode_real(config.gamma_weight),
        "log_base": 2 if config.log_base == 2.0 else "e",
        "max_hops": config.max_hops,
    }


def config_from_dict(obj: dict) -> MetricConfig:
    return MetricConfig(
        delta=_decode_real(obj["delta"]),
        epsilon=_decode_real(obj["epsilon"]),
        theta=_decode_real(obj["theta"]),
        lambda_max=_decode_real(obj["lambda_max"]),
        beta_min=_decode_real(obj["beta_min"]),
        sigma=_decode_real(obj["sigma"]),
        gamma_weight=_decode_real(obj["gamma_weight"]),
        log_base=_parse_log_base(obj["log_base"]),
        max_hops=obj["max_hops"],
    )


@dataclass(frozen=True)
class ScenarioReport:
    scenario: str
    cumulative: bool
    config: MetricConfig
    distance: DistanceKind
    steps: tuple[StepReport, ...]
    warnings: tuple[str, ...]
    tool: str = "degenet"
    version: str = __version__

    def to_dict(self) -> dict:
        return {
            "tool": self.tool,
            "version": self.version,
            "scenario": self.scenario,
            "cumulative": self.cumulative,
            "config": config_to_dict(self.config),
            "distance": self.distance.value,
            "steps": [s.to_dict() for s in self.steps],
            "warnings": list(self.warnings),
        }

    @classmethod
    def from_dict(cls, obj: dict) -> "ScenarioReport":
        return cls(
            scenario=obj["scenario"],
            cumulative=obj["cumulative"],
            config=config_from_dict(obj["config"]),
            distance=DistanceKind(obj["distance"]),
            steps=tuple(StepReport.from_dict(s) for s in obj["steps"]),
            warnings=tuple(obj["warnings"]),
            tool=obj["tool"],
            version=obj["version"],
        )

    def has_undefined(self) -> bool:
        return any(v is None for s in self.steps for v in s.metrics.values())


def emit_report(report: ScenarioReport, format: str = "json") -> str:
    """Serialize a report; JSON is canonical, CSV flattens (step, metric, value, delta)."""
    if format == "json":
        return json.dumps(report.to_dict(), indent=2, sort_keys=True, allow_nan=False) + "\n"
    if format == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["step", "metric", "value", "delta"])
        for row in report_rows(report):
            writer.writerow([row[0], row[1], _csv_number(row[2]), _csv_number(row[3])])
        return buffer.getvalue()
    raise InputError(f"unknown report format {format!r}; use json or csv")


def report_rows(report: ScenarioReport) -> list[tuple]:
    """(step index, metric key, value, delta) rows, metrics sorted within a step."""
    rows = []
    for step in report.steps:
        for key in sorted(step.metrics):
            rows.append((step.index, key, step.metrics[key], step.deltas.get(key)))
    return rows


def _csv_number(value) -> str:
    if value is None:
        return ""
    if isinstance(value, int):
        return str(value)
    return format(value, ".12g")


def parse_report(text: str) -> ScenarioReport:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(
            "syntax", f"invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}"
        ) from exc
    return ScenarioReport.from_dict(obj)


# ---------------------------------------------------------------------------
# Execution


@dataclass(frozen=True)
class _State:
    """Input documents as of one scenario step."""

    network: Optional[Network]
    inventory: Optional[Inventory]
    portfolio: Optional[Portfolio]
    stack: Optional[LayerStack]
    stack_reason: Optional[str] = None  # set when failures invalidated the stack


def _check_requirements(scenario: Scenario, inputs: ScenarioInputs) -> Optional[tuple[str, ...]]:
    """Validate metric/input pairing up front; returns the resolved function list."""
    requested = set(scenario.metrics)
    if requested & _NETWORK_METRICS:
        if inputs.network is None:
            raise InputError("path metrics requested without a network document")
        if not scenario.endpoints:
            raise InputError("path metrics requested without endpoint pairs")
        for s, d in scenario.endpoints:
            for n in (s, d):
                if n not in inputs.network.nodes:
                    raise UnknownIdError(f"endpoint node {n!r} is not in the network")
            if s == d:
                raise InputError(f"endpoint pair ({s!r}, {d!r}) must name two distinct nodes")
    functions: Optional[tuple[str, ...]] = None
    if requested & _INVENTORY_METRICS:
        if inputs.inventory is None:
            raise InputError("substitution metrics requested without an inventory document")
        functions = scenario.functions or inputs.inventory.functions
        if not functions:
            raise InputError("inventory defines no functions to score")
        for fn in functions:
            if fn not in inputs.inventory.functions:
                raise UnknownIdError(f"unknown function {fn!r}")
    if requested & _PORTFOLIO_METRICS and inputs.portfolio is None:
        raise InputError("algorithm metrics requested without a portfolio document")
    if requested & _STACK_METRICS and inputs.stack is None:
        raise InputError("layer metrics requested without a layer-stack document")
    return functions


def _resolve_targets(state: _State, step: FailureStep) -> None:
    for n in step.nodes:
        in_network = state.network is not None and n in state.network.nodes
        in_inventory = state.inventory is not None and any(
            e.id == n for e in state.inventory.elements
        )
        in_stack = state.stack is not None and n in state.stack.element_ids
        in_portfolio = state.portfolio is not None and any(
            a.id == n for a in state.portfolio.algorithms
        )
        if not (in_network or in_inventory or in_stack or in_portfolio):
            raise UnknownIdError(f"failure target {n!r} matches nothing in the loaded documents")
    if step.edges and state.network is None:
        raise InputError("edge failure targets require a network document")


def _apply_step(state: _State, step: FailureStep) -> _State:
    _resolve_targets(state, step)
    network = state.network
    if network is not None:
        node_hits = [n for n in step.nodes if n in network.nodes]
        network = remove_failures(network, node_hits, step.edges)
    inventory = state.inventory
    if inventory is not None and step.nodes:
        hit = set(step.nodes) & {e.id for e in inventory.elements}
        if hit:
            inventory = Inventory(
                functions=inventory.functions,
                elements=tuple(e for e in inventory.elements if e.id not in hit),
            )
    portfolio = state.portfolio
    if portfolio is not None and step.nodes:
        hit = set(step.nodes) & {a.id for a in portfolio.algorithms}
        if hit:
            portfolio = Portfolio(
                algorithms=tuple(a for a in portfolio.algorithms if a.id not in hit)
            )
    stack, stack_reason = state.stack, state.stack_reason
    if stack is not None and set(step.nodes) & set(stack.element_ids):
        gone = set(step.nodes)
        try:
            stack = LayerStack(
                layers=tuple(
                    Layer(id=l.id, elements=tuple(e for e in l.elements if e.id not in gone))
                    for l in stack.layers
                ),
                function_universe=stack.function_universe,
            )
        except DocumentError as exc:
            stack, stack_reason = None, f"failures invalidated the layer stack: {exc}"
    return _State(network, inventory, portfolio, stack, stack_reason)


def _metric_key(base: str, target: Optional[str]) -> str:
    return base if target is None else f"{base}[{target}]"


def _evaluate_step(
    scenario: Scenario,
    state: _State,
    functions: Optional[tuple[str, ...]],
    max_paths: Optional[int],
    want_details: bool,
):
    config = scenario.config
    requested = scenario.metrics
    metrics: dict[str, object] = {}
    reasons: dict[str, str] = {}
    warnings: list[str] = []
    details: dict[str, dict] = {}

    def record(key: str, compute):
        try:
            metrics[key] = compute()
        except DegenetError as exc:
            metrics[key] = None
            reasons[key] = str(exc)

    # Path metrics: one enumeration + QoS filter per endpoint pair.
    if set(requested) & _NETWORK_METRICS:
        multi = len(scenario.endpoints) > 1
        for s, d in scenario.endpoints:
            target = f"{s}->{d}" if multi else None
            try:
                enum = enumerate_all(state.network, s, d, config.max_hops, max_paths)
                if enum.hop_capped:
                    warnings.append(
                        f"path search {s}->{d} was bounded by max_hops={config.max_hops}; "
                        "longer paths were not explored"
                    )
                vps = filter_qos(enum.paths, config.lambda_max, config.beta_min)
                if vps.is_empty:
                    warnings.append(f"no QoS-valid paths between {s!r} and {d!r}")
                if "dwpr" in requested:
                    record(_metric_key("dwpr", target), lambda: dwpr(vps, config.theta))
                if "dwpr_star" in requested:
                    record(_metric_key("dwpr_star", target), lambda: dwpr_star(vps, config.log_base))
                if want_details:
                    details[_metric_key("dwpr", target)] = dwpr_report(
                        vps, config.theta, config.log_base
                    ).to_dict()
            except DegenetError as exc:
                for name in ("dwpr", "dwpr_star"):
                    if name in requested:
                        key = _metric_key(name, target)
                        metrics[key] = None
                        reasons[key] = str(exc)

    if set(requested) & _INVENTORY_METRICS:
        multi = len(functions) > 1
        for fn in functions:
            target = fn if multi else None
            if "degeneracy_score" in requested:
                record(
                    _metric_key("degeneracy_score", target),
                    lambda fn=fn: degeneracy_score(
                        state.inventory, fn, scenario.distance, config.delta
                    ),
                )
            if {"fss", "fss_star"} & set(requested):
                capable = capable_set(state.inventory, fn)
                if "fss" in requested:
                    record(
                        _metric_key("fss", target),
                        lambda: fss(capable, config.delta, scenario.distance),
                    )
                if "fss_star" in requested:
                    record(
                        _metric_key("fss_star", target),
                        lambda: fss_star(capable, config.delta, scenario.distance),
                    )
                if want_details:
                    rep = fss_report(state.inventory, fn, config.delta, scenario.distance)
                    warnings.extend(rep.warnings)
                    details[_metric_key("fss", target)] = rep.to_dict()

    if set(requested) & _PORTFOLIO_METRICS:
        if "arq" in requested:
            record("arq", lambda: arq(state.portfolio, config.epsilon, config.delta))
        if "arq_star" in requested:
            record("arq_star", lambda: arq_star(state.portfolio, config.sigma))
        if want_details:
            rep = arq_report(state.portfolio, config.epsilon, config.delta, config.sigma)
            warnings.extend(rep.warnings)
            details["arq"] = rep.to_dict()

    if set(requested) & _STACK_METRICS:
        if state.stack is None:
            for name in ("mldi", "mldi_star"):
                if name in requested:
                    metrics[name] = None
                    reasons[name] = state.stack_reason or "no layer stack available"
        else:
            embeddings = None
            if state.inventory is not None:
                embeddings = {e.id: e.embedding for e in state.inventory.elements}
            else:
                warnings.append(
                    "no embeddings available; structural diversity defaulted to "
                    "distinct element identity"
                )
            if "mldi" in requested:
                record("mldi", lambda: mldi(state.stack, config.delta, embeddings))
            if "mldi_star" in requested:
                record("mldi_star", lambda: mldi_star(state.stack, config.gamma_weight, config.log_base))
            if want_details:
                rep = mldi_report(
                    state.stack, config.delta, config.gamma_weight, config.log_base, embeddings
                )
                warnings.extend(rep.warnings)
                details["mldi"] = rep.to_dict()

    rounded = {k: (round12(v) if isinstance(v, float) else v) for k, v in metrics.items()}
    unique_warnings = tuple(dict.fromkeys(warnings))
    return rounded, reasons, unique_warnings, (_round_tree(details) if want_details else None)


def run_scenario(
    inputs: ScenarioInputs,
    scenario: Scenario,
    max_paths: Optional[int] = None,
    details: bool = False,
) -> ScenarioReport:
    """Compute every requested metric on the intact system and after each failure step.

    Deterministic: identical inputs and configuration produce an identical
    report. Undefined values are recorded as None with a reason, never raised.
    """
    functions = _check_requirements(scenario, inputs)
    baseline = _State(inputs.network, inputs.inventory, inputs.portfolio, inputs.stack)

    steps: list[StepReport] = []
    metrics, reasons, warnings, detail = _evaluate_step(
        scenario, baseline, functions, max_paths, details
    )
    baseline_metrics = metrics
    steps.append(
        StepReport(
            index=0,
            label="baseline",
            failed_nodes=(),
            failed_edges=(),
            metrics=metrics,
            deltas={
                k: (0 if isinstance(v, int) else 0.0) if v is not None else None
                for k, v in metrics.items()
            },
            reasons=reasons,
            warnings=warnings,
            details=detail,
        )
    )

    state = baseline
    for i, failure in enumerate(scenario.failures, start=1):
        state = _apply_step(state if scenario.cumulative else baseline, failure)
        metrics, reasons, warnings, detail = _evaluate_step(
            scenario, state, functions, max_paths, details
        )
        deltas = {}
        for key, value in metrics.items():
            base = baseline_metrics.get(key)
            if value is None or base is None:
                deltas[key] = None
            elif isinstance(value, int) and isinstance(base, int):
                deltas[key] = value - base
            else:
                deltas[key] = round12(float(value) - float(base))
        steps.append(
            StepReport(
                index=i,
                label=f"step-{i}",
                failed_nodes=failure.nodes,
                failed_edges=failure.edges,
                metrics=metrics,
                deltas=deltas,
                reasons=reasons,
                warnings=warnings,
                details=detail,
            )
        )

    return ScenarioReport(
        scenario=scenario.name,
        cumulative=scenario.cumulative,
        config=scenario.config,
        distance=scenario.distance,
        steps=tuple(steps),
        warnings=(),
    )


def single_step_scenario(
    name: str,
    metrics: Sequence[str],
    config: MetricConfig,
    endpoints: Sequence[tuple[str, str]] = (),
    functions: Optional[Sequence[str]] = None,
    distance: DistanceKind = DistanceKind.EUCLIDEAN,
) -> Scenario:
    """Baseline-only scenario, used by the CLI ``metric`` command."""
    return Scenario(
        name=name,
        metrics=tuple(metrics),
        config=config,
        endpoints=tuple(endpoints),
        functions=tuple(functions) if functions is not None else None,
        distance=distance,
    )


def with_cumulative(scenario: Scenario, cumulative: bool) -> Scenario:
    return replace(scenario, cumulative=cumulative)
