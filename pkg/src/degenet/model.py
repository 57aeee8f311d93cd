"""Domain types, the JSON document formats, parsing/validation, and failure edits.

Four document kinds exist, all UTF-8 JSON objects:

* network    -- ``{"nodes": [{"id": ...}], "edges": [{"u", "v", "mode",
  "latency_ms", "bandwidth_mbps"}], "metadata": {...}}``
* inventory  -- ``{"functions": [...], "elements": [{"id", "capabilities",
  "embedding", "capacity", "load"}]}``
* portfolio  -- ``{"algorithms": [{"id", "performance", "structure"}]}``
* layerstack -- ``{"functions": [...], "layers": [{"id", "elements":
  [{"id", "f": [...]}]}]}``

Parsers reject rather than repair: every failure raises DocumentError with a
``syntax`` / ``schema.*`` / ``invariant.*`` reason code. All types are
immutable after construction and safe to share across threads.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping, Optional, Sequence, Union

from .errors import DocumentError, InputError, UnknownIdError

NodeId = str
ModeId = str
FunctionId = str
ElementId = str
AlgorithmId = str
LayerId = str

#: Canonical (u, v, mode) edge key with endpoints in sorted order.
EdgeKey = tuple[NodeId, NodeId, ModeId]


def _finite(value, code: str, what: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise DocumentError(code, f"{what} must be a number, got {value!r}")
    value = float(value)
    if not math.isfinite(value):
        raise DocumentError(code, f"{what} must be finite, got {value!r}")
    return value


@dataclass(frozen=True)
class Edge:
    """Undirected communication link carrying (mode, latency, bandwidth)."""

    u: NodeId
    v: NodeId
    mode: ModeId
    latency_ms: float
    bandwidth_mbps: float

    def __post_init__(self):
        if self.u == self.v:
            raise DocumentError("invariant.self-loop", f"self-loop edge at {self.u!r}")
        lat = _finite(self.latency_ms, "invariant.bad-latency", f"latency of {self.u}-{self.v}")
        if lat < 0.0:
            raise DocumentError("invariant.bad-latency", f"negative latency on {self.u}-{self.v}")
        bw = _finite(self.bandwidth_mbps, "invariant.bad-bandwidth", f"bandwidth of {self.u}-{self.v}")
        if bw <= 0.0:
            raise DocumentError(
                "invariant.bad-bandwidth", f"bandwidth on {self.u}-{self.v} must be > 0"
            )
        object.__setattr__(self, "latency_ms", lat)
        object.__setattr__(self, "bandwidth_mbps", bw)

    def key(self) -> EdgeKey:
        a, b = sorted((self.u, self.v))
        return (a, b, self.mode)


@dataclass(frozen=True)
class Network:
    """Labeled undirected multigraph; parallel edges must differ in mode."""

    nodes: frozenset[NodeId]
    edges: tuple[Edge, ...]
    metadata: Mapping[str, str] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "nodes", frozenset(self.nodes))
        object.__setattr__(self, "edges", tuple(self.edges))
        object.__setattr__(self, "metadata", dict(self.metadata))
        seen: set[EdgeKey] = set()
        for e in self.edges:
            for endpoint in (e.u, e.v):
                if endpoint not in self.nodes:
                    raise DocumentError(
                        "invariant.dangling-endpoint",
                        f"edge {e.u}-{e.v} references unknown node {endpoint!r}",
                    )
            k = e.key()
            if k in seen:
                raise DocumentError(
                    "invariant.duplicate-edge-mode",
                    f"parallel edges {e.u}-{e.v} share mode {e.mode!r}",
                )
            seen.add(k)

    @cached_property
    def adjacency(self) -> Mapping[NodeId, tuple[tuple[NodeId, Edge], ...]]:
        """node -> ((neighbor, edge), ...) sorted by (neighbor, mode)."""
        adj: dict[NodeId, list[tuple[NodeId, Edge]]] = {n: [] for n in self.nodes}
        for e in self.edges:
            adj[e.u].append((e.v, e))
            adj[e.v].append((e.u, e))
        return {
            n: tuple(sorted(pairs, key=lambda p: (p[0], p[1].mode)))
            for n, pairs in adj.items()
        }

    @cached_property
    def mode_universe(self) -> tuple[ModeId, ...]:
        return tuple(sorted({e.mode for e in self.edges}))

    @cached_property
    def edge_keys(self) -> frozenset[EdgeKey]:
        return frozenset(e.key() for e in self.edges)


@dataclass(frozen=True)
class Element:
    """A functional component: capability set, structural embedding, capacity, load."""

    id: ElementId
    capabilities: frozenset[FunctionId]
    embedding: tuple[float, ...]
    capacity: float
    load: float

    def __post_init__(self):
        object.__setattr__(self, "capabilities", frozenset(self.capabilities))
        emb = tuple(
            _finite(x, "invariant.bad-embedding", f"embedding of {self.id!r}")
            for x in self.embedding
        )
        if not emb:
            raise DocumentError("invariant.bad-embedding", f"element {self.id!r} has an empty embedding")
        object.__setattr__(self, "embedding", emb)
        cap = _finite(self.capacity, "invariant.bad-capacity", f"capacity of {self.id!r}")
        if cap < 0.0:
            raise DocumentError("invariant.bad-capacity", f"capacity of {self.id!r} must be >= 0")
        load = _finite(self.load, "invariant.bad-load", f"load of {self.id!r}")
        if load < 0.0:
            raise DocumentError("invariant.bad-load", f"load of {self.id!r} must be >= 0")
        object.__setattr__(self, "capacity", cap)
        object.__setattr__(self, "load", load)


@dataclass(frozen=True)
class Inventory:
    """Element inventory with its function universe."""

    functions: tuple[FunctionId, ...]
    elements: tuple[Element, ...]

    def __post_init__(self):
        object.__setattr__(self, "functions", tuple(self.functions))
        object.__setattr__(self, "elements", tuple(self.elements))
        if len(set(self.functions)) != len(self.functions):
            raise DocumentError("invariant.duplicate-function", "duplicate function id in inventory")
        ids = [e.id for e in self.elements]
        if len(set(ids)) != len(ids):
            raise DocumentError("invariant.duplicate-element", "duplicate element id in inventory")
        known = set(self.functions)
        dims = {len(e.embedding) for e in self.elements}
        if len(dims) > 1:
            raise DocumentError(
                "invariant.embedding-dimension",
                f"elements mix embedding dimensions {sorted(dims)}",
            )
        for e in self.elements:
            unknown = e.capabilities - known
            if unknown:
                raise DocumentError(
                    "invariant.unknown-capability",
                    f"element {e.id!r} claims unknown function(s) {sorted(unknown)}",
                )

    @property
    def embedding_dim(self) -> Optional[int]:
        return len(self.elements[0].embedding) if self.elements else None


@dataclass(frozen=True)
class AlgorithmProfile:
    """Algorithm described by a performance vector and a structural feature vector."""

    id: AlgorithmId
    performance: tuple[float, ...]
    structure: tuple[float, ...]

    def __post_init__(self):
        perf = tuple(
            _finite(x, "invariant.bad-performance", f"performance of {self.id!r}")
            for x in self.performance
        )
        struct = tuple(
            _finite(x, "invariant.bad-structure", f"structure of {self.id!r}")
            for x in self.structure
        )
        if not perf or not struct:
            raise DocumentError(
                "invariant.bad-vector", f"algorithm {self.id!r} has an empty vector"
            )
        if all(x == 0.0 for x in struct):
            raise DocumentError(
                "invariant.zero-structure",
                f"algorithm {self.id!r} has an all-zero structure vector",
            )
        object.__setattr__(self, "performance", perf)
        object.__setattr__(self, "structure", struct)


@dataclass(frozen=True)
class Portfolio:
    """A set of candidate algorithms with consistent vector dimensions."""

    algorithms: tuple[AlgorithmProfile, ...]

    def __post_init__(self):
        object.__setattr__(self, "algorithms", tuple(self.algorithms))
        ids = [a.id for a in self.algorithms]
        if len(set(ids)) != len(ids):
            raise DocumentError("invariant.duplicate-algorithm", "duplicate algorithm id")
        for attr in ("performance", "structure"):
            dims = {len(getattr(a, attr)) for a in self.algorithms}
            if len(dims) > 1:
                raise DocumentError(
                    "invariant.dimension",
                    f"algorithms mix {attr} dimensions {sorted(dims)}",
                )


@dataclass(frozen=True)
class LayerElement:
    """Layer member: element id plus its binary function vector."""

    id: ElementId
    functions: tuple[int, ...]

    def __post_init__(self):
        fs = []
        for x in self.functions:
            if isinstance(x, bool) or x not in (0, 1):
                raise DocumentError(
                    "invariant.binary-function-vector",
                    f"function vector of {self.id!r} must contain only 0/1",
                )
            fs.append(int(x))
        object.__setattr__(self, "functions", tuple(fs))


@dataclass(frozen=True)
class Layer:
    """One protocol-stack layer: a non-empty ordered set of elements."""

    id: LayerId
    elements: tuple[LayerElement, ...]

    def __post_init__(self):
        object.__setattr__(self, "elements", tuple(self.elements))
        if not self.elements:
            raise DocumentError("invariant.empty-layer", f"layer {self.id!r} has no elements")
        ids = [e.id for e in self.elements]
        if len(set(ids)) != len(ids):
            raise DocumentError(
                "invariant.duplicate-layer-element",
                f"duplicate element id within layer {self.id!r}",
            )


@dataclass(frozen=True)
class LayerStack:
    """Ordered layers over a shared function universe of size m."""

    layers: tuple[Layer, ...]
    function_universe: tuple[FunctionId, ...]

    def __post_init__(self):
        object.__setattr__(self, "layers", tuple(self.layers))
        object.__setattr__(self, "function_universe", tuple(self.function_universe))
        if not self.function_universe:
            raise DocumentError("invariant.empty-function-universe", "layer stack defines no functions")
        if len(set(self.function_universe)) != len(self.function_universe):
            raise DocumentError("invariant.duplicate-function", "duplicate function id in layer stack")
        ids = [l.id for l in self.layers]
        if len(set(ids)) != len(ids):
            raise DocumentError("invariant.duplicate-layer", "duplicate layer id")
        m = len(self.function_universe)
        for layer in self.layers:
            for el in layer.elements:
                if len(el.functions) != m:
                    raise DocumentError(
                        "invariant.function-vector-length",
                        f"element {el.id!r} in layer {layer.id!r} has a length-"
                        f"{len(el.functions)} function vector, expected {m}",
                    )

    @property
    def element_ids(self) -> frozenset[ElementId]:
        return frozenset(el.id for layer in self.layers for el in layer.elements)


@dataclass(frozen=True)
class MetricConfig:
    """Thresholds and knobs shared across the metric families.

    delta/epsilon are the structural/functional thresholds, theta the path
    quality threshold, lambda_max/beta_min the QoS limits, sigma the Gaussian
    kernel width, gamma_weight the cross-layer term weight, log_base 2 or e,
    max_hops the path-enumeration cap.
    """

    delta: float = 0.0
    epsilon: float = 0.0
    theta: float = 0.0
    lambda_max: float = math.inf
    beta_min: float = 0.0
    sigma: float = 1.0
    gamma_weight: float = 0.5
    log_base: float = 2.0
    max_hops: int = 8

    def __post_init__(self):
        for name in ("delta", "epsilon", "lambda_max", "beta_min"):
            value = float(getattr(self, name))
            object.__setattr__(self, name, value)
            if math.isnan(value) or value < 0.0:
                raise InputError(f"{name} must be >= 0, got {value!r}")
        theta = float(self.theta)
        if math.isnan(theta):
            raise InputError("theta must be a real number")
        object.__setattr__(self, "theta", theta)
        sigma = float(self.sigma)
        if not (sigma > 0.0 and math.isfinite(sigma)):
            raise InputError(f"sigma must be a positive finite real, got {sigma!r}")
        object.__setattr__(self, "sigma", sigma)
        gamma = float(self.gamma_weight)
        if not (0.0 <= gamma <= 1.0):
            raise InputError(f"gamma_weight must lie in [0, 1], got {gamma!r}")
        object.__setattr__(self, "gamma_weight", gamma)
        base = float(self.log_base)
        if base not in (2.0, math.e):
            raise InputError("log_base must be 2 or e")
        object.__setattr__(self, "log_base", base)
        hops = self.max_hops
        if isinstance(hops, bool) or not isinstance(hops, int) or hops < 1:
            raise InputError(f"max_hops must be a positive integer, got {hops!r}")


Document = Union[Network, Inventory, Portfolio, LayerStack]

_KIND_NAMES = ("network", "inventory", "portfolio", "layerstack")


# ---------------------------------------------------------------------------
# Parsing


def _load_json(text: str) -> dict:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(
            "syntax", f"invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}"
        ) from exc
    if not isinstance(obj, dict):
        raise DocumentError("schema.bad-type", "top-level document must be a JSON object")
    return obj


def _get(obj: dict, key: str, typ, where: str):
    if key not in obj:
        raise DocumentError("schema.missing-field", f"{where} is missing field {key!r}")
    value = obj[key]
    if typ is float:
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise DocumentError("schema.bad-type", f"{where}.{key} must be a number")
        return float(value)
    if not isinstance(value, typ) or (typ is not bool and isinstance(value, bool)):
        raise DocumentError("schema.bad-type", f"{where}.{key} must be of type {typ.__name__}")
    return value


def _str_list(value, where: str) -> list[str]:
    if not isinstance(value, list) or not all(isinstance(x, str) for x in value):
        raise DocumentError("schema.bad-type", f"{where} must be a list of strings")
    return value


def _num_list(value, where: str) -> list[float]:
    if not isinstance(value, list) or not all(
        isinstance(x, (int, float)) and not isinstance(x, bool) for x in value
    ):
        raise DocumentError("schema.bad-type", f"{where} must be a list of numbers")
    return [float(x) for x in value]


def document_kind(obj: dict) -> str:
    """Classify a decoded JSON object into one of the four document kinds."""
    if "algorithms" in obj:
        return "portfolio"
    if "layers" in obj:
        return "layerstack"
    if "elements" in obj:
        return "inventory"
    if "nodes" in obj or "edges" in obj:
        return "network"
    raise DocumentError(
        "schema.unknown-kind",
        f"cannot classify document; expected one of {', '.join(_KIND_NAMES)}",
    )


def network_from_dict(obj: dict) -> Network:
    raw_nodes = _get(obj, "nodes", list, "network")
    node_ids: list[str] = []
    for i, n in enumerate(raw_nodes):
        if not isinstance(n, dict):
            raise DocumentError("schema.bad-type", f"network.nodes[{i}] must be an object")
        node_ids.append(_get(n, "id", str, f"network.nodes[{i}]"))
    if len(set(node_ids)) != len(node_ids):
        dupes = sorted({x for x in node_ids if node_ids.count(x) > 1})
        raise DocumentError("invariant.duplicate-node", f"duplicate node id(s) {dupes}")
    raw_edges = _get(obj, "edges", list, "network")
    edges = []
    for i, e in enumerate(raw_edges):
        if not isinstance(e, dict):
            raise DocumentError("schema.bad-type", f"network.edges[{i}] must be an object")
        where = f"network.edges[{i}]"
        edges.append(
            Edge(
                u=_get(e, "u", str, where),
                v=_get(e, "v", str, where),
                mode=_get(e, "mode", str, where),
                latency_ms=_get(e, "latency_ms", float, where),
                bandwidth_mbps=_get(e, "bandwidth_mbps", float, where),
            )
        )
    metadata = obj.get("metadata", {})
    if not isinstance(metadata, dict) or not all(
        isinstance(k, str) and isinstance(v, str) for k, v in metadata.items()
    ):
        raise DocumentError("schema.bad-type", "network.metadata must map strings to strings")
    return Network(nodes=frozenset(node_ids), edges=tuple(edges), metadata=metadata)


def inventory_from_dict(obj: dict) -> Inventory:
    functions = _str_list(_get(obj, "functions", list, "inventory"), "inventory.functions")
    elements = []
    for i, e in enumerate(_get(obj, "elements", list, "inventory")):
        if not isinstance(e, dict):
            raise DocumentError("schema.bad-type", f"inventory.elements[{i}] must be an object")
        where = f"inventory.elements[{i}]"
        elements.append(
            Element(
                id=_get(e, "id", str, where),
                capabilities=frozenset(
                    _str_list(_get(e, "capabilities", list, where), f"{where}.capabilities")
                ),
                embedding=tuple(_num_list(_get(e, "embedding", list, where), f"{where}.embedding")),
                capacity=_get(e, "capacity", float, where),
                load=_get(e, "load", float, where),
            )
        )
    return Inventory(functions=tuple(functions), elements=tuple(elements))


def portfolio_from_dict(obj: dict) -> Portfolio:
    algorithms = []
    for i, a in enumerate(_get(obj, "algorithms", list, "portfolio")):
        if not isinstance(a, dict):
            raise DocumentError("schema.bad-type", f"portfolio.algorithms[{i}] must be an object")
        where = f"portfolio.algorithms[{i}]"
        algorithms.append(
            AlgorithmProfile(
                id=_get(a, "id", str, where),
                performance=tuple(_num_list(_get(a, "performance", list, where), f"{where}.performance")),
                structure=tuple(_num_list(_get(a, "structure", list, where), f"{where}.structure")),
            )
        )
    return Portfolio(algorithms=tuple(algorithms))


def layerstack_from_dict(obj: dict) -> LayerStack:
    functions = _str_list(_get(obj, "functions", list, "layerstack"), "layerstack.functions")
    layers = []
    for i, l in enumerate(_get(obj, "layers", list, "layerstack")):
        if not isinstance(l, dict):
            raise DocumentError("schema.bad-type", f"layerstack.layers[{i}] must be an object")
        where = f"layerstack.layers[{i}]"
        members = []
        for j, el in enumerate(_get(l, "elements", list, where)):
            if not isinstance(el, dict):
                raise DocumentError("schema.bad-type", f"{where}.elements[{j}] must be an object")
            ewhere = f"{where}.elements[{j}]"
            fvec = _get(el, "f", list, ewhere)
            if not all(isinstance(x, int) and not isinstance(x, bool) for x in fvec):
                raise DocumentError("schema.bad-type", f"{ewhere}.f must be a list of integers")
            members.append(LayerElement(id=_get(el, "id", str, ewhere), functions=tuple(fvec)))
        layers.append(Layer(id=_get(l, "id", str, where), elements=tuple(members)))
    return LayerStack(layers=tuple(layers), function_universe=tuple(functions))


_PARSERS = {
    "network": network_from_dict,
    "inventory": inventory_from_dict,
    "portfolio": portfolio_from_dict,
    "layerstack": layerstack_from_dict,
}


def parse_document(text: str, expect: Optional[str] = None) -> Document:
    """Parse and fully validate a document, auto-detecting its kind.

    ``expect`` pins the kind ("network", "inventory", "portfolio",
    "layerstack") and rejects anything else.
    """
    obj = _load_json(text)
    kind = document_kind(obj)
    if expect is not None and kind != expect:
        raise DocumentError("schema.unexpected-kind", f"expected a {expect} document, found {kind}")
    return _PARSERS[kind](obj)


# ---------------------------------------------------------------------------
# Emission (inverse of parsing; parse(emit(x)) == x)


def to_document(value: Document) -> dict:
    """Convert a typed object back into its JSON document form."""
    if isinstance(value, Network):
        return {
            "nodes": [{"id": n} for n in sorted(value.nodes)],
            "edges": [
                {
                    "u": e.u,
                    "v": e.v,
                    "mode": e.mode,
                    "latency_ms": e.latency_ms,
                    "bandwidth_mbps": e.bandwidth_mbps,
                }
                for e in value.edges
            ],
            "metadata": dict(sorted(value.metadata.items())),
        }
    if isinstance(value, Inventory):
        return {
            "functions": list(value.functions),
            "elements": [
                {
                    "id": e.id,
                    "capabilities": sorted(e.capabilities),
                    "embedding": list(e.embedding),
                    "capacity": e.capacity,
                    "load": e.load,
                }
                for e in value.elements
            ],
        }
    if isinstance(value, Portfolio):
        return {
            "algorithms": [
                {"id": a.id, "performance": list(a.performance), "structure": list(a.structure)}
                for a in value.algorithms
            ]
        }
    if isinstance(value, LayerStack):
        return {
            "functions": list(value.function_universe),
            "layers": [
                {"id": l.id, "elements": [{"id": el.id, "f": list(el.functions)} for el in l.elements]}
                for l in value.layers
            ],
        }
    raise InputError(f"not a document type: {type(value).__name__}")


def emit_document(value: Document) -> str:
    return json.dumps(to_document(value), indent=2, sort_keys=True) + "\n"


# ---------------------------------------------------------------------------
# Operations


def capability(element: Element, function: FunctionId) -> int:
    """1 iff the element can perform the function, else 0."""
    return 1 if function in element.capabilities else 0


def canonical_edge_key(u: NodeId, v: NodeId, mode: ModeId) -> EdgeKey:
    a, b = sorted((str(u), str(v)))
    return (a, b, str(mode))


def remove_failures(
    net: Network,
    failed_nodes: Iterable[NodeId] = (),
    failed_edges: Iterable[Sequence[str]] = (),
) -> Network:
    """Return a new Network minus the failed nodes (with incident edges) and edges.

    Edge failures are (u, v, mode) triples; endpoint order does not matter.
    Unknown ids raise UnknownIdError; the input network is never mutated.
    """
    nodes_out = set(failed_nodes)
    for n in nodes_out:
        if n not in net.nodes:
            raise UnknownIdError(f"unknown node {n!r}")
    keys_out = set()
    for spec in failed_edges:
        try:
            u, v, mode = spec
        except (TypeError, ValueError):
            raise InputError(f"edge key must be a (u, v, mode) triple, got {spec!r}") from None
        key = canonical_edge_key(u, v, mode)
        if key not in net.edge_keys:
            raise UnknownIdError(f"unknown edge {key!r}")
        keys_out.add(key)
    kept_edges = tuple(
        e
        for e in net.edges
        if e.u not in nodes_out and e.v not in nodes_out and e.key() not in keys_out
    )
    return Network(
        nodes=net.nodes - nodes_out, edges=kept_edges, metadata=dict(net.metadata)
    )
