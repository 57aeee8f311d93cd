"""Simple-path enumeration, QoS filtering, and path-quality distributions.

Enumeration is a depth-first search over the multigraph that treats each
parallel-edge mode choice as a distinct path and emits paths in canonical
order: lexicographic by node sequence, ties broken by mode sequence. The
search is exponential in the worst case, so it is bounded by ``max_hops``
and an optional hard cap on the number of paths.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Optional, Sequence

from .errors import InputError, PathLimitError, UnknownIdError
from .kernels import Distribution
from .model import Edge, ModeId, Network, NodeId

DEFAULT_MAX_HOPS = 8


@dataclass(frozen=True)
class Path:
    """A simple s->d path with its derived QoS and mode descriptors."""

    nodes: tuple[NodeId, ...]
    edges: tuple[Edge, ...]
    total_latency: float
    min_bandwidth: float
    hop_count: int
    mode_set: frozenset[ModeId]
    mode_freq: Distribution  # normalized edge-mode frequencies over the network's modes

    @classmethod
    def from_edges(
        cls, nodes: Sequence[NodeId], edges: Sequence[Edge], mode_universe: Sequence[ModeId]
    ) -> "Path":
        nodes = tuple(nodes)
        edges = tuple(edges)
        if len(nodes) != len(edges) + 1 or not edges:
            raise InputError("a path needs k nodes and k-1 edges, k >= 2")
        return cls(
            nodes=nodes,
            edges=edges,
            total_latency=sum(e.latency_ms for e in edges),
            min_bandwidth=min(e.bandwidth_mbps for e in edges),
            hop_count=len(edges),
            mode_set=frozenset(e.mode for e in edges),
            mode_freq=_mode_frequency(edges, mode_universe),
        )

    @property
    def mode_sequence(self) -> tuple[ModeId, ...]:
        return tuple(e.mode for e in self.edges)

    def mode_frequency(self, labels: Sequence[ModeId]) -> Distribution:
        """Per-mode edge frequencies re-expressed over the given mode labels."""
        return _mode_frequency(self.edges, labels)


def _mode_frequency(edges: Sequence[Edge], labels: Sequence[ModeId]) -> Distribution:
    labels = tuple(labels)
    counts: Mapping[ModeId, int] = {}
    for e in edges:
        counts[e.mode] = counts.get(e.mode, 0) + 1
    missing = set(counts) - set(labels)
    if missing:
        raise InputError(f"path uses modes {sorted(missing)} absent from the label set")
    hops = len(edges)
    return Distribution(tuple(counts.get(m, 0) / hops for m in labels), labels=labels)


@dataclass(frozen=True)
class PathEnumeration:
    """Enumeration result plus whether the hop cap cut any live branch."""

    paths: tuple[Path, ...]
    hop_capped: bool


def enumerate_all(
    net: Network,
    source: NodeId,
    dest: NodeId,
    max_hops: int = DEFAULT_MAX_HOPS,
    max_paths: Optional[int] = None,
) -> PathEnumeration:
    """All simple source->dest paths with at most ``max_hops`` edges.

    ``hop_capped`` is True when the depth limit pruned a branch that still had
    unvisited neighbors, i.e. the result may be incomplete. Exceeding
    ``max_paths`` aborts with PathLimitError.
    """
    for n in (source, dest):
        if n not in net.nodes:
            raise UnknownIdError(f"unknown node {n!r}")
    if source == dest:
        raise InputError("source and destination must differ")
    if max_hops < 1:
        raise InputError(f"max_hops must be >= 1, got {max_hops!r}")
    if max_paths is not None and max_paths < 1:
        raise InputError(f"max_paths must be >= 1, got {max_paths!r}")

    adjacency = net.adjacency
    universe = net.mode_universe
    found: list[Path] = []
    capped = False

    def visit(node: NodeId, trail: list[NodeId], used: list[Edge]) -> None:
        nonlocal capped
        if node == dest:
            if max_paths is not None and len(found) >= max_paths:
                raise PathLimitError(
                    f"enumeration between {source!r} and {dest!r} exceeded {max_paths} paths"
                )
            found.append(Path.from_edges(trail, used, universe))
            return
        if len(used) >= max_hops:
            if any(nb not in trail for nb, _ in adjacency[node]):
                capped = True
            return
        for neighbor, edge in adjacency[node]:
            if neighbor in trail:
                continue
            trail.append(neighbor)
            used.append(edge)
            visit(neighbor, trail, used)
            trail.pop()
            used.pop()

    visit(source, [source], [])
    # Sorted adjacency makes the DFS emit canonical order directly; trail
    # membership tests stay O(hops) because max_hops bounds the depth.
    return PathEnumeration(paths=tuple(found), hop_capped=capped)


def enumerate_simple_paths(
    net: Network,
    source: NodeId,
    dest: NodeId,
    max_hops: int = DEFAULT_MAX_HOPS,
    max_paths: Optional[int] = None,
) -> list[Path]:
    """Canonically ordered list of all simple paths within the hop bound."""
    return list(enumerate_all(net, source, dest, max_hops, max_paths).paths)


def path_quality(p: Path) -> float:
    """Composite quality: min bandwidth over (total latency + hop count)."""
    return p.min_bandwidth / (p.total_latency + p.hop_count)


def path_distribution(qualities: Sequence[float]) -> Distribution:
    """Quality-proportional probability distribution over paths."""
    if len(qualities) == 0:
        raise InputError("no qualities; distribution over zero paths is undefined")
    if any(q <= 0.0 for q in qualities):
        raise InputError("path qualities must be positive")
    return Distribution.from_weights(qualities)


@dataclass(frozen=True)
class ValidPathSet:
    """QoS-valid paths with qualities, the induced distribution, and mode combos."""

    paths: tuple[Path, ...]
    qualities: tuple[float, ...]
    distribution: Optional[Distribution]  # None iff no path survived the filter
    unique_mode_combos: frozenset[frozenset[ModeId]]

    def __len__(self) -> int:
        return len(self.paths)

    @property
    def is_empty(self) -> bool:
        return not self.paths


def filter_qos(paths: Sequence[Path], lambda_max: float, beta_min: float) -> ValidPathSet:
    """Keep paths with total latency <= lambda_max and min bandwidth >= beta_min."""
    kept = tuple(
        p for p in paths if p.total_latency <= lambda_max and p.min_bandwidth >= beta_min
    )
    qualities = tuple(path_quality(p) for p in kept)
    return ValidPathSet(
        paths=kept,
        qualities=qualities,
        distribution=path_distribution(qualities) if kept else None,
        unique_mode_combos=frozenset(p.mode_set for p in kept),
    )
