"""Degeneracy Score, DWPR, mode entropy, and DWPR*.

DWPR averages, over the unique mode combinations, the mode dissimilarity of
every QoS-valid path that clears the quality threshold. DWPR* augments the
entropy of the quality-pooled mode distribution with the expected pairwise
Jensen-Shannon divergence between per-path mode distributions.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence, Union

from .errors import UndefinedMetricError, UnknownIdError
from .kernels import (
    DistanceKind,
    Distribution,
    jaccard_dissimilarity,
    jsd,
    shannon_entropy,
    vector_distance,
)
from .model import Element, FunctionId, Inventory, capability
from .paths import Path, ValidPathSet

Elements = Union[Inventory, Sequence[Element]]


def _elements_of(inventory: Elements, function: Optional[FunctionId] = None) -> tuple[Element, ...]:
    if isinstance(inventory, Inventory):
        if function is not None and function not in inventory.functions:
            raise UnknownIdError(f"unknown function {function!r}")
        return inventory.elements
    return tuple(inventory)


def degeneracy_score(
    inventory: Elements,
    function: FunctionId,
    kind: DistanceKind = DistanceKind.EUCLIDEAN,
    delta: float = 0.0,
) -> int:
    """Count of unordered capable pairs whose embedding distance exceeds delta.

    0 means no structurally distinct elements can perform the function; with
    an Inventory, a function missing from its universe raises UnknownIdError.
    """
    capable = [e for e in _elements_of(inventory, function) if capability(e, function)]
    score = 0
    for i in range(len(capable)):
        for k in range(i + 1, len(capable)):
            if vector_distance(capable[i].embedding, capable[k].embedding, kind) > delta:
                score += 1
    return score


def path_mode_dissimilarity(p: Path, others: ValidPathSet) -> float:
    """Mean Jaccard dissimilarity of p's mode set against every other valid path.

    A sole valid path scores 1: a unique acceptable route still counts toward
    robustness rather than multiplying by an undefined value.
    """
    rest = [q for q in others.paths if q != p]
    if not rest:
        return 1.0
    total = sum(jaccard_dissimilarity(p.mode_set, q.mode_set) for q in rest)
    return total / len(rest)


def dwpr(vps: ValidPathSet, theta: float) -> float:
    """Threshold-gated mean path dissimilarity over unique mode combinations.

    An empty valid set yields 0.0; callers surface the accompanying warning.
    """
    if vps.is_empty:
        return 0.0
    total = 0.0
    for p, q in zip(vps.paths, vps.qualities):
        if q >= theta:
            total += path_mode_dissimilarity(p, vps)
    return total / len(vps.unique_mode_combos)


def _mode_labels(vps: ValidPathSet) -> tuple[str, ...]:
    return tuple(sorted({m for p in vps.paths for m in p.mode_set}))


def pooled_mode_distribution(vps: ValidPathSet) -> Distribution:
    """Quality-weighted mixture of per-path mode frequencies."""
    if vps.is_empty:
        raise UndefinedMetricError("no QoS-valid paths; mode distribution undefined")
    labels = _mode_labels(vps)
    weights = vps.distribution.probs
    pooled = [0.0] * len(labels)
    for w, p in zip(weights, vps.paths):
        for k, f in enumerate(p.mode_frequency(labels).probs):
            pooled[k] += w * f
    return Distribution(tuple(pooled), labels=labels)


def mode_entropy(vps: ValidPathSet, base: float = 2.0) -> float:
    """Shannon entropy of the pooled mode distribution."""
    return shannon_entropy(pooled_mode_distribution(vps), base)


def dwpr_star(vps: ValidPathSet, base: float = 2.0) -> float:
    """Mode entropy plus probability-weighted pairwise JSD of mode distributions."""
    if vps.is_empty:
        raise UndefinedMetricError("no QoS-valid paths; DWPR* undefined")
    labels = _mode_labels(vps)
    mus = [p.mode_frequency(labels) for p in vps.paths]
    probs = vps.distribution.probs
    pair_total = 0.0
    for i in range(len(mus)):
        for j in range(i + 1, len(mus)):
            # ordered pairs (i,j) and (j,i) contribute identically; diagonal is 0
            pair_total += 2.0 * probs[i] * probs[j] * jsd(mus[i], mus[j], base)
    return shannon_entropy(pooled_mode_distribution(vps), base) + pair_total


@dataclass(frozen=True)
class PathDetail:
    nodes: tuple[str, ...]
    modes: tuple[str, ...]
    quality: float
    probability: float
    passed_theta: bool
    mean_dissimilarity: float


@dataclass(frozen=True)
class DwprReport:
    """DWPR family result with a per-path breakdown."""

    dwpr: float
    dwpr_star: Optional[float]
    mode_entropy: Optional[float]
    valid_path_count: int
    unique_combo_count: int
    per_path: tuple[PathDetail, ...]
    warnings: tuple[str, ...]

    def to_dict(self) -> dict:
        return {
            "dwpr": self.dwpr,
            "dwpr_star": self.dwpr_star,
            "mode_entropy": self.mode_entropy,
            "valid_path_count": self.valid_path_count,
            "unique_combo_count": self.unique_combo_count,
            "per_path": [
                {
                    "nodes": list(d.nodes),
                    "modes": list(d.modes),
                    "quality": d.quality,
                    "probability": d.probability,
                    "passed_theta": d.passed_theta,
                    "mean_dissimilarity": d.mean_dissimilarity,
                }
                for d in self.per_path
            ],
            "warnings": list(self.warnings),
        }


def dwpr_report(vps: ValidPathSet, theta: float, base: float = 2.0) -> DwprReport:
    """Compute the whole DWPR family over one valid path set."""
    if vps.is_empty:
        return DwprReport(
            dwpr=0.0,
            dwpr_star=None,
            mode_entropy=None,
            valid_path_count=0,
            unique_combo_count=0,
            per_path=(),
            warnings=("no QoS-valid paths; DWPR defaults to 0, DWPR* is undefined",),
        )
    details = tuple(
        PathDetail(
            nodes=p.nodes,
            modes=p.mode_sequence,
            quality=q,
            probability=prob,
            passed_theta=q >= theta,
            mean_dissimilarity=path_mode_dissimilarity(p, vps),
        )
        for p, q, prob in zip(vps.paths, vps.qualities, vps.distribution.probs)
    )
    return DwprReport(
        dwpr=dwpr(vps, theta),
        dwpr_star=dwpr_star(vps, base),
        mode_entropy=mode_entropy(vps, base),
        valid_path_count=len(vps),
        unique_combo_count=len(vps.unique_mode_combos),
        per_path=details,
        warnings=(),
    )
