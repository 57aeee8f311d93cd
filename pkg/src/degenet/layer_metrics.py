"""Multi-Layer Degeneracy Index (MLDI) and its entropy-based variant MLDI*.

An element is degenerate when some other element of the same layer carries an
identical function vector while being structurally diverse. Structural
diversity uses embedding L2 distance when an embedding lookup is supplied
(cross-referenced from an element inventory); otherwise distinct identity is
accepted as diversity and the report says so.

The cross-layer conditional entropy couples adjacent layers through the joint
distribution over function pairs obtained by weighting all cross-layer
element pairs equally: p(k, l) proportional to (count of layer-i elements
performing k) times (count of layer-j elements performing l).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Mapping, Optional, Sequence

import numpy as np

from .errors import UndefinedMetricError
from .kernels import DistanceKind, Distribution, shannon_entropy, vector_distance
from .model import ElementId, Layer, LayerStack

EmbeddingMap = Mapping[ElementId, Sequence[float]]


def _log(x: float, base: float) -> float:
    return math.log2(x) if base == 2.0 else math.log(x) / math.log(base)


def _pair_diverse(
    a_id: ElementId, b_id: ElementId, delta: float, embeddings: Optional[EmbeddingMap]
) -> bool:
    if embeddings is not None and a_id in embeddings and b_id in embeddings:
        return (
            vector_distance(embeddings[a_id], embeddings[b_id], DistanceKind.EUCLIDEAN) > delta
        )
    # No embeddings to compare: distinct identity stands in for diversity.
    return a_id != b_id


def degenerate_subset(
    layer: Layer, delta: float, embeddings: Optional[EmbeddingMap] = None
) -> frozenset[ElementId]:
    """Elements with a same-layer partner of identical function vector that is
    structurally diverse (embedding L2 > delta, or distinct identity without
    embeddings)."""
    members = layer.elements
    out = set()
    for a in members:
        for b in members:
            if a.id == b.id or a.functions != b.functions:
                continue
            if _pair_diverse(a.id, b.id, delta, embeddings):
                out.add(a.id)
                break
    return frozenset(out)


def mldi(stack: LayerStack, delta: float, embeddings: Optional[EmbeddingMap] = None) -> float:
    """Mean per-layer fraction of degenerate elements, in [0, 1]."""
    if not stack.layers:
        raise UndefinedMetricError("mldi is undefined on an empty layer stack")
    ratios = [
        len(degenerate_subset(layer, delta, embeddings)) / len(layer.elements)
        for layer in stack.layers
    ]
    return sum(ratios) / len(ratios)


def layer_function_distribution(
    layer: Layer, labels: Optional[Sequence[str]] = None
) -> tuple[tuple[float, ...], Distribution]:
    """Per-function coverage fractions and their normalization.

    Coverage is the fraction of the layer's elements performing each function;
    it need not sum to 1, so the entropy-ready distribution is its explicit
    normalization.
    """
    matrix = np.array([el.functions for el in layer.elements], dtype=float)
    coverage = matrix.mean(axis=0)
    if not np.any(coverage > 0.0):
        raise UndefinedMetricError(
            f"layer {layer.id!r} covers no functions; its distribution is undefined"
        )
    dist = Distribution.from_weights(coverage.tolist(), labels)
    return tuple(float(c) for c in coverage), dist


def layer_entropy(layer: Layer, base: float = 2.0) -> float:
    """Shannon entropy of the layer's normalized function distribution."""
    _, dist = layer_function_distribution(layer)
    return shannon_entropy(dist, base)


def _function_counts(layer: Layer) -> np.ndarray:
    return np.array([el.functions for el in layer.elements], dtype=float).sum(axis=0)


def conditional_layer_entropy(li: Layer, lj: Layer, base: float = 2.0) -> float:
    """H(li | lj) from the all-pairs joint over function pairs: H(joint) - H(lj marginal)."""
    joint = np.outer(_function_counts(li), _function_counts(lj))
    total = joint.sum()
    if total <= 0.0:
        raise UndefinedMetricError(
            f"joint coverage of layers {li.id!r} and {lj.id!r} is all-zero"
        )
    p = joint / total
    flat = p.ravel()
    h_joint = -math.fsum(float(x) * _log(float(x), base) for x in flat if x > 0.0)
    marginal = p.sum(axis=0)
    h_j = -math.fsum(float(x) * _log(float(x), base) for x in marginal if x > 0.0)
    # conditioning cannot increase entropy; clamp float noise
    return max(0.0, h_joint - h_j)


def mldi_star(stack: LayerStack, gamma_weight: float, base: float = 2.0) -> float:
    """Mean normalized layer entropy plus gamma-weighted normalized conditional
    entropy toward the next layer; the last layer has no successor term."""
    k = len(stack.layers)
    if k < 1:
        raise UndefinedMetricError("mldi_star is undefined on an empty layer stack")
    m = len(stack.function_universe)
    if m < 2:
        raise UndefinedMetricError("mldi_star needs at least 2 functions (log m > 0)")
    log_m = _log(float(m), base)
    total = 0.0
    for i, layer in enumerate(stack.layers):
        total += layer_entropy(layer, base) / log_m
        if i + 1 < k:
            total += gamma_weight * conditional_layer_entropy(layer, stack.layers[i + 1], base) / log_m
    return total / k


@dataclass(frozen=True)
class LayerDetail:
    layer_id: str
    degenerate_count: int
    total: int
    normalized_entropy: Optional[float]
    normalized_conditional_entropy: Optional[float]  # None for the last layer


@dataclass(frozen=True)
class MldiReport:
    """MLDI family result with a per-layer breakdown."""

    mldi: float
    mldi_star: Optional[float]
    per_layer: tuple[LayerDetail, ...]
    warnings: tuple[str, ...]

    def to_dict(self) -> dict:
        return {
            "mldi": self.mldi,
            "mldi_star": self.mldi_star,
            "per_layer": [
                {
                    "layer_id": d.layer_id,
                    "degenerate_count": d.degenerate_count,
                    "total": d.total,
                    "normalized_entropy": d.normalized_entropy,
                    "normalized_conditional_entropy": d.normalized_conditional_entropy,
                }
                for d in self.per_layer
            ],
            "warnings": list(self.warnings),
        }


def mldi_report(
    stack: LayerStack,
    delta: float,
    gamma_weight: float,
    base: float = 2.0,
    embeddings: Optional[EmbeddingMap] = None,
) -> MldiReport:
    """Compute MLDI and MLDI* with per-layer details."""
    if not stack.layers:
        raise UndefinedMetricError("mldi is undefined on an empty layer stack")
    warnings = []
    if embeddings is None:
        warnings.append(
            "no embeddings available; structural diversity defaulted to distinct element identity"
        )
    else:
        missing = sorted(stack.element_ids - set(embeddings))
        if missing:
            warnings.append(
                "elements without embeddings fall back to identity-based diversity: "
                + ", ".join(missing)
            )
    m = len(stack.function_universe)
    log_m = _log(float(m), base) if m >= 2 else None
    star: Optional[float]
    try:
        star = mldi_star(stack, gamma_weight, base)
    except UndefinedMetricError as exc:
        star = None
        warnings.append(f"mldi_star undefined: {exc}")
    details = []
    k = len(stack.layers)
    for i, layer in enumerate(stack.layers):
        norm_h = norm_cond = None
        if log_m is not None:
            try:
                norm_h = layer_entropy(layer, base) / log_m
                if i + 1 < k:
                    norm_cond = conditional_layer_entropy(layer, stack.layers[i + 1], base) / log_m
            except UndefinedMetricError:
                pass
        details.append(
            LayerDetail(
                layer_id=layer.id,
                degenerate_count=len(degenerate_subset(layer, delta, embeddings)),
                total=len(layer.elements),
                normalized_entropy=norm_h,
                normalized_conditional_entropy=norm_cond,
            )
        )
    return MldiReport(
        mldi=mldi(stack, delta, embeddings),
        mldi_star=star,
        per_layer=tuple(details),
        warnings=tuple(warnings),
    )
