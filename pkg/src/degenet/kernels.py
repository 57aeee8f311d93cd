"""Pure mathematical substrate shared by every metric.

Set dissimilarity, Shannon entropy, KL / Jensen-Shannon divergences, the
Gaussian (RBF) kernel, and a small family of vector distances. Everything
here is a stateless function over plain sequences, safe to call from any
thread.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import AbstractSet, Optional, Sequence

import numpy as np

from .errors import DimensionMismatchError, InputError, SupportViolationError

#: Tolerance on |sum(probs) - 1| accepted by Distribution.
SUM_TOLERANCE = 1e-9


def _log(x: float, base: float) -> float:
    if base == 2.0:
        return math.log2(x)
    return math.log(x) / math.log(base) if base != math.e else math.log(x)


@dataclass(frozen=True)
class Distribution:
    """A discrete probability distribution, optionally with outcome labels.

    Entries must be non-negative and sum to 1 within ``SUM_TOLERANCE``.
    Inputs are never renormalized silently; use :meth:`from_weights`.
    """

    probs: tuple[float, ...]
    labels: Optional[tuple[str, ...]] = None

    def __post_init__(self):
        probs = tuple(float(p) for p in self.probs)
        object.__setattr__(self, "probs", probs)
        if not probs:
            raise InputError("distribution must have at least one entry")
        for p in probs:
            if not math.isfinite(p) or p < 0.0:
                raise InputError(f"distribution entries must be finite and >= 0, got {p!r}")
        total = math.fsum(probs)
        if abs(total - 1.0) > SUM_TOLERANCE:
            raise InputError(f"distribution entries sum to {total!r}, not 1")
        if self.labels is not None:
            labels = tuple(str(x) for x in self.labels)
            object.__setattr__(self, "labels", labels)
            if len(labels) != len(probs):
                raise DimensionMismatchError(
                    f"{len(labels)} labels for {len(probs)} probabilities"
                )

    @classmethod
    def from_weights(
        cls, weights: Sequence[float], labels: Optional[Sequence[str]] = None
    ) -> "Distribution":
        """Normalize non-negative weights into a Distribution (explicit, never implicit)."""
        ws = [float(w) for w in weights]
        if not ws:
            raise InputError("cannot normalize an empty weight sequence")
        if any(not math.isfinite(w) or w < 0.0 for w in ws):
            raise InputError("weights must be finite and >= 0")
        total = math.fsum(ws)
        if total <= 0.0:
            raise InputError("weights sum to zero; no distribution defined")
        return cls(tuple(w / total for w in ws), tuple(labels) if labels is not None else None)

    def __len__(self) -> int:
        return len(self.probs)


class DistanceKind(str, Enum):
    """Closed enumeration of the supported feature-vector distances."""

    EUCLIDEAN = "euclidean"
    MANHATTAN = "manhattan"
    CHEBYSHEV = "chebyshev"
    COSINE = "cosine"
    BRAYCURTIS = "braycurtis"
    HAMMING = "hamming"


def jaccard_dissimilarity(a: AbstractSet, b: AbstractSet) -> float:
    """(|a ∪ b| - |a ∩ b|) / |a ∪ b|; two empty sets count as identical (0)."""
    union = len(a | b)
    if union == 0:
        return 0.0
    return (union - len(a & b)) / union


def shannon_entropy(p: Distribution, base: float = 2.0) -> float:
    """-sum p_i log p_i with the 0 log 0 := 0 convention."""
    return -math.fsum(pi * _log(pi, base) for pi in p.probs if pi > 0.0)


def kl_divergence(p: Distribution, m: Distribution, base: float = 2.0) -> float:
    """sum p_i log(p_i / m_i); terms with p_i = 0 contribute nothing.

    Raises SupportViolationError where p_i > 0 but m_i = 0.
    """
    if len(p) != len(m):
        raise DimensionMismatchError(f"KL over dimensions {len(p)} vs {len(m)}")
    total = 0.0
    for pi, mi in zip(p.probs, m.probs):
        if pi <= 0.0:
            continue
        if mi <= 0.0:
            raise SupportViolationError(f"p has mass {pi} where m has none")
        total += pi * _log(pi / mi, base)
    # Gibbs' inequality guarantees >= 0; clamp float noise near p == m.
    return max(0.0, total)


def jsd(p: Distribution, q: Distribution, base: float = 2.0) -> float:
    """Jensen-Shannon divergence: ½KL(p‖M) + ½KL(q‖M) with M = ½(p+q).

    Never raises a support error (M_i = 0 forces p_i = q_i = 0), is symmetric,
    and with base 2 lies in [0, 1].
    """
    if len(p) != len(q):
        raise DimensionMismatchError(f"JSD over dimensions {len(p)} vs {len(q)}")
    mix = Distribution(tuple((pi + qi) / 2.0 for pi, qi in zip(p.probs, q.probs)))
    value = 0.5 * kl_divergence(p, mix, base) + 0.5 * kl_divergence(q, mix, base)
    # Mathematically bounded by log(2); clamp float noise to keep the contract.
    return min(max(0.0, value), _log(2.0, base))


def gaussian_kernel(x: Sequence[float], y: Sequence[float], sigma: float) -> float:
    """RBF kernel exp(-‖x-y‖² / (2σ²)): 1 iff x = y, decaying toward 0."""
    if not (sigma > 0.0 and math.isfinite(sigma)):
        raise InputError(f"sigma must be a positive finite real, got {sigma!r}")
    ax, ay = np.asarray(x, dtype=float), np.asarray(y, dtype=float)
    if ax.shape != ay.shape:
        raise DimensionMismatchError(f"kernel over shapes {ax.shape} vs {ay.shape}")
    sq = float(np.sum((ax - ay) ** 2))
    # Guard exp underflow so the documented (0, 1] range holds for any input.
    return max(math.exp(-sq / (2.0 * sigma * sigma)), math.ulp(0.0))


def vector_distance(x: Sequence[float], y: Sequence[float], kind: DistanceKind) -> float:
    """Distance between equal-length feature vectors, per the selected kind.

    Cosine requires both vectors non-zero; Bray-Curtis requires non-negative
    entries with a positive total; Hamming requires binary entries and returns
    the count of differing positions.
    """
    ax, ay = np.asarray(x, dtype=float), np.asarray(y, dtype=float)
    if ax.shape != ay.shape:
        raise DimensionMismatchError(f"distance over shapes {ax.shape} vs {ay.shape}")
    kind = DistanceKind(kind)
    diff = ax - ay
    if kind is DistanceKind.EUCLIDEAN:
        return float(np.linalg.norm(diff))
    if kind is DistanceKind.MANHATTAN:
        return float(np.sum(np.abs(diff)))
    if kind is DistanceKind.CHEBYSHEV:
        return float(np.max(np.abs(diff))) if diff.size else 0.0
    if kind is DistanceKind.COSINE:
        nx, ny = float(np.linalg.norm(ax)), float(np.linalg.norm(ay))
        if nx == 0.0 or ny == 0.0:
            raise InputError("cosine distance is undefined for zero vectors")
        value = 1.0 - float(np.dot(ax, ay)) / (nx * ny)
        return min(max(0.0, value), 2.0)
    if kind is DistanceKind.BRAYCURTIS:
        if np.any(ax < 0.0) or np.any(ay < 0.0):
            raise InputError("Bray-Curtis requires non-negative entries")
        denom = float(np.sum(ax) + np.sum(ay))
        if denom <= 0.0:
            raise InputError("Bray-Curtis is undefined when all entries are zero")
        return float(np.sum(np.abs(diff))) / denom
    if kind is DistanceKind.HAMMING:
        if not (np.isin(ax, (0.0, 1.0)).all() and np.isin(ay, (0.0, 1.0)).all()):
            raise InputError("Hamming distance requires binary (0/1) entries")
        return float(np.sum(ax != ay))
    raise InputError(f"unsupported distance kind {kind!r}")  # pragma: no cover


def cosine_structural_dissimilarity(si: Sequence[float], sj: Sequence[float]) -> float:
    """1 - cos(angle) between two non-zero structure vectors, in [0, 2]."""
    return vector_distance(si, sj, DistanceKind.COSINE)
