"""Algorithmic Resilience Quotient (ARQ) and its kernel-weighted variant ARQ*.

ARQ counts algorithm pairs that perform near-identically (Euclidean gap at
most epsilon) while being structurally different (cosine dissimilarity above
delta). ARQ* replaces the hard indicator with the product of a Gaussian
performance kernel and the cosine structural dissimilarity.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence, Union

from .errors import UndefinedMetricError
from .kernels import DistanceKind, cosine_structural_dissimilarity, gaussian_kernel, vector_distance
from .model import AlgorithmProfile, Portfolio

Algorithms = Union[Portfolio, Sequence[AlgorithmProfile]]


def _profiles(portfolio: Algorithms) -> tuple[AlgorithmProfile, ...]:
    return portfolio.algorithms if isinstance(portfolio, Portfolio) else tuple(portfolio)


def _require_pairable(profiles: Sequence[AlgorithmProfile], metric: str) -> None:
    if len(profiles) < 2:
        raise UndefinedMetricError(
            f"{metric} is undefined with {len(profiles)} algorithm(s); need at least 2"
        )


def arq(portfolio: Algorithms, epsilon: float, delta: float) -> float:
    """Fraction of ordered pairs that are functionally close yet structurally diverse."""
    profiles = _profiles(portfolio)
    _require_pairable(profiles, "arq")
    n = len(profiles)
    qualified = 0
    for i in range(n):
        for j in range(i + 1, n):
            gap = vector_distance(profiles[i].performance, profiles[j].performance, DistanceKind.EUCLIDEAN)
            ds = cosine_structural_dissimilarity(profiles[i].structure, profiles[j].structure)
            if gap <= epsilon and ds > delta:
                qualified += 2  # both ordered orientations of the pair
    return qualified / (n * (n - 1))


def performance_kernel(ai: AlgorithmProfile, aj: AlgorithmProfile, sigma: float) -> float:
    """Gaussian kernel similarity of the two performance vectors."""
    return gaussian_kernel(ai.performance, aj.performance, sigma)


def arq_star(portfolio: Algorithms, sigma: float) -> float:
    """Mean of performance-kernel times structural-dissimilarity over ordered pairs."""
    profiles = _profiles(portfolio)
    _require_pairable(profiles, "arq_star")
    n = len(profiles)
    total = 0.0
    for i in range(n):
        for j in range(i + 1, n):
            kp = performance_kernel(profiles[i], profiles[j], sigma)
            ds = cosine_structural_dissimilarity(profiles[i].structure, profiles[j].structure)
            total += 2.0 * kp * ds
    return total / (n * (n - 1))


@dataclass(frozen=True)
class AlgorithmPair:
    i: str
    j: str
    perf_distance: float
    kernel: float
    structural_dissimilarity: float
    passed_indicator: bool


@dataclass(frozen=True)
class ArqReport:
    """ARQ family result with the pairwise breakdown (unordered pairs)."""

    arq: Optional[float]
    arq_star: Optional[float]
    n: int
    pair_details: tuple[AlgorithmPair, ...]
    warnings: tuple[str, ...]

    def to_dict(self) -> dict:
        return {
            "arq": self.arq,
            "arq_star": self.arq_star,
            "n": self.n,
            "pair_details": [
                {
                    "i": p.i,
                    "j": p.j,
                    "perf_distance": p.perf_distance,
                    "kernel": p.kernel,
                    "structural_dissimilarity": p.structural_dissimilarity,
                    "passed_indicator": p.passed_indicator,
                }
                for p in self.pair_details
            ],
            "warnings": list(self.warnings),
        }


def arq_report(portfolio: Algorithms, epsilon: float, delta: float, sigma: float) -> ArqReport:
    """Compute ARQ and ARQ* with per-pair details."""
    profiles = _profiles(portfolio)
    n = len(profiles)
    if n < 2:
        return ArqReport(
            arq=None,
            arq_star=None,
            n=n,
            pair_details=(),
            warnings=(f"arq/arq_star undefined: {n} algorithm(s), need at least 2",),
        )
    pairs = []
    for i in range(n):
        for j in range(i + 1, n):
            gap = vector_distance(profiles[i].performance, profiles[j].performance, DistanceKind.EUCLIDEAN)
            ds = cosine_structural_dissimilarity(profiles[i].structure, profiles[j].structure)
            pairs.append(
                AlgorithmPair(
                    i=profiles[i].id,
                    j=profiles[j].id,
                    perf_distance=gap,
                    kernel=performance_kernel(profiles[i], profiles[j], sigma),
                    structural_dissimilarity=ds,
                    passed_indicator=gap <= epsilon and ds > delta,
                )
            )
    return ArqReport(
        arq=arq(profiles, epsilon, delta),
        arq_star=arq_star(profiles, sigma),
        n=n,
        pair_details=tuple(pairs),
        warnings=(),
    )
