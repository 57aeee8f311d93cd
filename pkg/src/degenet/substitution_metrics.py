"""Functional Substitution Score (FSS), the substitution weight matrix, and FSS*.

FSS is the fraction of ordered capable pairs that are structurally diverse
beyond delta; FSS* weights each diverse pair by capacity overlap and load
alignment. Both are undefined (reported, not defaulted) below two capable
elements, since the pair denominator vanishes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import UndefinedMetricError
from .kernels import DistanceKind, vector_distance
from .model import Element, FunctionId, capability
from .path_metrics import Elements, _elements_of


def capable_set(inventory: Elements, function: FunctionId) -> list[Element]:
    """Elements able to perform the function, input order preserved."""
    return [e for e in _elements_of(inventory) if capability(e, function)]


def _require_pairable(capable: Sequence[Element], metric: str) -> None:
    if len(capable) < 2:
        raise UndefinedMetricError(
            f"{metric} is undefined with {len(capable)} capable element(s); need at least 2"
        )


def fss(
    capable: Sequence[Element], delta: float, kind: DistanceKind = DistanceKind.EUCLIDEAN
) -> float:
    """Fraction of ordered pairs with embedding distance above delta, in [0, 1]."""
    _require_pairable(capable, "fss")
    n = len(capable)
    diverse = 0
    for i in range(n):
        for j in range(i + 1, n):
            if vector_distance(capable[i].embedding, capable[j].embedding, kind) > delta:
                diverse += 2  # distance is symmetric: (i,j) and (j,i) both count
    return diverse / (n * (n - 1))


def substitution_weight(ei: Element, ej: Element) -> float:
    """min(C_i, C_j) / (1 + |L_i - L_j|) times the embedding L2 distance."""
    d = vector_distance(ei.embedding, ej.embedding, DistanceKind.EUCLIDEAN)
    return min(ei.capacity, ej.capacity) / (1.0 + abs(ei.load - ej.load)) * d


def fss_star(
    capable: Sequence[Element], delta: float, kind: DistanceKind = DistanceKind.EUCLIDEAN
) -> float:
    """Mean substitution weight over ordered pairs passing the delta indicator.

    The indicator distance follows ``kind``; the weight itself always uses the
    L2 embedding distance.
    """
    _require_pairable(capable, "fss_star")
    n = len(capable)
    total = 0.0
    for i in range(n):
        for j in range(i + 1, n):
            if vector_distance(capable[i].embedding, capable[j].embedding, kind) > delta:
                total += 2.0 * substitution_weight(capable[i], capable[j])
    return total / (n * (n - 1))


@dataclass(frozen=True)
class SubstitutionPair:
    i: str
    j: str
    distance: float
    weight: float
    passed_delta: bool


@dataclass(frozen=True)
class FssReport:
    """FSS family result with the pairwise breakdown (unordered pairs)."""

    fss: Optional[float]
    fss_star: Optional[float]
    n: int
    pair_details: tuple[SubstitutionPair, ...]
    warnings: tuple[str, ...]

    def to_dict(self) -> dict:
        return {
            "fss": self.fss,
            "fss_star": self.fss_star,
            "n": self.n,
            "pair_details": [
                {
                    "i": p.i,
                    "j": p.j,
                    "distance": p.distance,
                    "weight": p.weight,
                    "passed_delta": p.passed_delta,
                }
                for p in self.pair_details
            ],
            "warnings": list(self.warnings),
        }


def fss_report(
    inventory: Elements,
    function: FunctionId,
    delta: float,
    kind: DistanceKind = DistanceKind.EUCLIDEAN,
) -> FssReport:
    """Compute FSS and FSS* for one function, with per-pair details."""
    capable = capable_set(inventory, function)
    n = len(capable)
    if n < 2:
        return FssReport(
            fss=None,
            fss_star=None,
            n=n,
            pair_details=(),
            warnings=(
                f"fss/fss_star undefined for function {function!r}: "
                f"{n} capable element(s), need at least 2",
            ),
        )
    pairs = tuple(
        SubstitutionPair(
            i=capable[i].id,
            j=capable[j].id,
            distance=vector_distance(capable[i].embedding, capable[j].embedding, kind),
            weight=substitution_weight(capable[i], capable[j]),
            passed_delta=vector_distance(capable[i].embedding, capable[j].embedding, kind) > delta,
        )
        for i in range(n)
        for j in range(i + 1, n)
    )
    return FssReport(
        fss=fss(capable, delta, kind),
        fss_star=fss_star(capable, delta, kind),
        n=n,
        pair_details=pairs,
        warnings=(),
    )
