"""Summary statistics of Ω over a census."""
from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from decimal import ROUND_HALF_UP, Decimal
from typing import Iterable, Mapping

from .partitions import bell


def round_half_up(x: float, places: int = 2) -> Decimal:
    return Decimal(repr(x)).quantize(Decimal(1).scaleb(-places), rounding=ROUND_HALF_UP)


def _bell_numbers_up_to(m: int) -> set[int]:
    out, k = set(), 0
    while bell(k) <= m:
        out.add(bell(k))
        k += 1
    return out


@dataclass(frozen=True)
class StatsSummary:
    """Distribution of Ω over the semigroups of one order.

    Mean and standard deviation are population moments recomputed from the
    distribution on every access.
    """

    order: int
    distribution: Mapping[int, int]

    @property
    def size(self) -> int:
        return sum(self.distribution.values())

    @property
    def mean(self) -> float:
        return sum(k * c for k, c in self.distribution.items()) / self.size

    @property
    def stdev(self) -> float:
        mu = self.mean
        return math.sqrt(sum(c * (k - mu) ** 2 for k, c in self.distribution.items()) / self.size)

    @property
    def bell_fraction(self) -> float:
        bells = _bell_numbers_up_to(max(self.distribution, default=0))
        return sum(c for k, c in self.distribution.items() if k in bells) / self.size

    @property
    def schur_dense_count(self) -> int:
        """Semigroups with more than bell(order - 2) Schur rings."""
        bound = bell(max(self.order - 2, 0))
        return sum(c for k, c in self.distribution.items() if k > bound)

    def fraction_at_most(self, k: int) -> float:
        return sum(c for v, c in self.distribution.items() if v <= k) / self.size

    def report(self) -> str:
        lines = [
            f"order: {self.order}",
            f"semigroups: {self.size}",
            f"mean: {round_half_up(self.mean)}",
            f"stdev: {round_half_up(self.stdev)}",
            f"bell_fraction: {round_half_up(100 * self.bell_fraction, 1)}%",
            f"schur_dense: {self.schur_dense_count}",
            "omega\tcount",
        ]
        lines += [f"{k}\t{c}" for k, c in sorted(self.distribution.items())]
        return "\n".join(lines)

    def markdown(self) -> str:
        lines = ["| Ω | semigroups |", "|---:|---:|"]
        lines += [f"| {k} | {c} |" for k, c in sorted(self.distribution.items())]
        return "\n".join(lines)


def summarize(order: int, omegas: Iterable[int]) -> StatsSummary:
    omegas = list(omegas)
    if not omegas:
        raise ValueError("no Ω data")
    return StatsSummary(order, dict(sorted(Counter(omegas).items())))
