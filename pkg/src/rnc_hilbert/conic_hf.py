"""Fat points on a smooth plane conic.

The dimension of the degree-d forms through such a scheme is computed by
stripping fixed components until Segre's regularity bound holds:

* a line through the two heaviest points is fixed when a1 + a2 > d;
* the conic itself is fixed when sum(a) > 2d.

Once neither fires, a1 + a2 <= d and sum(a) <= 2d, so the system is regular
and its dimension is the expected one.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from typing import Iterable

from .schemes import ConicScheme, binomial, canonicalize_conic, scheme_degree

__all__ = [
    "StepKind",
    "ReductionStep",
    "ReductionTrace",
    "segre_regular",
    "reduce_conic_system",
    "conic_ideal_dim",
    "conic_hilbert_function",
]


class StepKind(str, Enum):
    LINE = "LINE"
    CONIC = "CONIC"


@dataclass(frozen=True)
class ReductionStep:
    kind: StepKind
    degree_before: int
    alphas_before: tuple[int, ...]

    def guard_holds(self) -> bool:
        """Whether the step's fixed-component condition held when it fired."""
        a = self.alphas_before
        pair = a[0] + a[1] if len(a) >= 2 else None
        if self.kind is StepKind.LINE:
            return pair is not None and pair > self.degree_before
        return sum(a) > 2 * self.degree_before and (pair is None or pair <= self.degree_before)


@dataclass
class ReductionTrace:
    steps: list[ReductionStep] = field(default_factory=list)

    def kinds(self) -> list[str]:
        return [step.kind.value for step in self.steps]

    def __len__(self) -> int:
        return len(self.steps)


def segre_regular(d: int, alphas: Iterable[int]) -> bool:
    """Segre's criterion: d >= max(a1 + a2 - 1, floor(sum(a) / 2)).

    With fewer than two points the a2 term is taken as zero.
    """
    a = canonicalize_conic(alphas).alphas
    a1 = a[0] if a else 0
    a2 = a[1] if len(a) > 1 else 0
    return d >= a1 + a2 - 1 and d >= sum(a) // 2


def reduce_conic_system(d: int, alphas: Iterable[int]) -> tuple[int, ReductionTrace]:
    """Dimension of the degree-d part of the ideal, plus the removals performed.

    ``d`` may be negative, in which case the dimension is zero.
    """
    a = canonicalize_conic(alphas).alphas
    trace = ReductionTrace()
    while True:
        if d < 0:
            return 0, trace
        if not a:
            return binomial(d + 2, 2), trace
        if len(a) >= 2 and a[0] + a[1] > d:
            trace.steps.append(ReductionStep(StepKind.LINE, d, a))
            a = canonicalize_conic((a[0] - 1, a[1] - 1) + a[2:]).alphas
            d -= 1
        elif sum(a) > 2 * d:
            trace.steps.append(ReductionStep(StepKind.CONIC, d, a))
            a = canonicalize_conic(x - 1 for x in a).alphas
            d -= 2
        else:
            return max(0, binomial(d + 2, 2) - scheme_degree(a, ambient=2)), trace


@lru_cache(maxsize=1 << 16)
def _conic_ideal_dim_cached(d: int, alphas: tuple[int, ...]) -> int:
    return reduce_conic_system(d, alphas)[0]


def conic_ideal_dim(d: int, alphas: ConicScheme | Iterable[int]) -> int:
    """Dimension of the degree-d forms on P^2 through the fat conic scheme."""
    return _conic_ideal_dim_cached(d, canonicalize_conic(alphas).alphas)


def conic_hilbert_function(d: int, alphas: ConicScheme | Iterable[int]) -> int:
    """C(d+2, 2) minus :func:`conic_ideal_dim`; zero for negative d."""
    if d < 0:
        return 0
    return binomial(d + 2, 2) - conic_ideal_dim(d, alphas)
