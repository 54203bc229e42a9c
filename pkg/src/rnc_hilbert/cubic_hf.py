"""Hilbert functions of fat points supported on the twisted cubic in P^3.

The engine raises multiplicities one unit at a time.  Going from Z to W,
where W has the last (smallest) multiplicity of Z raised by one, the
dimension drops by the dimension, in degree m_s, of a fat point scheme on a
plane conic: the t-projection of Z from its last point.  Starting from a
single fat point, whose ideal has a closed-form dimension, every scheme is
reached by such steps, so dim I_t only depends on (t, m_1, ..., m_s).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .conic_hf import conic_ideal_dim
from .schemes import (
    FatPointScheme,
    InvalidInputError,
    binomial,
    canonicalize,
    canonicalize_conic,
    scheme_degree,
)

__all__ = [
    "CriterionInapplicable",
    "TProjection",
    "HilbertRecord",
    "property_P",
    "curve_multiplicity_bound",
    "line_multiplicity_bound",
    "max_line_multiplicity",
    "contains_curve",
    "t_projection",
    "dimension_drop",
    "ideal_dim",
    "hilbert_function",
    "is_regular",
    "regularity_index",
    "symbolic_power_dim",
]


class CriterionInapplicable(ValueError):
    """The containment criterion needs I_t != 0 and was called with I_t == 0."""


@dataclass(frozen=True)
class TProjection:
    """Multiplicities of the t-projection: n at Q, n_list at Q_1..Q_{s-1}."""

    n: int
    n_list: tuple[int, ...]
    eval_degree: int

    def conic_scheme(self):
        return canonicalize_conic((self.n,) + self.n_list)


@dataclass(frozen=True)
class HilbertRecord:
    t: int
    ideal_dim: int
    hilbert_value: int
    regular: bool
    curve_mult: int
    line_mult_max: int


def _pos(x: int) -> int:
    return x if x > 0 else 0


def _curve_excess(mults: Sequence[int], t: int, l: int) -> bool:
    # 3t + 5(1 - l) < sum (m_i - l + 1)^+
    return 3 * t + 5 * (1 - l) < sum(_pos(m - l + 1) for m in mults)


def property_P(scheme: Iterable[int], t: int, nu: int) -> bool:
    """True iff 3t + 5(1 - l) < sum_i (m_i - l + 1)^+ for every 1 <= l <= nu.

    When it holds, every surface of degree t through the scheme contains the
    cubic with multiplicity at least ``nu``.
    """
    mults = tuple(scheme)
    return all(_curve_excess(mults, t, l) for l in range(1, nu + 1))


def _curve_bound(mults: Sequence[int], t: int) -> int:
    cap = mults[-1] + 1
    n = 0
    while n < cap and _curve_excess(mults, t, n + 1):
        n += 1
    return n


def curve_multiplicity_bound(scheme: Iterable[int], t: int) -> int:
    """min(m_s + 1, largest nu for which :func:`property_P` holds)."""
    mults = canonicalize(scheme).mults
    if not mults:
        raise InvalidInputError("curve multiplicity bound needs at least one point")
    return _curve_bound(mults, t)


def line_multiplicity_bound(m_i: int, m_j: int, t: int) -> int:
    """Guaranteed multiplicity (m_i + m_j - t)^+ of the secant line P_iP_j."""
    return _pos(m_i + m_j - t)


def max_line_multiplicity(scheme: Iterable[int], t: int) -> int:
    mults = canonicalize(scheme).mults
    if len(mults) < 2:
        return 0
    # the two heaviest points give the largest pair sum
    return line_multiplicity_bound(mults[0], mults[1], t)


def contains_curve(scheme: Iterable[int], t: int) -> bool:
    """Whether every degree-t surface through the scheme contains the cubic.

    Holds iff 3t < sum(m_i), provided I_t is nonzero.

    Raises:
        CriterionInapplicable: if dim I_t == 0.
    """
    z = canonicalize(scheme)
    if ideal_dim(z, t) == 0:
        raise CriterionInapplicable(f"I_{t} = 0 for {z.mults}; containment is vacuous")
    return 3 * t < sum(z.mults)


def _projection(mults: Sequence[int], t: int) -> TProjection:
    # mults sorted non-increasingly; the last entry may be zero
    ms = mults[-1]
    n_list = tuple(_pos(m + ms - t) for m in mults[:-1])
    return TProjection(n=_curve_bound(mults, t), n_list=n_list, eval_degree=ms)


def t_projection(scheme: Sequence[int], t: int) -> TProjection:
    """The t-projection of the scheme from its last point.

    ``scheme`` must be sorted non-increasingly with at least two entries; a
    trailing zero is allowed, since the projection is also needed for m_s = 0.
    """
    mults = tuple(int(m) for m in scheme)
    if len(mults) < 2:
        raise InvalidInputError("t-projection needs at least two points")
    if any(m < 0 for m in mults) or list(mults) != sorted(mults, reverse=True):
        raise InvalidInputError(f"{mults} is not sorted non-increasingly")
    return _projection(mults, t)


def dimension_drop(scheme: Sequence[int], t: int) -> int:
    """dim I_t(Z) - dim I_t(W), W being Z with its last multiplicity raised by one."""
    mults = tuple(scheme)
    if len(mults) == 1:
        m = mults[0]
        return binomial(m + 2, 2) if t >= m else 0
    proj = t_projection(mults, t)
    return conic_ideal_dim(proj.eval_degree, proj.conic_scheme())


def _single_point_dim(m: int, t: int) -> int:
    return max(0, binomial(t + 3, 3) - binomial(m + 2, 3))


@lru_cache(maxsize=1 << 14)
def _ideal_dim(mults: tuple[int, ...], t: int) -> int:
    if not mults:
        return binomial(t + 3, 3)
    if len(mults) == 1:
        return _single_point_dim(mults[0], t)
    head, last = mults[:-1], mults[-1]
    z = head + (last - 1,)
    below = _ideal_dim(head if last == 1 else z, t)
    return below - dimension_drop(z, t)


def ideal_dim(scheme: FatPointScheme | Iterable[int], t: int) -> int:
    """dim I_t for fat points with the given multiplicities on the twisted cubic."""
    if t < 0:
        raise InvalidInputError(f"negative degree {t}")
    mults = canonicalize(scheme).mults
    # Walk the chain bottom-up so deep schemes don't exhaust the recursion
    # limit; each prefix lands in the cache before it is needed.
    for j in range(2, len(mults)):
        for k in range(1, mults[j - 1]):
            _ideal_dim(mults[: j - 1] + (k,), t)
        _ideal_dim(mults[:j], t)
    return _ideal_dim(mults, t)


def is_regular(scheme: Iterable[int], t: int) -> bool:
    """Whether the fat points impose independent conditions in degree t.

    Equivalent to 3t >= sum(m) - 1 and t >= m_1 + m_2 - 1 (m_2 = 0 for s = 1).
    """
    mults = canonicalize(scheme).mults
    if not mults:
        return True
    m2 = mults[1] if len(mults) > 1 else 0
    return 3 * t >= sum(mults) - 1 and t >= mults[0] + m2 - 1


def regularity_index(scheme: Iterable[int]) -> int:
    mults = canonicalize(scheme).mults
    if not mults:
        return 0
    m2 = mults[1] if len(mults) > 1 else 0
    return max(-(-(sum(mults) - 1) // 3), mults[0] + m2 - 1, 0)


def hilbert_function(scheme: Iterable[int], t: int) -> HilbertRecord:
    z = canonicalize(scheme)
    dim = ideal_dim(z, t)
    return HilbertRecord(
        t=t,
        ideal_dim=dim,
        hilbert_value=binomial(t + 3, 3) - dim,
        regular=is_regular(z, t),
        curve_mult=_curve_bound(z.mults, t) if z.mults else 0,
        line_mult_max=max_line_multiplicity(z, t),
    )


def symbolic_power_dim(n: int, t: int) -> int:
    """dim (I_C^n)_t for the ideal I_C of the twisted cubic."""
    if n < 0 or t < 0:
        raise InvalidInputError("n and t must be nonnegative")
    if n == 0:
        return binomial(t + 3, 3)
    if t <= 2 * n - 1:
        return 0
    squares = n * (n + 1) * (2 * n + 1) // 6
    return binomial(t + 3, 3) - binomial(n + 1, 2) * (3 * t + 6) + 5 * squares


def scheme_hilbert_bounds(scheme: Iterable[int], t: int) -> tuple[int, int]:
    """(lower, upper) bounds on dim I_t from counting conditions."""
    full = binomial(t + 3, 3)
    return max(0, full - scheme_degree(scheme, 3)), full
