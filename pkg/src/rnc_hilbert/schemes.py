"""Canonical multiplicity vectors and the counting helpers shared by every module.

A fat point scheme on the twisted cubic is determined, for Hilbert function
purposes, by the multiset of its multiplicities alone.  Both scheme types keep
that multiset as a tuple sorted non-increasingly with zeros removed.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterable, Union

__all__ = [
    "InvalidInputError",
    "Limits",
    "DEFAULT_LIMITS",
    "FatPointScheme",
    "ConicScheme",
    "canonicalize",
    "canonicalize_conic",
    "binomial",
    "scheme_degree",
    "check_limits",
]


class InvalidInputError(ValueError):
    """Raised for malformed multiplicities, degrees or parameters."""


@dataclass(frozen=True)
class Limits:
    """Input caps keeping every intermediate count small and exact."""

    max_mult: int = 60
    max_degree: int = 200
    max_points: int = 10_000
    max_oracle_columns: int = 100_000


DEFAULT_LIMITS = Limits()


def _canonical_tuple(raw: Iterable[int]) -> tuple[int, ...]:
    values = []
    for v in raw:
        if isinstance(v, bool) or int(v) != v:
            raise InvalidInputError(f"multiplicity {v!r} is not an integer")
        v = int(v)
        if v < 0:
            raise InvalidInputError(f"negative multiplicity {v}")
        if v:
            values.append(v)
    return tuple(sorted(values, reverse=True))


@dataclass(frozen=True)
class FatPointScheme:
    """Multiplicities m_1 >= ... >= m_s >= 1 of distinct points on the twisted cubic."""

    mults: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if _canonical_tuple(self.mults) != tuple(self.mults):
            raise InvalidInputError(
                f"{self.mults!r} is not canonical; build it with canonicalize()"
            )
        object.__setattr__(self, "mults", tuple(self.mults))

    @property
    def s(self) -> int:
        return len(self.mults)

    def __len__(self) -> int:
        return len(self.mults)

    def __iter__(self):
        return iter(self.mults)

    def __getitem__(self, i):
        return self.mults[i]


@dataclass(frozen=True)
class ConicScheme:
    """Multiplicities at distinct points of a smooth plane conic, canonical order."""

    alphas: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if _canonical_tuple(self.alphas) != tuple(self.alphas):
            raise InvalidInputError(
                f"{self.alphas!r} is not canonical; build it with canonicalize_conic()"
            )
        object.__setattr__(self, "alphas", tuple(self.alphas))

    @property
    def s(self) -> int:
        return len(self.alphas)

    def __len__(self) -> int:
        return len(self.alphas)

    def __iter__(self):
        return iter(self.alphas)

    def __getitem__(self, i):
        return self.alphas[i]


SchemeLike = Union[FatPointScheme, ConicScheme, Iterable[int]]


def canonicalize(raw: Iterable[int]) -> FatPointScheme:
    """Sort multiplicities non-increasingly and drop zeros.

    >>> canonicalize([1, 3, 0, 2]).mults
    (3, 2, 1)
    """
    if isinstance(raw, FatPointScheme):
        return raw
    return FatPointScheme(_canonical_tuple(raw))


def canonicalize_conic(raw: Iterable[int]) -> ConicScheme:
    """Same as :func:`canonicalize`, producing a :class:`ConicScheme`."""
    if isinstance(raw, ConicScheme):
        return raw
    return ConicScheme(_canonical_tuple(raw))


def binomial(n: int, k: int) -> int:
    """C(n, k), taken to be zero whenever k < 0 or n < k."""
    if k < 0 or n < k:
        return 0
    return comb(n, k)


def scheme_degree(scheme: SchemeLike, ambient: int = 3) -> int:
    """Number of conditions the fat points impose when they are independent.

    A point of multiplicity m in P^r imposes C(m + r - 1, r) conditions.
    """
    if ambient not in (2, 3):
        raise InvalidInputError(f"ambient dimension must be 2 or 3, got {ambient}")
    return sum(binomial(m + ambient - 1, ambient) for m in _canonical_tuple(scheme))


def check_limits(
    scheme: SchemeLike, t: int | None = None, limits: Limits = DEFAULT_LIMITS
) -> None:
    """Raise InvalidInputError if the input exceeds the configured caps."""
    mults = _canonical_tuple(scheme)
    if len(mults) > limits.max_points:
        raise InvalidInputError(f"{len(mults)} points exceeds cap {limits.max_points}")
    if mults and mults[0] > limits.max_mult:
        raise InvalidInputError(f"multiplicity {mults[0]} exceeds cap {limits.max_mult}")
    if t is not None:
        if t < 0:
            raise InvalidInputError(f"negative degree {t}")
        if t > limits.max_degree:
            raise InvalidInputError(f"degree {t} exceeds cap {limits.max_degree}")
