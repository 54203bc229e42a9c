"""Interpolation-matrix ground truth for every combinatorial formula.

A form F of degree t vanishes to order m at a point P iff all partial
derivatives of F of total order exactly m - 1 vanish at P (Euler's relation
recovers the lower orders when the characteristic exceeds t).  Stacking
those conditions over the points gives a matrix whose kernel is I_t, so
dim I_t = C(t + r, r) - rank.

Arithmetic is done modulo a prime p < 2**31.5 with numpy int64, so every
product of two reduced entries fits without overflow.  A modular rank can
only be smaller than the characteristic-zero rank; for random points and a
large p the two agree with overwhelming probability.  Passing ``prime=None``
switches to exact integer arithmetic (fraction-free elimination), used for
arbitration on small instances.
"""

from __future__ import annotations

import os
import random
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations_with_replacement
from typing import Iterable, Sequence

import numpy as np

from .cubic_hf import ideal_dim
from .schemes import InvalidInputError, binomial, canonicalize, canonicalize_conic

__all__ = [
    "ConfigurationError",
    "DEFAULT_PRIME",
    "ALT_PRIME",
    "InterpolationMatrix",
    "default_prime",
    "validate_prime",
    "monomial_exponents",
    "build_matrix",
    "build_matrix_cubic",
    "build_matrix_conic",
    "rank",
    "rank_mod_p",
    "rank_exact",
    "oracle_dim_cubic",
    "oracle_dim_conic",
    "oracle_dim_power",
    "oracle_dim_intersection_with_curve",
    "stable_oracle_dim_cubic",
    "ProbeResult",
    "generic_position_probe",
]

DEFAULT_PRIME = 2_147_483_647  # 2**31 - 1
ALT_PRIME = 1_000_000_007
_MAX_PRIME = 3_037_000_499  # floor(sqrt(2**63 - 1))
PRIME_ENV_VAR = "RNC_HILBERT_PRIME"


class ConfigurationError(ValueError):
    """The modulus cannot support the requested computation."""


@dataclass
class InterpolationMatrix:
    """Vanishing conditions (rows) against degree-t monomials (columns).

    ``prime`` is None for an exact integer matrix (dtype object).
    """

    entries: np.ndarray
    t: int
    ambient: int
    prime: int | None

    @property
    def rows(self) -> int:
        return self.entries.shape[0]

    @property
    def cols(self) -> int:
        return self.entries.shape[1]


def default_prime() -> int:
    """The modulus from $RNC_HILBERT_PRIME, falling back to 2**31 - 1."""
    raw = os.environ.get(PRIME_ENV_VAR)
    if not raw:
        return DEFAULT_PRIME
    try:
        p = int(raw)
    except ValueError:
        raise ConfigurationError(f"{PRIME_ENV_VAR}={raw!r} is not an integer") from None
    return validate_prime(p)


@lru_cache(maxsize=64)
def _is_prime(p: int) -> bool:
    from sympy import isprime

    return bool(isprime(p))


def validate_prime(p: int, bound: int = 0) -> int:
    """Check that p is a usable modulus exceeding ``bound``."""
    if not _is_prime(p):
        raise ConfigurationError(f"{p} is not prime")
    if p > _MAX_PRIME:
        raise ConfigurationError(f"{p} is too large for int64 products (max {_MAX_PRIME})")
    if p <= bound:
        raise ConfigurationError(f"prime {p} must exceed {bound}")
    return p


@lru_cache(maxsize=256)
def monomial_exponents(t: int, nvars: int) -> np.ndarray:
    """Exponent vectors of all degree-t monomials in ``nvars`` variables."""
    if t < 0:
        return np.zeros((0, nvars), dtype=np.int64)
    rows = []
    for combo in combinations_with_replacement(range(nvars), t):
        e = [0] * nvars
        for v in combo:
            e[v] += 1
        rows.append(e)
    out = np.array(rows, dtype=np.int64).reshape(-1, nvars)
    out.setflags(write=False)
    return out


def _falling_table(t: int, prime: int | None) -> np.ndarray:
    # ff[a, b] = a! / (a - b)!  (zero when b > a)
    dtype = object if prime is None else np.int64
    ff = np.zeros((t + 1, t + 1), dtype=dtype)
    for a in range(t + 1):
        acc = 1
        for b in range(a + 1):
            ff[a, b] = acc if prime is None else acc % prime
            acc *= a - b
    return ff


def _power_table(coords: Sequence[int], t: int, prime: int | None) -> np.ndarray:
    dtype = object if prime is None else np.int64
    pw = np.zeros((len(coords), t + 1), dtype=dtype)
    for k, c in enumerate(coords):
        acc = 1
        for e in range(t + 1):
            pw[k, e] = acc
            acc = acc * c if prime is None else acc * c % prime
    return pw


def build_matrix(
    points: Sequence[Sequence[int]],
    mults: Sequence[int],
    t: int,
    prime: int | None = DEFAULT_PRIME,
) -> InterpolationMatrix:
    """Interpolation matrix for fat points with explicit homogeneous coordinates.

    Each point of multiplicity m contributes C(m + r - 1, r) rows, one per
    partial derivative of order m - 1.  Multiplicities above t + 1 are
    lowered to t + 1: order-(m - 1) partials of a degree-t form vanish
    identically once m - 1 > t, while order t + 1 already forces F = 0.
    """
    if len(points) != len(mults):
        raise InvalidInputError("one multiplicity per point is required")
    nvars = len(points[0]) if points else 1
    ambient = nvars - 1
    if prime is not None:
        validate_prime(prime, bound=max([t, *mults], default=0))
    cols = monomial_exponents(t, nvars)
    dtype = object if prime is None else np.int64
    ff = _falling_table(t, prime)
    blocks = []
    for point, m in zip(points, mults):
        if m <= 0:
            continue
        if len(point) != nvars:
            raise InvalidInputError("points must share one ambient space")
        coords = [int(c) if prime is None else int(c) % prime for c in point]
        if all(c == 0 for c in coords):
            raise InvalidInputError("the zero vector is not a projective point")
        orders = monomial_exponents(min(m, t + 1) - 1, nvars)
        pw = _power_table(coords, t, prime)
        diff = cols[None, :, :] - orders[:, None, :]
        valid = (diff >= 0).all(axis=2)
        diff = np.where(diff >= 0, diff, 0)
        block = np.ones((len(orders), len(cols)), dtype=dtype)
        for k in range(nvars):
            coeff = ff[cols[None, :, k], orders[:, None, k]]
            factor = pw[k][diff[:, :, k]]
            if prime is None:
                block = block * coeff * factor
            else:
                block = block * coeff % prime * factor % prime
        block = np.where(valid, block, 0)
        blocks.append(block.astype(dtype))
    if blocks:
        entries = np.vstack(blocks)
    else:
        entries = np.zeros((0, len(cols)), dtype=dtype)
    return InterpolationMatrix(entries=entries, t=t, ambient=ambient, prime=prime)


def _curve_point(lam: int, degree: int, prime: int | None) -> tuple[int, ...]:
    if prime is None:
        return tuple(lam**k for k in range(degree + 1))
    return tuple(pow(lam, k, prime) for k in range(degree + 1))


def _check_lambdas(lambdas: Sequence[int], count: int, prime: int | None) -> None:
    if len(lambdas) != count:
        raise InvalidInputError(f"need {count} parameters, got {len(lambdas)}")
    reduced = [x % prime if prime else x for x in lambdas]
    if len(set(reduced)) != len(reduced):
        raise InvalidInputError("curve parameters must be distinct")


def build_matrix_cubic(scheme, t: int, lambdas: Sequence[int], prime: int | None = DEFAULT_PRIME):
    """Matrix for fat points at (1 : l : l^2 : l^3) on the twisted cubic."""
    mults = canonicalize(scheme).mults
    _check_lambdas(lambdas, len(mults), prime)
    points = [_curve_point(lam, 3, prime) for lam in lambdas]
    if not points:
        return InterpolationMatrix(
            np.zeros((0, binomial(t + 3, 3)), dtype=np.int64 if prime else object), t, 3, prime
        )
    return build_matrix(points, mults, t, prime)


def build_matrix_conic(alphas, d: int, lambdas: Sequence[int], prime: int | None = DEFAULT_PRIME):
    """Matrix for fat points at (1 : l : l^2) on a smooth plane conic."""
    a = canonicalize_conic(alphas).alphas
    _check_lambdas(lambdas, len(a), prime)
    points = [_curve_point(lam, 2, prime) for lam in lambdas]
    if not points:
        return InterpolationMatrix(
            np.zeros((0, binomial(d + 2, 2)), dtype=np.int64 if prime else object), d, 2, prime
        )
    return build_matrix(points, a, d, prime)


def rank_mod_p(entries: np.ndarray, prime: int) -> int:
    """Rank over GF(p) by Gaussian elimination on int64 arrays."""
    a = np.array(entries, dtype=np.int64) % prime
    if a.size == 0:
        return 0
    if a.shape[0] > a.shape[1]:
        a = a.T.copy()
    nrows, ncols = a.shape
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        inv = pow(int(a[r, c]), prime - 2, prime)
        a[r, c:] = a[r, c:] * inv % prime
        below = r + 1 + np.nonzero(a[r + 1 :, c])[0]
        if below.size:
            factors = a[below, c][:, None]
            a[np.ix_(below, np.arange(c, ncols))] = (
                a[below, c:] - factors * a[r, c:][None, :]
            ) % prime
        r += 1
    return r


def rank_exact(entries) -> int:
    """Rank over the rationals of an integer matrix (Bareiss elimination)."""
    m = [[int(x) for x in row] for row in np.asarray(entries, dtype=object)]
    if not m or not m[0]:
        return 0
    nrows, ncols = len(m), len(m[0])
    r = 0
    prev = 1
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        pr = m[r]
        for i in range(r + 1, nrows):
            row = m[i]
            f = row[c]
            for j in range(c + 1, ncols):
                row[j] = (pr[c] * row[j] - f * pr[j]) // prev
            row[c] = 0
        prev = pr[c]
        r += 1
        if r == nrows:
            break
    return r


def rank(matrix: InterpolationMatrix) -> int:
    """Exact rank of an interpolation matrix over its field."""
    if matrix.prime is None:
        return rank_exact(matrix.entries)
    return rank_mod_p(matrix.entries, matrix.prime)


def _distinct_params(rng: random.Random, count: int, prime: int | None, avoid=()) -> list[int]:
    # exact mode keeps numbers small; any distinct parameters are fine on the curve
    hi = prime - 1 if prime else max(8 * (count + len(avoid)), 16)
    seen = {x % prime if prime else x for x in avoid}
    out: list[int] = []
    while len(out) < count:
        lam = rng.randint(0 if prime else -hi, hi)
        key = lam % prime if prime else lam
        if key not in seen:
            seen.add(key)
            out.append(lam)
    return out


def _check_columns(ncols: int, max_columns: int) -> None:
    if ncols > max_columns:
        raise InvalidInputError(f"oracle matrix would have {ncols} columns (cap {max_columns})")


def oracle_dim_cubic(
    scheme,
    t: int,
    seed: int = 0,
    prime: int | None = DEFAULT_PRIME,
    max_columns: int = 100_000,
) -> int:
    """dim I_t measured at random distinct points of the twisted cubic."""
    mults = canonicalize(scheme).mults
    ncols = binomial(t + 3, 3)
    _check_columns(ncols, max_columns)
    lambdas = _distinct_params(random.Random(seed), len(mults), prime)
    return ncols - rank(build_matrix_cubic(mults, t, lambdas, prime))


def oracle_dim_conic(alphas, d: int, seed: int = 0, prime: int | None = DEFAULT_PRIME) -> int:
    """dim of degree-d plane forms through fat points on the conic y^2 = xz."""
    if d < 0:
        return 0
    a = canonicalize_conic(alphas).alphas
    lambdas = _distinct_params(random.Random(seed), len(a), prime)
    return binomial(d + 2, 2) - rank(build_matrix_conic(a, d, lambdas, prime))


def oracle_dim_intersection_with_curve(
    scheme, t: int, seed: int = 0, prime: int | None = DEFAULT_PRIME
) -> int:
    """dim of degree-t forms through the scheme that also vanish on the whole cubic.

    3t + 2 extra simple points of the curve are imposed; a surface of degree t
    meeting the cubic in more than 3t points contains it.
    """
    mults = canonicalize(scheme).mults
    rng = random.Random(seed)
    lambdas = _distinct_params(rng, len(mults), prime)
    extra = _distinct_params(rng, 3 * t + 2, prime, avoid=lambdas)
    points = [_curve_point(lam, 3, prime) for lam in lambdas + extra]
    m = build_matrix(points, list(mults) + [1] * len(extra), t, prime)
    return binomial(t + 3, 3) - rank(m)


def _twisted_cubic_quadrics() -> list[dict[tuple[int, ...], int]]:
    # 2x2 minors of [[x0, x1, x2], [x1, x2, x3]]
    return [
        {(1, 0, 1, 0): 1, (0, 2, 0, 0): -1},  # x0 x2 - x1^2
        {(1, 0, 0, 1): 1, (0, 1, 1, 0): -1},  # x0 x3 - x1 x2
        {(0, 1, 0, 1): 1, (0, 0, 2, 0): -1},  # x1 x3 - x2^2
    ]


def _poly_mul(f: dict, g: dict) -> dict:
    out: dict[tuple[int, ...], int] = {}
    for ef, cf in f.items():
        for eg, cg in g.items():
            e = tuple(a + b for a, b in zip(ef, eg))
            out[e] = out.get(e, 0) + cf * cg
    return {e: c for e, c in out.items() if c}


def oracle_dim_power(n: int, t: int, prime: int | None = DEFAULT_PRIME) -> int:
    """dim (I_C^n)_t as the span of q0^a q1^b q2^c * M, M a monomial of degree t - 2n."""
    if n < 0 or t < 0:
        raise InvalidInputError("n and t must be nonnegative")
    if t < 2 * n:
        return 0
    cols = monomial_exponents(t, 4)
    index = {tuple(int(x) for x in e): i for i, e in enumerate(cols)}
    quadrics = _twisted_cubic_quadrics()
    products = []
    for a in range(n + 1):
        for b in range(n - a + 1):
            f: dict = {(0, 0, 0, 0): 1}
            for q, k in zip(quadrics, (a, b, n - a - b)):
                for _ in range(k):
                    f = _poly_mul(f, q)
            products.append(f)
    rows = []
    for f in products:
        for e in monomial_exponents(t - 2 * n, 4):
            row = [0] * len(cols)
            for ef, c in f.items():
                row[index[tuple(int(x) + int(y) for x, y in zip(ef, e))]] = c
            rows.append(row)
    if prime is None:
        return rank_exact(np.array(rows, dtype=object))
    return rank_mod_p(np.array(rows, dtype=np.int64) % prime, prime)


def stable_oracle_dim_cubic(
    scheme,
    t: int,
    seeds: Iterable[int] = range(5),
    primes: Sequence[int] = (DEFAULT_PRIME, ALT_PRIME),
    retries: int = 3,
) -> dict[tuple[int, int], int]:
    """Oracle dimension for every (seed, prime) pair, retrying degenerate draws.

    A modular draw can only overestimate dim I_t, so when the values disagree
    the larger ones are re-drawn with fresh seeds before being reported.

    Returns:
        mapping (seed, prime) -> dimension, after retries.
    """
    results = {(s, p): oracle_dim_cubic(scheme, t, s, p) for s in seeds for p in primes}
    for attempt in range(1, retries + 1):
        low = min(results.values())
        bad = [k for k, v in results.items() if v != low]
        if not bad:
            break
        for s, p in bad:
            results[(s, p)] = oracle_dim_cubic(scheme, t, s + 1_000_003 * attempt, p)
    return results


@dataclass
class ProbeResult:
    """Comparison of dim I_t on the cubic against random points of P^3."""

    mults: tuple[int, ...]
    t: int
    rnc_dim: int
    generic_dims: list[int]

    @property
    def violations(self) -> list[int]:
        """Trial indices where the generic ideal is larger than on the cubic."""
        return [i for i, g in enumerate(self.generic_dims) if g > self.rnc_dim]

    @property
    def consistent(self) -> bool:
        return not self.violations


def generic_position_probe(
    scheme, t: int, trials: int = 1, seed: int = 0, prime: int = DEFAULT_PRIME
) -> ProbeResult:
    """Measure dim I_t at random points of P^3 and compare with the cubic.

    A generic ideal dimension above the cubic one would contradict the
    expectation that points on the rational normal curve are the worst case.
    """
    if trials < 1:
        raise InvalidInputError("trials must be at least 1")
    mults = canonicalize(scheme).mults
    rnc = ideal_dim(mults, t)
    rng = random.Random(seed)
    dims = []
    for _ in range(trials):
        pts: list[tuple[int, ...]] = []
        while len(pts) < len(mults):
            v = tuple(rng.randrange(prime) for _ in range(4))
            if any(v) and not any(_proportional(v, w, prime) for w in pts):
                pts.append(v)
        m = build_matrix(pts, mults, t, prime) if pts else None
        r = rank(m) if m is not None else 0
        dims.append(binomial(t + 3, 3) - r)
    return ProbeResult(mults=mults, t=t, rnc_dim=rnc, generic_dims=dims)


def _proportional(u: Sequence[int], v: Sequence[int], prime: int) -> bool:
    return all((a * d - b * c) % prime == 0 for (a, b), (c, d) in _pairs(u, v))


def _pairs(u, v):
    n = len(u)
    for i in range(n):
        for j in range(i + 1, n):
            yield (u[i], v[i]), (u[j], v[j])
