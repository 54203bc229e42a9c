"""Randomized algorithm-versus-oracle comparisons."""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .cubic_hf import ideal_dim
from .oracle import DEFAULT_PRIME, oracle_dim_cubic
from .schemes import canonicalize


@dataclass(frozen=True)
class Instance:
    index: int
    mults: tuple[int, ...]
    t: int
    seed: int


@dataclass(frozen=True)
class Outcome:
    instance: Instance
    ideal_dim: int
    oracle_dim: int

    @property
    def match(self) -> bool:
        return self.ideal_dim == self.oracle_dim


@dataclass
class CampaignReport:
    prime: int
    outcomes: list[Outcome] = field(default_factory=list)

    @property
    def matches(self) -> int:
        return sum(o.match for o in self.outcomes)

    @property
    def mismatches(self) -> list[Outcome]:
        return [o for o in self.outcomes if not o.match]


def random_instances(
    count: int, max_s: int, max_m: int, max_t: int, seed: int = 0
) -> list[Instance]:
    """Reproducible canonical schemes with s <= max_s, m_i <= max_m, t <= max_t."""
    rng = random.Random(seed)
    out = []
    for i in range(count):
        s = rng.randint(0, max_s)
        mults = canonicalize([rng.randint(1, max_m) for _ in range(s)]).mults
        t = rng.randint(0, max_t)
        out.append(Instance(i, mults, t, rng.getrandbits(63)))
    return out


def _check(args: tuple[Instance, int]) -> Outcome:
    inst, prime = args
    return Outcome(inst, ideal_dim(inst.mults, inst.t), oracle_dim_cubic(inst.mults, inst.t, inst.seed, prime))


def run_campaign(
    instances: list[Instance], prime: int = DEFAULT_PRIME, jobs: int = 1
) -> CampaignReport:
    """Compare the engine with the oracle on every instance, in input order."""
    work = [(inst, prime) for inst in instances]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            outcomes = list(pool.map(_check, work, chunksize=8))
    else:
        outcomes = [_check(w) for w in work]
    return CampaignReport(prime=prime, outcomes=outcomes)
