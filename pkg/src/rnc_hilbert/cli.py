"""
Command-line interface for rnc-hilbert.

Usage:
    rnc-hilbert hilbert --mults 3,3,2,2,2,2,1 --t 4
    rnc-hilbert table --mults 1,1,1 --tmax 4 --format csv
    rnc-hilbert conic --alphas 2,2,2,2,2 --d 4
    rnc-hilbert power --n 2 --t 4 --verify
    rnc-hilbert probe --mults 2,2,2,2,2 --t 4 --trials 3
    rnc-hilbert verify --instances 200 --max-s 8 --max-m 4 --max-t 12 --seed 7

Multiplicities may be given in any order and may contain zeros; they are
sorted and zeros dropped.  Exit status is 0 on success, 1 on an
oracle mismatch and 2 on invalid input.
"""

from __future__ import annotations

import csv
import io
import json
import sys
from dataclasses import dataclass, field

import click

from . import campaign, oracle
from .conic_hf import reduce_conic_system, segre_regular
from .cubic_hf import HilbertRecord, hilbert_function, regularity_index, symbolic_power_dim
from .schemes import (
    DEFAULT_LIMITS,
    InvalidInputError,
    Limits,
    binomial,
    canonicalize,
    check_limits,
    scheme_degree,
)

__all__ = ["main", "RunConfig", "record_to_dict", "FIELDS"]

FIELDS = ("mults", "t", "ideal_dim", "hilbert", "regular", "curve_mult", "line_mult_max", "oracle")
EXIT_MISMATCH = 1
EXIT_INVALID = 2


@dataclass
class RunConfig:
    mults: list[int] = field(default_factory=list)
    t: int = 0
    tmax: int = 0
    prime: int = oracle.DEFAULT_PRIME
    seed: int = 0
    trials: int = 1
    format: str = "table"
    verify: bool = False
    limits: Limits = DEFAULT_LIMITS


def parse_mults(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    try:
        values = [int(x) for x in text.replace(" ", "").split(",") if x != ""]
    except ValueError:
        raise InvalidInputError(f"cannot parse multiplicities {text!r}") from None
    return values


def record_to_dict(mults, rec: HilbertRecord, oracle_info: dict | None) -> dict:
    return {
        "mults": list(mults),
        "t": rec.t,
        "ideal_dim": rec.ideal_dim,
        "hilbert": rec.hilbert_value,
        "regular": rec.regular,
        "curve_mult": rec.curve_mult,
        "line_mult_max": rec.line_mult_max,
        "oracle": oracle_info,
    }


def _csv_rows(rows: list[dict]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(FIELDS[:-1] + ("oracle_dim", "oracle_prime", "oracle_seed"))
    for r in rows:
        o = r["oracle"] or {}
        writer.writerow(
            [",".join(map(str, r["mults"]))]
            + [str(r[k]).lower() if isinstance(r[k], bool) else r[k] for k in FIELDS[1:-1]]
            + [o.get("dim", ""), o.get("prime", ""), o.get("seed", "")]
        )
    return buf.getvalue().rstrip("\n")


def _human_rows(rows: list[dict], mark_t: int | None = None) -> str:
    header = f"{'':2}{'t':>4} {'dim I_t':>9} {'H(R/I,t)':>9} {'regular':>8} {'n_C':>4} {'n_L':>4}"
    lines = [header]
    for r in rows:
        mark = "*" if r["t"] == mark_t else " "
        line = (
            f"{mark:2}{r['t']:>4} {r['ideal_dim']:>9} {r['hilbert']:>9} "
            f"{str(r['regular']).lower():>8} {r['curve_mult']:>4} {r['line_mult_max']:>4}"
        )
        if r["oracle"] is not None:
            verdict = "MATCH" if r["oracle"]["dim"] == r["ideal_dim"] else "MISMATCH"
            line += f"  oracle={r['oracle']['dim']} {verdict}"
        lines.append(line)
    return "\n".join(lines)


def _ingest(cfg: RunConfig, degree: int) -> tuple[int, ...]:
    mults = canonicalize(cfg.mults).mults
    check_limits(mults, degree, cfg.limits)
    if cfg.verify and binomial(degree + 3, 3) > cfg.limits.max_oracle_columns:
        raise InvalidInputError(
            f"oracle would need {binomial(degree + 3, 3)} columns "
            f"(cap {cfg.limits.max_oracle_columns})"
        )
    return mults


def _records(cfg: RunConfig, mults: tuple[int, ...], degrees) -> list[dict]:
    rows = []
    for t in degrees:
        rec = hilbert_function(mults, t)
        info = None
        if cfg.verify:
            dim = oracle.oracle_dim_cubic(mults, t, cfg.seed, cfg.prime)
            info = {"dim": dim, "prime": cfg.prime, "seed": cfg.seed}
        rows.append(record_to_dict(mults, rec, info))
    return rows


def _has_mismatch(rows: list[dict]) -> bool:
    return any(r["oracle"] is not None and r["oracle"]["dim"] != r["ideal_dim"] for r in rows)


def _emit(rows: list[dict], fmt: str, single: bool, mark_t: int | None = None) -> None:
    if fmt == "json":
        click.echo(json.dumps(rows[0] if single else rows))
    elif fmt == "csv":
        click.echo(_csv_rows(rows))
    else:
        click.echo(_human_rows(rows, mark_t))


def cmd_hilbert(cfg: RunConfig) -> int:
    mults = _ingest(cfg, cfg.t)
    rows = _records(cfg, mults, [cfg.t])
    _emit(rows, cfg.format, single=True)
    return EXIT_MISMATCH if _has_mismatch(rows) else 0


def cmd_table(cfg: RunConfig) -> int:
    mults = _ingest(cfg, cfg.tmax)
    rows = _records(cfg, mults, range(cfg.tmax + 1))
    index = regularity_index(mults)
    _emit(rows, cfg.format, single=False, mark_t=index)
    if cfg.format == "table":
        click.echo(f"regularity index: {index}  (degree {scheme_degree(mults, 3)})")
    return EXIT_MISMATCH if _has_mismatch(rows) else 0


def cmd_conic(cfg: RunConfig) -> int:
    alphas = canonicalize(cfg.mults).mults
    check_limits(alphas, cfg.t, cfg.limits)
    d = cfg.t
    dim, trace = reduce_conic_system(d, alphas)
    out = {
        "alphas": list(alphas),
        "d": d,
        "ideal_dim": dim,
        "hilbert": binomial(d + 2, 2) - dim,
        "segre_regular": segre_regular(d, alphas),
        "trace": trace.kinds(),
        "oracle": None,
    }
    if cfg.verify:
        out["oracle"] = {
            "dim": oracle.oracle_dim_conic(alphas, d, cfg.seed, cfg.prime),
            "prime": cfg.prime,
            "seed": cfg.seed,
        }
    mismatch = out["oracle"] is not None and out["oracle"]["dim"] != dim
    if cfg.format == "json":
        click.echo(json.dumps(out))
    else:
        click.echo(f"d={d} alphas={list(alphas)} dim={dim} hilbert={out['hilbert']}")
        click.echo("trace: " + (", ".join(out["trace"]) if trace.steps else "(none)"))
        if out["oracle"] is not None:
            click.echo(f"oracle={out['oracle']['dim']} {'MISMATCH' if mismatch else 'MATCH'}")
    return EXIT_MISMATCH if mismatch else 0


def cmd_power(cfg: RunConfig, n: int) -> int:
    if n < 0:
        raise InvalidInputError("n must be nonnegative")
    check_limits([], cfg.t, cfg.limits)
    dim = symbolic_power_dim(n, cfg.t)
    out = {"n": n, "t": cfg.t, "dim": dim, "oracle": None}
    if cfg.verify:
        out["oracle"] = {"dim": oracle.oracle_dim_power(n, cfg.t, cfg.prime), "prime": cfg.prime}
    mismatch = out["oracle"] is not None and out["oracle"]["dim"] != dim
    if cfg.format == "json":
        click.echo(json.dumps(out))
    else:
        line = f"dim (I_C^{n})_{cfg.t} = {dim}"
        if out["oracle"] is not None:
            line += f"  oracle={out['oracle']['dim']} {'MISMATCH' if mismatch else 'MATCH'}"
        click.echo(line)
    return EXIT_MISMATCH if mismatch else 0


def cmd_probe(cfg: RunConfig) -> int:
    mults = _ingest(cfg, cfg.t)
    res = oracle.generic_position_probe(mults, cfg.t, cfg.trials, cfg.seed, cfg.prime)
    out = {
        "mults": list(mults),
        "t": cfg.t,
        "rnc_dim": res.rnc_dim,
        "generic_dims": res.generic_dims,
        "violations": res.violations,
    }
    if cfg.format == "json":
        click.echo(json.dumps(out))
    else:
        click.echo(f"rational normal cubic: dim I_{cfg.t} = {res.rnc_dim}")
        click.echo(f"generic points:        {res.generic_dims}")
        if res.violations:
            click.echo(f"FINDING: generic dimension exceeds the cubic in trials {res.violations}")
        else:
            click.echo("consistent: every generic dimension <= cubic dimension")
    return 0


def cmd_verify(cfg: RunConfig, instances: int, max_s: int, max_m: int, max_t: int, jobs: int) -> int:
    check_limits([max_m] if max_m > 0 else [], max_t, cfg.limits)
    if instances < 0 or max_s < 0 or max_m < 1:
        raise InvalidInputError("instances, max-s must be >= 0 and max-m >= 1")
    insts = campaign.random_instances(instances, max_s, max_m, max_t, cfg.seed)
    report = campaign.run_campaign(insts, cfg.prime, jobs)
    if cfg.format == "json":
        click.echo(
            json.dumps(
                {
                    "instances": len(report.outcomes),
                    "matches": report.matches,
                    "prime": report.prime,
                    "seed": cfg.seed,
                    "mismatches": [
                        {
                            "index": o.instance.index,
                            "mults": list(o.instance.mults),
                            "t": o.instance.t,
                            "oracle_seed": o.instance.seed,
                            "ideal_dim": o.ideal_dim,
                            "oracle_dim": o.oracle_dim,
                        }
                        for o in report.mismatches
                    ],
                }
            )
        )
    else:
        for o in report.mismatches:
            i = o.instance
            click.echo(
                f"MISMATCH #{i.index}: mults={list(i.mults)} t={i.t} oracle_seed={i.seed} "
                f"prime={report.prime} ideal_dim={o.ideal_dim} oracle={o.oracle_dim}"
            )
        click.echo(f"{report.matches}/{len(report.outcomes)} MATCH")
    return EXIT_MISMATCH if report.mismatches else 0


def _run(fn, *args) -> None:
    try:
        code = fn(*args)
    except (InvalidInputError, oracle.ConfigurationError) as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_INVALID)
    sys.exit(code)


def _config(ctx: click.Context, **kw) -> RunConfig:
    try:
        prime = ctx.obj["prime"] or oracle.default_prime()
        oracle.validate_prime(prime)
        if "mults" in kw:
            kw["mults"] = parse_mults(kw["mults"])
    except (InvalidInputError, oracle.ConfigurationError) as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_INVALID)
    return RunConfig(prime=prime, seed=ctx.obj["seed"], format=ctx.obj["fmt"], **kw)


_FORMATS = click.Choice(["table", "json", "csv"])


@click.group()
@click.option("--prime", type=int, default=None, help="Oracle modulus (default $RNC_HILBERT_PRIME or 2^31-1).")
@click.option("--seed", type=int, default=0, show_default=True, help="Seed for every random draw.")
@click.option("--format", "fmt", type=_FORMATS, default="table", show_default=True)
@click.pass_context
def cli(ctx: click.Context, prime: int | None, seed: int, fmt: str) -> None:
    """Hilbert functions of fat points on the twisted cubic in P^3.

    Multiplicity lists are comma separated, in any order; zeros are ignored.
    """
    ctx.obj = {"prime": prime, "seed": seed, "fmt": fmt}


def _common(f):
    # subcommands accept the global options too, so either position works
    f = click.option("--format", "fmt", type=_FORMATS, default=None)(f)
    f = click.option("--seed", type=int, default=None)(f)
    f = click.option("--prime", type=int, default=None)(f)
    return f


def _merge(ctx: click.Context, prime, seed, fmt) -> None:
    if prime is not None:
        ctx.obj["prime"] = prime
    if seed is not None:
        ctx.obj["seed"] = seed
    if fmt is not None:
        ctx.obj["fmt"] = fmt


@cli.command()
@click.option("--mults", required=True, help="Comma-separated multiplicities, e.g. 3,3,2,1.")
@click.option("--t", "t", type=int, required=True, help="Degree.")
@click.option("--verify", is_flag=True, help="Also compute the interpolation-matrix oracle.")
@_common
@click.pass_context
def hilbert(ctx, mults, t, verify, prime, seed, fmt):
    """dim I_t and H(R/I, t) in a single degree."""
    _merge(ctx, prime, seed, fmt)
    _run(cmd_hilbert, _config(ctx, mults=mults, t=t, verify=verify))


@cli.command()
@click.option("--mults", required=True)
@click.option("--tmax", type=int, required=True)
@click.option("--verify", is_flag=True)
@_common
@click.pass_context
def table(ctx, mults, tmax, verify, prime, seed, fmt):
    """Hilbert function for t = 0..tmax; '*' marks the regularity index."""
    _merge(ctx, prime, seed, fmt)
    _run(cmd_table, _config(ctx, mults=mults, tmax=tmax, verify=verify))


@cli.command()
@click.option("--alphas", required=True, help="Multiplicities at points of a smooth conic.")
@click.option("--d", "d", type=int, required=True)
@click.option("--verify", is_flag=True)
@_common
@click.pass_context
def conic(ctx, alphas, d, verify, prime, seed, fmt):
    """Fat points on a plane conic, with the fixed-component trace."""
    _merge(ctx, prime, seed, fmt)
    _run(cmd_conic, _config(ctx, mults=alphas, t=d, verify=verify))


@cli.command()
@click.option("--n", "n", type=int, required=True)
@click.option("--t", "t", type=int, required=True)
@click.option("--verify", is_flag=True)
@_common
@click.pass_context
def power(ctx, n, t, verify, prime, seed, fmt):
    """dim (I_C^n)_t for the ideal of the twisted cubic."""
    _merge(ctx, prime, seed, fmt)
    _run(cmd_power, _config(ctx, t=t, verify=verify), n)


@cli.command()
@click.option("--mults", required=True)
@click.option("--t", "t", type=int, required=True)
@click.option("--trials", type=int, default=1, show_default=True)
@_common
@click.pass_context
def probe(ctx, mults, t, trials, prime, seed, fmt):
    """Compare the cubic with random points of P^3."""
    _merge(ctx, prime, seed, fmt)
    _run(cmd_probe, _config(ctx, mults=mults, t=t, trials=trials, verify=True))


@cli.command()
@click.option("--instances", type=int, default=200, show_default=True)
@click.option("--max-s", type=int, default=8, show_default=True)
@click.option("--max-m", type=int, default=4, show_default=True)
@click.option("--max-t", type=int, default=12, show_default=True)
@click.option("--jobs", type=int, default=1, show_default=True, help="Worker processes.")
@_common
@click.pass_context
def verify(ctx, instances, max_s, max_m, max_t, jobs, prime, seed, fmt):
    """Randomized campaign: combinatorial engine against the oracle."""
    _merge(ctx, prime, seed, fmt)
    _run(cmd_verify, _config(ctx), instances, max_s, max_m, max_t, jobs)


def main() -> None:
    cli()


if __name__ == "__main__":
    main()
