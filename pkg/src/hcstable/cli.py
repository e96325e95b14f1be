#!/usr/bin/env python3
import logging
import random
from contextlib import contextmanager
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Dict, List, Optional

import click
import typer
from dotenv import load_dotenv
from rich.console import Console
from rich.logging import RichHandler

from hcstable.annihilators import (
    AlgebraType,
    AnnihilatorError,
    Factor,
    ModuleSpace,
    degree_bound,
    nilradical_check,
    odd_variable_count,
    osp_statement_bound,
    super_power,
    super_symbol,
    verify_elementary,
    verify_minor,
)
from hcstable.central import (
    AffineExponent,
    CentralCharError,
    char_of_bipartition_gl,
    char_of_triple_gl,
    char_osp,
    char_pair_of_hom,
    char_pair_of_hom_osp,
    ck_value,
    evaluate_ck,
    finite_ck_value,
    hc_compatibility,
    transpose_identity_check,
)
from hcstable.lr import LRError, lr_coefficient, skew_schur_expand
from hcstable.oracle import LieType, OracleError, finite_hom_oracle, tensor_decompose
from hcstable.partitions import PartitionError, SkewShape, random_partition
from hcstable.slz import (
    ModuleSpec,
    SlzError,
    SparseVector,
    apply_e,
    apply_f,
    base_index,
    bracket_check,
    coset_table,
    cosets_commute,
    cz_basis,
    fock_basis,
    grothendieck_e,
    grothendieck_f,
    intertwines,
    parse_module_spec,
    random_tuple,
    wedge_basis,
)
from hcstable.stable import (
    HomFamily,
    StableError,
    finite_hom_multiplicity_gl,
    king_multiplicity,
    king_stable_range,
    mixed_stable_multiplicity,
    stable_hom_multiplicity_gl,
    stable_hom_multiplicity_osp,
    verify_stability,
)
from hcstable.utils import (
    FORMATS,
    FormatError,
    Result,
    parse_bipartition,
    parse_family,
    parse_int_list,
    parse_module_index,
    parse_partition,
    parse_scalar_values,
    parse_slz_family,
    parse_triple,
    parse_tuple_index,
    render,
    vector_records,
    write_atomic,
)

load_dotenv()

app = typer.Typer(help="Stable multiplicities, central characters and annihilators of Harish-Chandra bimodules")
console = Console()
err_console = Console(stderr=True)

LIBRARY_ERRORS = (
    PartitionError,
    LRError,
    StableError,
    CentralCharError,
    AnnihilatorError,
    OracleError,
    SlzError,
)


@dataclass
class CommandConfig:
    """Global options plus the arguments of the running subcommand."""

    fmt: str = "json"
    out: Optional[Path] = None
    seed: int = 0
    workers: int = 1
    command: str = ""
    arguments: Dict[str, object] = field(default_factory=dict)


@app.callback()
def main(
    ctx: typer.Context,
    fmt: str = typer.Option("json", "--format", "-f", envvar="HCSTABLE_FORMAT", help="Output format: json, csv or text"),
    out: Optional[Path] = typer.Option(None, "--out", "-o", envvar="HCSTABLE_OUT", help="Write the result to this file"),
    seed: int = typer.Option(0, "--seed", envvar="HCSTABLE_SEED", help="Seed for randomized suites"),
    workers: int = typer.Option(1, "--workers", envvar="HCSTABLE_WORKERS", help="Worker processes for rank windows"),
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Log library diagnostics to stderr"),
):
    """
    Exact computations around Harish-Chandra bimodules of gl_t, o_t and sp_t.
    """
    if fmt not in FORMATS:
        raise typer.BadParameter(f"{fmt!r} is not one of {', '.join(FORMATS)}", param_hint="--format")
    if workers < 1:
        raise typer.BadParameter(f"{workers} must be at least 1", param_hint="--workers")
    if seed < 0:
        raise typer.BadParameter(f"{seed} must be nonnegative", param_hint="--seed")
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format="%(message)s",
        handlers=[RichHandler(console=err_console, show_time=False)],
        force=True,
    )
    ctx.obj = CommandConfig(fmt=fmt, out=out, seed=seed, workers=workers)


def _parse(fn: Callable, value: str, hint: str):
    try:
        return fn(value)
    except FormatError as e:
        raise typer.BadParameter(str(e), param_hint=hint)


@contextmanager
def _guard():
    """Map library errors to exit 2 and anything unexpected to exit 1."""
    try:
        yield
    except (typer.Exit, click.ClickException):
        raise
    except LIBRARY_ERRORS as e:
        err_console.print(f"[red]Error:[/red] {e}")
        raise typer.Exit(2)
    except Exception as e:
        err_console.print(f"[red]Internal error:[/red] {type(e).__name__}: {e}")
        raise typer.Exit(1)


def _emit(ctx: typer.Context, result: Result) -> None:
    config: CommandConfig = ctx.obj
    config.command = ctx.info_name or ""
    config.arguments = dict(ctx.params)
    text = render(result, config.fmt)
    if config.out:
        write_atomic(config.out, text)
        err_console.print(f"[green]Wrote[/green] {config.out}")
    else:
        # plain write keeps the bytes identical between runs
        console.file.write(text)


def _family(k: int, l: int, a: str, b: str, gamma: str, delta: str) -> HomFamily:
    text = f"k={k},l={l},a={a},b={b},gamma={gamma},delta={delta}"
    return _parse(parse_family, text, "--k/--l/--a/--b/--gamma/--delta")


def _window(n_min: int, n_max: int) -> List[int]:
    if n_min < 1 or n_max < n_min:
        raise typer.BadParameter(f"{n_min}..{n_max} is not a rank window", param_hint="--n-min/--n-max")
    return list(range(n_min, n_max + 1))


def _series(series: str, flavor: str) -> None:
    if series not in ("gl", "osp"):
        raise typer.BadParameter(f"{series!r} is not gl or osp", param_hint="--series")
    if flavor not in ("o", "sp"):
        raise typer.BadParameter(f"{flavor!r} is not o or sp", param_hint="--flavor")


@app.command()
def lr(
    ctx: typer.Context,
    lam: str = typer.Option(..., "--lambda", help="Outer partition, e.g. 2,2"),
    mu: str = typer.Option(..., "--mu", help="First factor"),
    nu: str = typer.Option(..., "--nu", help="Second factor"),
):
    """
    Littlewood-Richardson coefficient c^λ_{μν}.
    """
    lam_p = _parse(parse_partition, lam, "--lambda")
    mu_p = _parse(parse_partition, mu, "--mu")
    nu_p = _parse(parse_partition, nu, "--nu")
    with _guard():
        value = lr_coefficient(lam_p, mu_p, nu_p)
    _emit(ctx, Result({"lambda": str(lam_p), "mu": str(mu_p), "nu": str(nu_p), "value": value}))


@app.command()
def skew(
    ctx: typer.Context,
    outer: str = typer.Option(..., "--outer", help="Outer partition"),
    inner: str = typer.Option("", "--inner", help="Inner partition"),
):
    """
    Schur expansion of the skew Schur function s_{outer/inner}.
    """
    outer_p = _parse(parse_partition, outer, "--outer")
    inner_p = _parse(parse_partition, inner, "--inner")
    with _guard():
        expansion = skew_schur_expand(SkewShape(outer_p, inner_p))
    rows = [{"nu": str(p), "coefficient": c} for p, c in expansion.items()]
    payload = {"shape": f"{outer_p}/{inner_p}", "expansion": {str(p): c for p, c in expansion.items()}}
    _emit(ctx, Result(payload, rows, title=f"s_{outer_p}/{inner_p}"))


@app.command("hom-mult")
def hom_mult(
    ctx: typer.Context,
    lam: str = typer.Option(..., "--lambda", help="Partition λ"),
    mu: str = typer.Option(..., "--mu", help="Partition μ"),
    nu: str = typer.Option(..., "--nu", help="Bipartition ν, e.g. 1|1"),
    n: int = typer.Option(..., "--n", help="Rank of gl_n"),
    check: bool = typer.Option(False, "--check", help="Also run the Brauer-Klimyk oracle"),
):
    """
    Multiplicity of V_ν in Hom(V_μ, V_λ) over gl_n by the skew-pairing formula.
    """
    lam_p = _parse(parse_partition, lam, "--lambda")
    mu_p = _parse(parse_partition, mu, "--mu")
    nu_b = _parse(parse_bipartition, nu, "--nu")
    with _guard():
        value = finite_hom_multiplicity_gl(lam_p, mu_p, nu_b, n)
        oracle = finite_hom_oracle(lam_p, mu_p, nu_b, n) if check else None
    payload = {"lambda": str(lam_p), "mu": str(mu_p), "nu": str(nu_b), "n": n, "value": value}
    if check:
        payload.update(oracle=oracle, agrees=(oracle == value))
    _emit(ctx, Result(payload))


_K = typer.Option(0, "--k", help="Number of growing rows")
_L = typer.Option(0, "--l", help="Number of growing columns")
_A = typer.Option("", "--a", help="Row shifts a, comma separated")
_B = typer.Option("", "--b", help="Column shifts b, comma separated")
_GAMMA = typer.Option("", "--gamma", help="Partition γ")
_DELTA = typer.Option("", "--delta", help="Partition δ")


@app.command("stable-hom")
def stable_hom(
    ctx: typer.Context,
    k: int = _K,
    l: int = _L,
    a: str = _A,
    b: str = _B,
    gamma: str = _GAMMA,
    delta: str = _DELTA,
    nu: str = typer.Option(..., "--nu", help="Bipartition ν"),
):
    """
    Stable multiplicity of V_ν in Hom(μ, λ) for a gl family.
    """
    fam = _family(k, l, a, b, gamma, delta)
    nu_b = _parse(parse_bipartition, nu, "--nu")
    with _guard():
        value = stable_hom_multiplicity_gl(fam, nu_b)
    _emit(ctx, Result({"family": str(fam), "nu": str(nu_b), "value": value}))


@app.command("stable-hom-osp")
def stable_hom_osp(
    ctx: typer.Context,
    k: int = _K,
    l: int = _L,
    a: str = _A,
    b: str = _B,
    gamma: str = _GAMMA,
    delta: str = _DELTA,
    nu: str = typer.Option(..., "--nu", help="Partition ν"),
):
    """
    Stable multiplicity of V_ν in V_λ ⊗ V_μ for an o/sp family.
    """
    fam = _family(k, l, a, b, gamma, delta)
    nu_p = _parse(parse_partition, nu, "--nu")
    with _guard():
        value = stable_hom_multiplicity_osp(fam, nu_p)
    _emit(ctx, Result({"family": str(fam), "nu": str(nu_p), "value": value}))


@app.command()
def king(
    ctx: typer.Context,
    lam: str = typer.Option(..., "--lambda", help="Partition λ"),
    mu: str = typer.Option(..., "--mu", help="Partition μ"),
    nu: str = typer.Option(..., "--nu", help="Partition ν"),
):
    """
    Stable O/Sp tensor multiplicity Σ_η c^λ_{..} c^μ_{..} c^ν_{..}.
    """
    lam_p = _parse(parse_partition, lam, "--lambda")
    mu_p = _parse(parse_partition, mu, "--mu")
    nu_p = _parse(parse_partition, nu, "--nu")
    with _guard():
        value = king_multiplicity(lam_p, mu_p, nu_p)
        stable_from = king_stable_range(lam_p, mu_p)
    _emit(
        ctx,
        Result({"lambda": str(lam_p), "mu": str(mu_p), "nu": str(nu_p), "value": value, "stable_from_rank": stable_from}),
    )


def _report_result(report) -> Result:
    rows = [
        {
            "n": row.n,
            "lambda_n": str(row.lambda_n),
            "mu_n": str(row.mu_n),
            "multiplicity": row.multiplicity,
            "exists": row.exists,
        }
        for row in report.rows
    ]
    payload = {
        "family": report.family,
        "nu": report.nu,
        "group": report.group,
        "rows": rows,
        "stable_value": report.stable_value,
        "stabilized": report.stabilized,
        "matches": report.matches,
    }
    return Result(payload, rows, title=f"{report.family} at {report.nu}")


@app.command("verify-stability")
def verify_stability_cmd(
    ctx: typer.Context,
    k: int = _K,
    l: int = _L,
    a: str = _A,
    b: str = _B,
    gamma: str = _GAMMA,
    delta: str = _DELTA,
    nu: str = typer.Option(..., "--nu", help="Bipartition for gl, partition for o/sp"),
    group: str = typer.Option("gl", "--group", "-g", help="gl, o or sp"),
    n_min: int = typer.Option(4, "--n-min", help="Smallest rank"),
    n_max: int = typer.Option(6, "--n-max", help="Largest rank"),
    gap: int = typer.Option(1, "--gap", help="Growth factor of the row gaps"),
):
    """
    Oracle multiplicities across a window of ranks against the stable value.
    """
    fam = _family(k, l, a, b, gamma, delta)
    if group not in ("gl", "o", "sp"):
        raise typer.BadParameter(f"{group!r} is not gl, o or sp", param_hint="--group")
    target = _parse(parse_bipartition if group == "gl" else parse_partition, nu, "--nu")
    ranks = _window(n_min, n_max)
    err_console.print(f"[yellow]Checking {fam} at ranks {n_min}..{n_max}...[/yellow]")
    with _guard():
        report = verify_stability(fam, target, group, ranks, workers=ctx.obj.workers, gap=gap)
    _emit(ctx, _report_result(report))


@app.command("mixed-stability")
def mixed_stability(
    ctx: typer.Context,
    plus: str = typer.Option(..., "--plus", help="Family of the positive halves, e.g. k=1,a=0"),
    minus: str = typer.Option(..., "--minus", help="Family of the negative halves"),
    nu: str = typer.Option(..., "--nu", help="Bipartition ν"),
    n_min: int = typer.Option(4, "--n-min", help="Smallest rank"),
    n_max: int = typer.Option(6, "--n-max", help="Largest rank"),
    gap: int = typer.Option(1, "--gap", help="Growth factor of the row gaps"),
):
    """
    Oracle multiplicities for bipartition families on both sides of the weight.
    """
    plus_fam = _parse(parse_family, plus, "--plus")
    minus_fam = _parse(parse_family, minus, "--minus")
    nu_b = _parse(parse_bipartition, nu, "--nu")
    ranks = _window(n_min, n_max)
    with _guard():
        report = mixed_stable_multiplicity(plus_fam, minus_fam, nu_b, ranks, workers=ctx.obj.workers, gap=gap)
    _emit(ctx, _report_result(report))


def _character_result(chi, **extra) -> Result:
    rows = [{"exponent": str(e), "coefficient": str(c)} for e, c in chi.numerator.items()]
    payload = {
        "series": chi.series,
        "flavor": chi.flavor,
        "numerator": chi.numerator.to_records(),
        "text": str(chi.numerator),
        **extra,
    }
    return Result(payload, rows, title="numerator")


def _character(series: str, flavor: str, nu: Optional[str], triple: Optional[str]):
    _series(series, flavor)
    if (nu is None) == (triple is None):
        raise typer.BadParameter("give exactly one of --nu and --triple", param_hint="--nu/--triple")
    if triple is not None:
        cut = _parse(parse_triple, triple, "--triple")
        if series == "gl":
            return char_of_triple_gl(cut)
        return char_osp(cut, flavor)
    if series == "gl":
        return char_of_bipartition_gl(_parse(parse_bipartition, nu, "--nu"))
    return char_osp(_parse(parse_partition, nu, "--nu"), flavor)


@app.command("central-char")
def central_char(
    ctx: typer.Context,
    series: str = typer.Option("gl", "--series", help="gl or osp"),
    flavor: str = typer.Option("o", "--flavor", help="o or sp, for osp"),
    nu: Optional[str] = typer.Option(None, "--nu", help="Bipartition (gl) or partition (osp)"),
    triple: Optional[str] = typer.Option(None, "--triple", help="Formal cut, e.g. k=1,l=1,gamma="),
):
    """
    Exponential central character numerator of V_ν or of a formal triple.
    """
    with _guard():
        chi = _character(series, flavor, nu, triple)
    _emit(ctx, _character_result(chi))


@app.command()
def ck(
    ctx: typer.Context,
    k: int = typer.Option(..., "--k", help="Index of the central generator C_k"),
    series: str = typer.Option("gl", "--series", help="gl or osp"),
    flavor: str = typer.Option("o", "--flavor", help="o or sp, for osp"),
    nu: Optional[str] = typer.Option(None, "--nu", help="Bipartition (gl) or partition (osp)"),
    triple: Optional[str] = typer.Option(None, "--triple", help="Formal cut"),
    values: str = typer.Option("", "--values", help="Generator values, e.g. t=5;a1=9"),
    hw: Optional[str] = typer.Option(None, "--hw", help="Finite highest weight instead of a character"),
    n: int = typer.Option(0, "--n", help="Rank for --hw"),
    group: str = typer.Option("gl", "--group", "-g", help="gl, o or sp for --hw"),
):
    """
    Value of C_k on a central character, formally or at given generator values.
    """
    with _guard():
        if hw is not None:
            weight = _parse(parse_int_list, hw, "--hw")
            value = finite_ck_value(weight, n or len(weight), k, group)
            _emit(ctx, Result({"hw": list(weight), "n": n or len(weight), "group": group, "k": k, "value": str(value)}))
            return
        chi = _character(series, flavor, nu, triple)
        assignment = _parse(parse_scalar_values, values, "--values")
        if assignment:
            value = str(evaluate_ck(chi, k, assignment))
        else:
            value = str(ck_value(chi, k))
    _emit(ctx, Result({"series": series, "k": k, "values": {n_: str(v) for n_, v in assignment.items()}, "value": value}))


def _pair(series: str, flavor: str, fam: HomFamily):
    _series(series, flavor)
    if series == "gl":
        return char_pair_of_hom(fam)
    return char_pair_of_hom_osp(fam, flavor)


@app.command("char-pair")
def char_pair(
    ctx: typer.Context,
    k: int = _K,
    l: int = _L,
    a: str = _A,
    b: str = _B,
    gamma: str = _GAMMA,
    delta: str = _DELTA,
    series: str = typer.Option("gl", "--series", help="gl or osp"),
    flavor: str = typer.Option("o", "--flavor", help="o or sp, for osp"),
):
    """
    The central characters acting on both sides of Hom(μ, λ).
    """
    fam = _family(k, l, a, b, gamma, delta)
    with _guard():
        chi, psi = _pair(series, flavor, fam)
    rows = [{"side": "chi", "exponent": str(e), "coefficient": str(c)} for e, c in chi.numerator.items()]
    rows += [{"side": "psi", "exponent": str(e), "coefficient": str(c)} for e, c in psi.numerator.items()]
    payload = {
        "family": str(fam),
        "series": series,
        "chi": chi.numerator.to_records(),
        "psi": psi.numerator.to_records(),
    }
    _emit(ctx, Result(payload, rows, title=str(fam)))


@app.command("hc-compat")
def hc_compat(
    ctx: typer.Context,
    k: int = _K,
    l: int = _L,
    a: str = _A,
    b: str = _B,
    gamma: str = _GAMMA,
    delta: str = _DELTA,
    series: str = typer.Option("gl", "--series", help="gl or osp"),
    flavor: str = typer.Option("o", "--flavor", help="o or sp, for osp"),
    left: Optional[str] = typer.Option(None, "--left", help="Compare V_left against V_right instead of a family"),
    right: Optional[str] = typer.Option(None, "--right", help="Second weight for --left"),
):
    """
    Whether HC_{χ,ψ} can be nonzero, with the exponents when it can.
    """
    with _guard():
        if left is not None or right is not None:
            if left is None or right is None:
                raise typer.BadParameter("--left and --right go together", param_hint="--left/--right")
            chi = _character(series, flavor, left, None)
            psi = _character(series, flavor, right, None)
            label = f"{left} vs {right}"
        else:
            fam = _family(k, l, a, b, gamma, delta)
            chi, psi = _pair(series, flavor, fam)
            label = str(fam)
        outcome = hc_compatibility(chi, psi)
    payload = dict(outcome.to_dict(), subject=label)
    _emit(ctx, Result(payload, title=label))


@app.command("transpose-check")
def transpose_check(
    ctx: typer.Context,
    lam: Optional[str] = typer.Option(None, "--lambda", help="Partition to check"),
    count: int = typer.Option(100, "--count", help="Random partitions to check without --lambda"),
    max_size: int = typer.Option(20, "--max-size", help="Largest random partition size"),
):
    """
    Row and column forms of Σ [λ_j]_q q^{-j} agree.
    """
    if lam is not None:
        partitions = [_parse(parse_partition, lam, "--lambda")]
    else:
        rng = random.Random(ctx.obj.seed)
        partitions = [random_partition(rng, max_size) for _ in range(count)]
    with _guard():
        rows = [{"lambda": str(p), "holds": transpose_identity_check(p)} for p in partitions]
    payload = {"checked": len(rows), "all_hold": all(r["holds"] for r in rows), "rows": rows}
    _emit(ctx, Result(payload, rows, title="transpose identity"))


@app.command("tensor-decompose")
def tensor_decompose_cmd(
    ctx: typer.Context,
    group: str = typer.Option(..., "--group", "-g", help="gl_N, so_N or sp_N"),
    hw1: str = typer.Option(..., "--hw1", help="First highest weight"),
    hw2: str = typer.Option(..., "--hw2", help="Second highest weight"),
):
    """
    Brauer-Klimyk decomposition of L(hw1) ⊗ L(hw2).
    """
    first = _parse(parse_int_list, hw1, "--hw1")
    second = _parse(parse_int_list, hw2, "--hw2")
    with _guard():
        lie = LieType.parse(group)
        decomposition = tensor_decompose(lie, first, second)
    rows = [{"weight": ",".join(str(x) for x in w), "multiplicity": m} for w, m in sorted(decomposition.items(), reverse=True)]
    payload = {"group": str(lie), "hw1": list(first), "hw2": list(second), "components": rows}
    _emit(ctx, Result(payload, rows, title=str(lie)))


@app.command("annihilator-verify")
def annihilator_verify(
    ctx: typer.Context,
    lemma: str = typer.Option("elementary", "--lemma", help="elementary or minor"),
    n: int = typer.Option(2, "--n", help="Rank for the elementary check"),
    m: int = typer.Option(3, "--m", help="Symmetric degree for the elementary check"),
    variant: str = typer.Option("symV", "--variant", help="symV or symVdual"),
    algebra: str = typer.Option("gl_6", "--algebra", help="gl_N, o_N or sp_N for minors"),
    rows: str = typer.Option("1,2,3", "--rows", help="Row set I"),
    cols: str = typer.Option("4,5,6", "--cols", help="Column set J"),
    space: str = typer.Option("S2V,S1V*", "--space", help="Tensor factors, e.g. S2V,S1V*"),
):
    """
    Check that an annihilator element kills every basis vector of a module.
    """
    with _guard():
        if lemma == "elementary":
            report = verify_elementary(n, m, variant)
        elif lemma == "minor":
            factors = tuple(Factor.parse(tok) for tok in space.split(",") if tok.strip())
            module = ModuleSpace(AlgebraType.parse(algebra), factors)
            report = verify_minor(
                _parse(parse_int_list, rows, "--rows"), _parse(parse_int_list, cols, "--cols"), module
            )
        else:
            raise typer.BadParameter(f"{lemma!r} is not elementary or minor", param_hint="--lemma")
    err_console.print(f"[blue]elapsed[/blue] {report.elapsed:.3f}s")
    _emit(ctx, Result(report.to_dict(), title=report.lemma))


@app.command("degree-bound")
def degree_bound_cmd(
    ctx: typer.Context,
    k: int = typer.Option(..., "--k", help="k for gl, d for osp"),
    family: str = typer.Option("gl", "--family", help="gl or osp"),
):
    """
    PBW degree in which the annihilator of R_k is nonzero.
    """
    with _guard():
        bound = degree_bound(k, family)
    payload: Dict[str, object] = {"k": k, "family": family, "bound": bound}
    if family == "osp":
        payload["statement_bound"] = osp_statement_bound(k)
        payload["note"] = "bound is (2d+1)(2d(2d+1)+1); statement_bound is the smaller (2d+1)(d(2d+1)+1)"
    _emit(ctx, Result(payload))


@app.command("super-symbol-check")
def super_symbol_check(
    ctx: typer.Context,
    k: int = typer.Option(1, "--k", help="Number of copies"),
    series: str = typer.Option("gl", "--series", help="gl, o or sp"),
    rows: str = typer.Option("1,2,3", "--rows", help="Row set I of size 2k+1"),
    cols: str = typer.Option("4,5,6", "--cols", help="Column set J of size 2k+1"),
    power: Optional[int] = typer.Option(None, "--power", help="Exponent to test; default 2k(2k+1)+1"),
):
    """
    Nilpotency of the supercommutative symbol of an annihilator minor.
    """
    exponent = power if power is not None else 2 * k * (2 * k + 1) + 1
    with _guard():
        symbol = super_symbol(
            _parse(parse_int_list, rows, "--rows"), _parse(parse_int_list, cols, "--cols"), k, series
        )
        odd = odd_variable_count(k)
        vanishes = not super_power(symbol, exponent, odd)
    payload = {
        "k": k,
        "series": series,
        "monomials": len(symbol),
        "even_part_vanishes": not symbol.even_part(),
        "nilradical": nilradical_check(symbol),
        "odd_variables": odd,
        "power": exponent,
        "power_vanishes": vanishes,
    }
    _emit(ctx, Result(payload))


@app.command("slz-apply")
def slz_apply(
    ctx: typer.Context,
    op: str = typer.Option("f", "--op", help="f or e"),
    c: int = typer.Option(0, "--c", help="Operator index, or offset m for --family"),
    module: Optional[str] = typer.Option(None, "--module", help="fock, cz, wedgeN, twists ^dual/^tau, '*' for products"),
    index: str = typer.Option("", "--index", help="Basis index of --module"),
    slot: Optional[int] = typer.Option(None, "--slot", help="Act on one tensor factor only"),
    family: Optional[str] = typer.Option(None, "--family", help="Family, e.g. A=A1:0;gamma="),
    coset: str = typer.Option("0", "--coset", help="Coset representative for --family, e.g. A1 or -t"),
    tuple_index: Optional[str] = typer.Option(None, "--tuple", help="Tuple for --family; defaults to μ itself"),
):
    """
    Apply f_c or e_c to a basis vector of an sl_Z module or of a family.
    """
    if op not in ("f", "e"):
        raise typer.BadParameter(f"{op!r} is not f or e", param_hint="--op")
    if (module is None) == (family is None):
        raise typer.BadParameter("give exactly one of --module and --family", param_hint="--module/--family")
    with _guard():
        if module is not None:
            spec = parse_module_spec(module)
            idx = _parse(lambda text: parse_module_index(spec, text), index, "--index")
            act = apply_f if op == "f" else apply_e
            image = act(spec, c, SparseVector.basis(idx), slot=slot)
            subject = str(spec)
        else:
            fam = _parse(parse_slz_family, family, "--family")
            idx = base_index(fam) if tuple_index is None else _parse(parse_tuple_index, tuple_index, "--tuple")
            act = grothendieck_f if op == "f" else grothendieck_e
            image = act(fam, AffineExponent.parse(coset), c, SparseVector.basis(idx))
            subject = str(fam)
    records = vector_records(image)
    payload = {"module": subject, "op": op, "c": c, "image": records}
    _emit(ctx, Result(payload, records, columns=["basis", "coefficient"], title=f"{op}_{c}"))


_TWIST_CHAINS = ((), ("dual",), ("tau",), ("tau", "dual"))


@app.command("slz-verify")
def slz_verify(
    ctx: typer.Context,
    fock_size: int = typer.Option(8, "--fock-size", help="Largest partition size sampled in the Fock space"),
    cz_bound: int = typer.Option(10, "--cz-bound", help="Range of C^Z indices"),
    max_wedge: int = typer.Option(4, "--max-wedge", help="Largest wedge power"),
    span: int = typer.Option(3, "--span", help="Operator indices run over -span..span"),
    family: Optional[str] = typer.Option(None, "--family", help="Also check a family, e.g. A=A1:1,0;B=B1:0"),
    samples: int = typer.Option(50, "--samples", help="Random tuples for the family checks"),
):
    """
    sl_Z relations on truncated bases and the family isomorphism checks.
    """
    indices = range(-span, span + 1)
    modules = [(ModuleSpec.fock(), fock_basis(fock_size)), (ModuleSpec.cz(), cz_basis(cz_bound))]
    modules += [(ModuleSpec.wedge(w), wedge_basis(w, -w - 1, w + 1)) for w in range(1, max_wedge + 1)]
    rows = []
    with _guard():
        for base, basis in modules:
            for twists in _TWIST_CHAINS:
                spec = base.twisted(*twists)
                ok = all(bracket_check(spec, i, j, basis) for i in indices for j in indices)
                rows.append({"check": "bracket", "subject": str(spec), "verdict": ok})
        if family is not None:
            fam = _parse(parse_slz_family, family, "--family")
            rng = random.Random(ctx.obj.seed)
            sample = [random_tuple(fam, rng) for _ in range(samples)]
            offsets = list(indices)
            rows.append({"check": "intertwines", "subject": str(fam), "verdict": intertwines(fam, sample, offsets)})
            rows.append(
                {"check": "cosets_commute", "subject": str(fam), "verdict": cosets_commute(fam, sample[:5], offsets)}
            )
            rows.append(
                {
                    "check": "active_cosets",
                    "subject": str(fam),
                    "verdict": ", ".join(f"{c.label}={c.exponent}" for c in coset_table(fam)),
                }
            )
    payload = {"rows": rows, "all_pass": all(r["verdict"] is not False for r in rows)}
    _emit(ctx, Result(payload, rows, title="sl_Z relations"))


if __name__ == "__main__":
    app()
