#!/usr/bin/env python3
"""
grstrat - stratifications of Grassmannians of polynomial spaces
Main CLI entry point for enumeration, representation-theoretic counts and
exact checks on explicit spaces of polynomials.
"""

import logging
import sys
from contextlib import contextmanager
from pathlib import Path
from typing import Iterator

import rich_click as click
from dotenv import load_dotenv

# Load environment and configure path early
load_dotenv()
sys.path.insert(0, str(Path(__file__).parent))

# Now import local modules (after sys.path modification)
from src.cli_io import (  # noqa: E402
    ExponentsReport,
    MiuraReport,
    OperatorReport,
    PosetFile,
    RationalFunctionModel,
    SelfDualReport,
    SpaceFile,
    load_space,
    parse_label,
    poset_to_dot,
)
from src.errors import MathematicalFailure, RankMismatch, UsageError  # noqa: E402
from src.exact_algebra import format_poly  # noqa: E402
from src.logging_config import LogLevel, get_grstrat_logger, set_console_level  # noqa: E402
from src.poly_spaces import (  # noqa: E402
    associated_T,
    auto_stratum_data,
    build_DX_factorized,
    dual_space,
    exponents_at,
    format_point,
    fundamental_operator,
    half_conjugate,
    miura_potential,
    miura_scalar_operator,
    parse_point,
    parse_stratum_data,
    partition_from_exponents,
    reduced_wronskian,
    selfdual_check,
    squaring_map,
    verified_stratum_data,
    wronskian_of_space,
    y_from_basis,
)
from src.rep_engine import fold_decompose, invariant_dim_A, invariant_dim_BC  # noqa: E402
from src.settings_config import (  # noqa: E402
    AVAILABLE_FAMILIES,
    DEFAULT_FAMILY,
    MAX_CELLS_ENV,
    get_family,
    get_lie_type,
)
from src.strata import (  # noqa: E402
    build_poset,
    closure,
    preimage_fibers,
    reduced_wronski_degree,
    top_strata_BC,
    unreachable_pairs,
    wronski_degree_A,
    wronski_degree_BC,
)
from src.tui import print_stratification  # noqa: E402
from src.weights import assoc_partition, parse_partition, parse_weight, parse_weight_list  # noqa: E402

# Configure rich_click after imports
click.rich_click.USE_RICH_MARKUP = True
click.rich_click.SHOW_ARGUMENTS = True
click.rich_click.GROUP_ARGUMENTS_OPTIONS = True
click.rich_click.STYLE_ERRORS_SUGGESTION = "magenta italic"
click.rich_click.ERRORS_SUGGESTION = ""
click.rich_click.ERRORS_EPILOGUE = ""

click.rich_click.COMMAND_GROUPS = {
    "main.py": [
        {
            "name": "Stratifications",
            "commands": ["strata", "closure", "top", "fibers", "diagnose"],
        },
        {
            "name": "Representations",
            "commands": ["invdim", "tensor", "degree", "assoc"],
        },
        {
            "name": "Polynomial spaces",
            "commands": ["space"],
        },
        {
            "name": "Meta",
            "commands": ["eval"],
        },
    ]
}

EVAL_SUITES = ["stratification", "invariants"]

logger = logging.getLogger(__name__)


@contextmanager
def exit_codes() -> Iterator[None]:
    """Map library failures to exit codes: 2 for bad input, 3 for mathematical failures."""
    try:
        yield
    except MathematicalFailure as e:
        logger.error(f"{type(e).__name__}: {e}")
        click.secho(f"Error: {type(e).__name__}: {e}", fg="red", err=True)
        sys.exit(MathematicalFailure.exit_code)
    except ValueError as e:
        logger.error(f"Usage error: {e}")
        click.secho(f"Error: {e}", fg="red", err=True)
        sys.exit(UsageError.exit_code)


def family_option(func):
    return click.option(
        "--family",
        type=str,
        default=DEFAULT_FAMILY,
        show_default=True,
        help=f"Stratification family: {', '.join(AVAILABLE_FAMILIES)} (Gr(N,d) or sGr(N,d))",
    )(func)


def grassmannian_options(func):
    func = click.option("--d", "d", type=int, required=True, help="Degree bound d")(func)
    func = click.option("--N", "N", type=int, required=True, help="Dimension N of the spaces")(func)
    return family_option(func)


def max_cells_option(func):
    return click.option(
        "--max-cells",
        type=int,
        default=None,
        help=f"Budget on N(d-N); overrides the {MAX_CELLS_ENV} environment variable",
    )(func)


@click.group(invoke_without_command=True)
@click.version_option(version="0.1.0", prog_name="grstrat")
@click.option("--verbose", "-v", count=True, help="Show INFO (-v) or DEBUG (-vv) records on the console")
@click.pass_context
def main(ctx, verbose: int):
    """Stratifications of Gr(N,d) and the self-dual Grassmannian sGr(N,d)."""
    if ctx.invoked_subcommand is None:
        click.echo(ctx.get_help())
        click.echo()
        return
    _, log_file_path = get_grstrat_logger(ctx.invoked_subcommand)
    if verbose:
        set_console_level(LogLevel.DEBUG if verbose > 1 else LogLevel.INFO)
    logger.info(f"Logging to {log_file_path}")


@main.command()
@grassmannian_options
@click.option(
    "--format",
    "output_format",
    type=click.Choice(["json", "dot", "table"], case_sensitive=False),
    default="json",
    show_default=True,
    help="Poset output format",
)
@click.option("--include-empty", is_flag=True, help="Also draw merges that are not d-nontrivial, dashed")
@max_cells_option
def strata(family: str, N: int, d: int, output_format: str, include_empty: bool, max_cells: int | None):
    """
    Enumerate the strata and their degeneration poset.

    Arrows point from a stratum to the strata in its closure of one dimension less.
    """
    with exit_codes():
        family = get_family(family)
        dag = build_poset(N, d, family, include_empty=include_empty, max_cells=max_cells)

        output_format = output_format.lower()
        if output_format == "json":
            click.echo(PosetFile.from_dag(dag).model_dump_json(indent=2))
        elif output_format == "dot":
            click.echo(poset_to_dot(dag))
        else:
            print_stratification(dag)


@main.command(name="closure")
@grassmannian_options
@click.option("--label", required=True, help='Label such as "2,0;1,0;1,0" or "1,0_1;0,0"')
def closure_command(family: str, N: int, d: int, label: str):
    """Print the strata in the closure of a stratum, one per line."""
    with exit_codes():
        family = get_family(family)
        start = parse_label(label, N, d, family)
        for member in closure(start):
            click.echo(str(member))


@main.command()
@click.option("--N", "N", type=int, required=True, help="Dimension N of the spaces")
@click.option("--d", "d", type=int, required=True, help="Degree bound d")
@max_cells_option
def top(N: int, d: int, max_cells: int | None):
    """Print the top-dimensional strata of sGr(N,d) with their reduced Wronski degrees."""
    with exit_codes():
        for label in top_strata_BC(N, d, max_cells):
            click.echo(f"{label} {reduced_wronski_degree(label)}")


@main.command()
@grassmannian_options
@max_cells_option
def fibers(family: str, N: int, d: int, max_cells: int | None):
    """Group strata by the root multiplicities of their (reduced) Wronskian."""
    with exit_codes():
        family = get_family(family)
        for key, labels in preimage_fibers(N, d, family, max_cells).items():
            multiplicities = ",".join(str(m) for m in key)
            click.echo(f"{multiplicities}: " + " ".join(str(label) for label in labels))


@main.command()
@grassmannian_options
@max_cells_option
def diagnose(family: str, N: int, d: int, max_cells: int | None):
    """List pairs comparable in the partial order but not joined by simple degenerations."""
    with exit_codes():
        family = get_family(family)
        missing = unreachable_pairs(N, d, family, max_cells)
        for xi, lam in missing:
            click.echo(f"{xi} <= {lam}")
        if not missing:
            click.secho("✓ Every comparable pair is joined by simple degenerations", fg="green", err=True)


@main.command()
@family_option
@click.option("--N", "N", type=int, default=None, help="N for type A partitions")
@click.option("--type", "lie_type", type=str, default=None, help="Lie type B or C (family BC)")
@click.option("--rank", type=int, default=None, help="Rank of the Lie algebra (family BC)")
@click.option("--weights", required=True, help='Weights separated by ";", e.g. "2,0;1,0;2,0"')
def invdim(family: str, N: int | None, lie_type: str | None, rank: int | None, weights: str):
    """Dimension of the invariants of a tensor product of irreducible modules."""
    with exit_codes():
        family = get_family(family)
        if family == "A":
            if N is None:
                raise RankMismatch("family A needs --N")
            parts = [parse_partition(item, N) for item in weights.split(";") if item.strip()]
            click.echo(invariant_dim_A(parts, N))
        else:
            if lie_type is None or rank is None:
                raise RankMismatch("family BC needs --type and --rank")
            rs = get_lie_type(lie_type, rank)
            click.echo(invariant_dim_BC(rs, parse_weight_list(weights, rs)))


@main.command()
@click.option("--type", "lie_type", type=str, required=True, help="Lie type A, B or C")
@click.option("--rank", type=int, required=True, help="Rank of the Lie algebra")
@click.option("--weights", required=True, help='Highest weights separated by ";", e.g. "0,1;0,1"')
def tensor(lie_type: str, rank: int, weights: str):
    """Decompose a tensor product of irreducible modules; one "weight: multiplicity" per line."""
    with exit_codes():
        rs = get_lie_type(lie_type, rank)
        factors = [w.coords for w in parse_weight_list(weights, rs)]
        for weight, m in sorted(fold_decompose(rs, factors).items(), reverse=True):
            click.echo(f"{','.join(str(c) for c in weight)}: {m}")


@main.command()
@grassmannian_options
def degree(family: str, N: int, d: int):
    """Degree of the Wronski map on Gr(N,d), or of the reduced Wronski map on sGr(N,d) for even N."""
    with exit_codes():
        family = get_family(family)
        click.echo(wronski_degree_A(N, d) if family == "A" else wronski_degree_BC(N, d))


@main.command()
@click.option("--type", "lie_type", type=str, required=True, help="Lie type B or C")
@click.option("--rank", type=int, required=True, help="Rank of the Lie algebra")
@click.option("--weight", required=True, help='Dominant weight, e.g. "0,1"')
@click.option("--k", type=int, default=0, show_default=True, help="Last part of the lifted partition")
@click.option("--N", "N", type=int, required=True, help="Dimension N")
def assoc(lie_type: str, rank: int, weight: str, k: int, N: int):
    """Print the N-symmetric partition attached to a weight and a shift k."""
    with exit_codes():
        rs = get_lie_type(lie_type, rank)
        lam = assoc_partition(parse_weight(weight, rs), k, N)
        click.echo(",".join(str(p) for p in lam.parts))


@main.group()
def space():
    """Exact computations on a space of polynomials read from a JSON file."""


def space_file_argument(func):
    return click.option(
        "--in",
        "source",
        type=click.File("r", encoding="utf-8"),
        required=True,
        help='Space file: {"N": 2, "d": 3, "basis": [["1"], ["0", "1"]]}',
    )(func)


def point_option(func):
    return click.option(
        "--point",
        "points",
        multiple=True,
        help='Stratum data POINT:PARTITION, e.g. "0:2,1,0" or "inf:1,1"; repeat per point',
    )(func)


def _stratum_data(points: tuple[str, ...], N: int):
    return parse_stratum_data(points, N) if points else None


@space.command()
@space_file_argument
def wronskian(source):
    """Print the monic Wronskian of the space."""
    with exit_codes():
        X = load_space(source.read())
        click.echo(format_poly(wronskian_of_space(X)))


@space.command()
@space_file_argument
@point_option
def exponents(source, points: tuple[str, ...]):
    """Exponents at the given points, or at every singular point when none is given."""
    with exit_codes():
        X = load_space(source.read())
        if points:
            targets = [parse_point(entry.split(":")[0]) for entry in points]
        else:
            targets = list(auto_stratum_data(X).points)
        reports = []
        for z in targets:
            values = exponents_at(X, z)
            partition = "" if z == "inf" else ",".join(str(p) for p in partition_from_exponents(values).parts)
            reports.append(ExponentsReport(point=format_point(z), exponents=values, partition=partition))
        click.echo("[" + ",\n".join(r.model_dump_json(indent=2) for r in reports) + "]")


@space.command()
@space_file_argument
@point_option
def dual(source, points: tuple[str, ...]):
    """Print the dual space as a space file."""
    with exit_codes():
        X = load_space(source.read())
        dagger = dual_space(X, _stratum_data(points, X.N))
        click.echo(SpaceFile.from_space(dagger).model_dump_json(indent=2))


@space.command()
@space_file_argument
@point_option
def selfdual(source, points: tuple[str, ...]):
    """Decide whether X = g * X-dagger and report g."""
    with exit_codes():
        X = load_space(source.read())
        result = selfdual_check(X, _stratum_data(points, X.N))
        click.echo(SelfDualReport.from_result(result).model_dump_json(indent=2, exclude_none=True))


@space.command()
@space_file_argument
def square(source):
    """Print span{p^2, pq, q^2} for a 2-dimensional space span{p, q}."""
    with exit_codes():
        X = load_space(source.read())
        click.echo(SpaceFile.from_space(squaring_map(X)).model_dump_json(indent=2))


@space.command()
@space_file_argument
@click.option("--N", "N", type=int, default=None, help="Expected dimension of the space")
def reduce(source, N: int | None):
    """Print the reduced Wronskian: the N-th (odd N) or N/2-th (even N) root of Wr(X)."""
    with exit_codes():
        X = load_space(source.read())
        if N is not None and N != X.N:
            raise RankMismatch(f"--N {N} but the space has dimension {X.N}")
        click.echo(format_poly(reduced_wronskian(X)))


@space.command()
@space_file_argument
@point_option
@click.option("--factorized", is_flag=True, help="Build D_X as a product of first-order factors")
def dx(source, points: tuple[str, ...], factorized: bool):
    """Print the monic operator D_X with kernel X."""
    with exit_codes():
        X = load_space(source.read())
        if factorized:
            T = associated_T(verified_stratum_data(X, _stratum_data(points, X.N)), X.N)
            op = build_DX_factorized(y_from_basis(X.basis, T), T)
        else:
            op = fundamental_operator(X)
        click.echo(OperatorReport.from_diffop(op).model_dump_json(indent=2))


@space.command()
@space_file_argument
@point_option
def miura(source, points: tuple[str, ...]):
    """For N=2: the Miura potential v, (d + v)(d - v) and its comparison with D_X."""
    with exit_codes():
        X = load_space(source.read())
        v, T = miura_potential(X, _stratum_data(points, X.N))
        op = miura_scalar_operator("C", 1, [v])
        report = MiuraReport(
            potential=RationalFunctionModel.from_ratfunc(v),
            operator=OperatorReport.from_diffop(op),
            matches_fundamental_operator=half_conjugate(op, T) == fundamental_operator(X),
        )
        click.echo(report.model_dump_json(indent=2))


@main.command(name="eval")
@click.argument(
    "suite",
    type=click.Choice(EVAL_SUITES, case_sensitive=False),
    required=True,
)
def eval_command(suite: str):
    """
    Run an evaluation suite against its ground truth.

    SUITE: The suite to run (stratification or invariants)
    """
    click.secho(f"\nRunning {suite} evaluation...\n", fg="cyan", bold=True)

    eval_dir = Path(__file__).parent / "eval" / suite.lower()
    eval_script = eval_dir / "eval.py"

    if not eval_script.exists():
        click.secho(f"Error: Evaluation script not found: {eval_script}", fg="red", err=True)
        sys.exit(1)

    try:
        # Run the eval script
        import subprocess

        result = subprocess.run(
            [sys.executable, str(eval_script)],
            cwd=str(eval_dir),
            capture_output=False,
        )
        sys.exit(result.returncode)
    except OSError as e:
        logger.error(f"Error running evaluation: {e}")
        click.secho(f"\nError: {e}", fg="red", err=True)
        sys.exit(1)


if __name__ == "__main__":
    main()
