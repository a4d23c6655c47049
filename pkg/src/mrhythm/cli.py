"""CLI interface for smoothing, tracing and verifying marked rhythms."""

import sys

import click

from .cli_utils import (
    COMMAND_HELP,
    EXIT_BUDGET,
    EXIT_INVALID,
    format_option,
    join_args,
)
from .commands import (
    SPACES,
    do_enumerate,
    do_inspect,
    do_orbit,
    do_render,
    do_smooth,
    do_verify,
)
from .config import (
    DEFAULT_BUDGET,
    DEFAULT_CANVAS,
    DEFAULT_FONT_SIZE,
    DEFAULT_JOBS,
    DEFAULT_MARKER_RING,
    DEFAULT_NODE_RADIUS,
    DEFAULT_RADIUS,
)
from .dynamics import OrbitCapExceededError
from .oracle import BudgetExceededError, claim_ids


def _run(action, *args, **kwargs) -> None:
    """Run a do_* function and turn its outcome into the process exit code."""
    try:
        code = action(*args, **kwargs)
    except ValueError as exc:
        click.echo(str(exc), err=True)
        raise SystemExit(EXIT_INVALID) from exc
    except (BudgetExceededError, OrbitCapExceededError) as exc:
        click.echo(str(exc), err=True)
        raise SystemExit(EXIT_BUDGET) from exc
    if code:
        raise SystemExit(code)


class RhythmGroup(click.Group):
    """Command group whose usage errors exit with EXIT_INVALID.

    Exit 2 is reserved for failed verification claims.
    """

    def main(self, *args, standalone_mode: bool = True, **kwargs):
        if not standalone_mode:
            return super().main(*args, standalone_mode=False, **kwargs)
        try:
            rv = super().main(*args, standalone_mode=False, **kwargs)
        except click.UsageError as exc:
            exc.show()
            sys.exit(EXIT_INVALID)
        except click.ClickException as exc:
            exc.show()
            sys.exit(exc.exit_code)
        except click.Abort:
            click.echo("Aborted!", err=True)
            sys.exit(1)
        sys.exit(rv if isinstance(rv, int) else 0)


@click.group(cls=RhythmGroup)
def main():
    """Marked rhythm CLI - smoothing rhythms by reformation.

    States are written as 'N=<int> n=<int> [k=<int>] a=<beats>|d=<gaps>',
    e.g. 'N=8 n=3 k=0 a=0,1,2' or 'N=8 n=3 k=0 d=3,3,2'.

    Examples:

        mrhythm smooth N=8 n=3 a=0,1,2

        mrhythm orbit N=8 n=3 k=0 d=3,3,2

        mrhythm verify N=8 n=3

        mrhythm render N=8 n=3 k=0 a=0,1,2 --out fig.svg
    """


@main.command(help=COMMAND_HELP["smooth"].strip())
@click.argument("rhythm", nargs=-1, required=True)
@click.option("--marker", "-m", type=int, default=None, help="Marker to start from (default 0)")
@click.option("--trace", is_flag=True, help="Print the whole orbit with its measures")
@format_option
def smooth(rhythm: tuple[str, ...], marker: int | None, trace: bool, fmt: str):
    _run(do_smooth, join_args(rhythm), marker=marker, trace=trace, fmt=fmt)


@main.command(help=COMMAND_HELP["orbit"].strip())
@click.argument("state", nargs=-1, required=True)
@click.option(
    "--system",
    "-s",
    type=click.Choice(["ref", "def"]),
    default=None,
    help="Step map to iterate (default: follows the state)",
)
@click.option("--max-steps", type=int, default=None, help="Orbit length cap (default |mR| + 1)")
@format_option
def orbit(state: tuple[str, ...], system: str | None, max_steps: int | None, fmt: str):
    _run(do_orbit, join_args(state), system=system, max_steps=max_steps, fmt=fmt)


@main.command(help=COMMAND_HELP["verify"].strip())
@click.argument("params", nargs=-1)
@click.option(
    "--claim",
    "claims",
    multiple=True,
    type=click.Choice(claim_ids()),
    help="Check only this claim (repeatable)",
)
@click.option("--budget", type=int, default=DEFAULT_BUDGET, show_default=True, help="Largest |mR| to walk")
@click.option("--jobs", "-j", type=int, default=DEFAULT_JOBS, show_default=True, help="Worker processes")
@click.option("--timings", is_flag=True, help="Report elapsed time per claim")
@click.option("--all-up-to", type=int, default=None, help="Verify every N=3..M, n=3..N")
@click.option("--verbose", "-v", is_flag=True, help="Report each claim on stderr as it finishes")
@format_option
def verify(
    params: tuple[str, ...],
    claims: tuple[str, ...],
    budget: int,
    jobs: int,
    timings: bool,
    all_up_to: int | None,
    verbose: bool,
    fmt: str,
):
    _run(
        do_verify,
        join_args(params) or None,
        claims=list(claims) or None,
        budget=budget,
        jobs=jobs,
        timings=timings,
        all_up_to=all_up_to,
        verbose=verbose,
        fmt=fmt,
    )


@main.command("enumerate", help=COMMAND_HELP["enumerate"].strip())
@click.argument("params", nargs=-1, required=True)
@click.option(
    "--space",
    type=click.Choice(SPACES),
    default="marked-differences",
    show_default=True,
    help="State space to list",
)
@click.option("--count", is_flag=True, help="Print only the number of states")
@click.option("--periodic", is_flag=True, help="Keep only periodic states (found by orbit walking)")
@click.option("--quasi-smooth", is_flag=True, help="Keep only quasi-smooth states")
@click.option("--budget", type=int, default=DEFAULT_BUDGET, show_default=True, help="Largest space to walk")
@format_option
def enumerate_(
    params: tuple[str, ...],
    space: str,
    count: bool,
    periodic: bool,
    quasi_smooth: bool,
    budget: int,
    fmt: str,
):
    _run(
        do_enumerate,
        join_args(params),
        space=space,
        count=count,
        periodic=periodic,
        quasi_smooth=quasi_smooth,
        budget=budget,
        fmt=fmt,
    )


@main.command(help=COMMAND_HELP["render"].strip())
@click.argument("state", nargs=-1, required=True)
@click.option("--out", "-o", type=click.Path(dir_okay=False), default=None, help="Output SVG path")
@click.option("--size", type=int, default=DEFAULT_CANVAS, show_default=True, help="Canvas size (px)")
@click.option("--radius", type=int, default=DEFAULT_RADIUS, show_default=True, help="Circle radius (px)")
@click.option("--node-radius", type=int, default=DEFAULT_NODE_RADIUS, show_default=True, help="Onset disk radius (px)")
@click.option("--ring-radius", type=int, default=DEFAULT_MARKER_RING, show_default=True, help="Marker ring radius (px)")
@click.option("--font-size", type=int, default=DEFAULT_FONT_SIZE, show_default=True, help="Beat label size (px)")
def render(
    state: tuple[str, ...],
    out: str | None,
    size: int,
    radius: int,
    node_radius: int,
    ring_radius: int,
    font_size: int,
):
    _run(
        do_render,
        join_args(state),
        out=out,
        size=size,
        radius=radius,
        node_radius=node_radius,
        ring_radius=ring_radius,
        font_size=font_size,
    )


@main.command(help=COMMAND_HELP["inspect"].strip())
@click.argument("state", nargs=-1, required=True)
@format_option
def inspect(state: tuple[str, ...], fmt: str):
    _run(do_inspect, join_args(state), fmt=fmt)


if __name__ == "__main__":
    main()
