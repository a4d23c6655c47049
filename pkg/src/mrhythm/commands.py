"""Command implementations shared by the CLI entry points.

Each ``do_*`` function parses its input, runs the computation, prints the
result and returns the process exit code. Validation problems surface as
``ValueError``; budget and orbit-cap problems as ``BudgetExceededError`` or
``OrbitCapExceededError``. The CLI maps those to exit codes.
"""

import click

from .cli_utils import EXIT_BUDGET, EXIT_FAILED, EXIT_OK
from .config import DEFAULT_BUDGET
from .core import (
    DifferenceVector,
    MarkedDifference,
    MarkedRhythm,
    Rhythm,
    SpaceParams,
    delta,
    embed,
    format_state,
    parse_marked_rhythm,
    parse_params,
    parse_state,
)
from .display import (
    display_claim_progress,
    display_count,
    display_inspection,
    display_orbit,
    display_report,
    display_smooth,
    display_state,
    format_content,
    print_table_empty,
)
from .dynamics import System, orbit, smooth_rhythm, smoothing_orbit
from .measure import (
    content,
    is_max_marked,
    is_mu_invariant,
    is_mu_stable,
    is_quasi_smooth_marked,
    is_quasi_smooth_rhythm,
    is_quasi_smooth_rhythm_marked,
    is_smooth,
    measure_of,
    width,
)
from .oracle import (
    check_budget,
    enumerate_compositions,
    enumerate_marked_differences,
    enumerate_marked_rhythms,
    enumerate_rhythms,
    periodic_states,
    verify_all,
)
from .render import CircleGraphStyle, circle_graph_svg, write_svg

SPACES = ("marked-differences", "marked-rhythms", "differences", "rhythms")


# =============================================================================
# smooth / orbit
# =============================================================================


def do_smooth(text: str, marker: int | None = None, trace: bool = False, fmt: str = "human") -> int:
    """Smooth a rhythm (or a marked rhythm from its own marker)."""
    value = parse_state(text)
    match value:
        case MarkedRhythm():
            rhythm = value.rhythm
            start_marker = value.marker if marker is None else marker
        case Rhythm():
            rhythm = value
            start_marker = 0 if marker is None else marker
        case _:
            raise ValueError(f"smooth needs a rhythm ('a=' field), got {text!r}")

    steps, reached = smooth_rhythm(rhythm, start_marker)
    report = smoothing_orbit(rhythm, start_marker) if trace else None
    display_smooth(
        format_state(rhythm),
        start_marker,
        steps,
        format_state(reached),
        report,
        fmt,
    )
    return EXIT_OK


def do_orbit(text: str, system: str | None = None, max_steps: int | None = None, fmt: str = "human") -> int:
    """Trace the orbit of a marked state in the chosen system."""
    state = parse_state(text)
    if not isinstance(state, (MarkedRhythm, MarkedDifference)):
        raise ValueError(f"orbit needs a marked state ('k=' field), got {text!r}")

    chosen = System(system) if system else System.of(state)
    if chosen is System.DEF and isinstance(state, MarkedRhythm):
        state = delta(state)
    elif chosen is System.REF and isinstance(state, MarkedDifference):
        raise ValueError("--system ref needs a marked rhythm ('a=' field)")

    report = orbit(state, chosen.step, cap=max_steps)
    display_orbit(report, chosen.value, fmt)
    return EXIT_OK


# =============================================================================
# verify
# =============================================================================


def _sweep(limit: int) -> list[SpaceParams]:
    return [SpaceParams(N, n) for N in range(3, limit + 1) for n in range(3, N + 1)]


def do_verify(
    text: str | None,
    claims: list[str] | None = None,
    budget: int | None = DEFAULT_BUDGET,
    jobs: int = 1,
    timings: bool = False,
    all_up_to: int | None = None,
    verbose: bool = False,
    fmt: str = "human",
) -> int:
    """Verify one space, or every space up to ``all_up_to``.

    Returns EXIT_FAILED if any claim has counterexamples, otherwise
    EXIT_BUDGET if any claim was skipped, otherwise EXIT_OK.
    """
    if all_up_to is not None:
        if text:
            raise ValueError("Give either N=.. n=.. or --all-up-to, not both")
        if all_up_to < 3:
            raise ValueError(f"--all-up-to needs N >= 3, got {all_up_to}")
        spaces = _sweep(all_up_to)
    elif text:
        spaces = [parse_params(text)]
    else:
        raise ValueError("verify needs 'N=<int> n=<int>' or --all-up-to")

    any_failed = any_skipped = False
    for params in spaces:
        progress = (lambda r, p=params: display_claim_progress(r, p)) if verbose else None
        report = verify_all(params, claims=claims, budget=budget, jobs=jobs, on_result=progress)
        display_report(report, fmt, timings=timings)
        any_failed |= bool(report.failed)
        if report.skipped:
            any_skipped = True
            for r in report.skipped:
                click.echo(f"Skipped {r.claim_id}: {r.skip_reason}", err=True)

    if any_failed:
        return EXIT_FAILED
    if any_skipped:
        return EXIT_BUDGET
    return EXIT_OK


# =============================================================================
# enumerate
# =============================================================================


def _quasi_smooth(value) -> bool:
    match value:
        case MarkedDifference():
            return is_quasi_smooth_marked(value)
        case MarkedRhythm():
            return is_quasi_smooth_rhythm_marked(value)
        case Rhythm():
            return is_quasi_smooth_rhythm(value)
        case DifferenceVector():
            return any(
                is_quasi_smooth_marked(MarkedDifference(k, value)) for k in range(value.params.n)
            )
    raise TypeError(f"Not a rhythm or difference: {type(value).__name__}")


def do_enumerate(
    text: str,
    space: str = "marked-differences",
    count: bool = False,
    periodic: bool = False,
    quasi_smooth: bool = False,
    budget: int | None = DEFAULT_BUDGET,
    fmt: str = "human",
) -> int:
    """Stream or count the states of a space, optionally filtered."""
    params = parse_params(text)
    if space not in SPACES:
        raise ValueError(f"Unknown space {space!r}; choose from {', '.join(SPACES)}")
    if periodic and space not in ("marked-differences", "marked-rhythms"):
        raise ValueError("--periodic applies to marked-differences and marked-rhythms only")

    if space == "marked-differences":
        states = enumerate_marked_differences(params, budget)
    elif space == "marked-rhythms":
        states = enumerate_marked_rhythms(params, budget)
    elif space == "rhythms":
        states = enumerate_rhythms(params, budget)
    else:
        check_budget(params.composition_count, budget, f"D for {text.strip()}")
        states = enumerate_compositions(params)

    if periodic:
        system = System.DEF if space == "marked-differences" else System.REF
        periodic_set = periodic_states(params, system, budget)
        states = [s for s in states if s in periodic_set]
    if quasi_smooth:
        states = [s for s in states if _quasi_smooth(s)]

    if count:
        display_count(space, params, len(states), fmt)
    elif not states and fmt == "human":
        print_table_empty(f"{space} {text.strip()}", "No states match.")
    else:
        for s in states:
            display_state(s, fmt)
    return EXIT_OK


# =============================================================================
# render / inspect
# =============================================================================


def do_render(text: str, out: str | None = None, **style) -> int:
    """Render a marked rhythm (a plain rhythm is marked at 0) as SVG."""
    value = parse_state(text)
    if isinstance(value, Rhythm):
        value = embed(0, value)
    elif not isinstance(value, MarkedRhythm):
        value = parse_marked_rhythm(text)

    graph_style = CircleGraphStyle(**style)
    if out is None:
        click.echo(circle_graph_svg(value, graph_style), nl=False)
        return EXIT_OK

    write_svg(value, out, graph_style)
    click.echo(f"Wrote {out}", err=True)
    return EXIT_OK


def inspect_value(value) -> dict:
    """Collect every structural property of one value, in display order."""
    facts: dict = {
        "measure": measure_of(value),
        "width": width(value),
        "content": format_content(content(value)),
    }
    match value:
        case Rhythm():
            facts["smooth"] = is_smooth(value)
            facts["quasi_smooth"] = is_quasi_smooth_rhythm(value)
            return facts
        case DifferenceVector():
            facts["quasi_smooth"] = _quasi_smooth(value)
            return facts
        case MarkedRhythm():
            facts["smooth"] = is_smooth(value.rhythm)
            facts["max_marked"] = is_max_marked(delta(value))
            facts["quasi_smooth"] = is_quasi_smooth_rhythm_marked(value)
        case MarkedDifference():
            facts["max_marked"] = is_max_marked(value)
            facts["quasi_smooth"] = is_quasi_smooth_marked(value)

    report = orbit(value)
    facts["mu_invariant"] = is_mu_invariant(value)
    facts["mu_stable"] = is_mu_stable(value)
    facts["periodic"] = report.is_periodic_start
    facts["transient"] = report.transient_length
    facts["period"] = report.period
    if isinstance(value, MarkedRhythm):
        facts["smooth_index"] = report.smooth_index
    return facts


def do_inspect(text: str, fmt: str = "human") -> int:
    value = parse_state(text)
    display_inspection(value, inspect_value(value), fmt)
    return EXIT_OK
