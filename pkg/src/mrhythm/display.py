"""Human-readable and JSON-lines output for CLI results."""

import json

import click

from .core import SpaceParams, format_params, format_state
from .dynamics import OrbitReport
from .measure import Content, content
from .oracle import ClaimResult, VerificationReport


def emit_record(record: dict) -> None:
    """Print one JSON object on its own line with stable key order."""
    click.echo(json.dumps(record, sort_keys=True, separators=(",", ":")))


def print_table_header(title: str, header: str) -> None:
    """Print standard table header with title and column headers."""
    click.echo()
    click.echo("=" * 80)
    click.echo(title)
    click.echo("=" * 80)
    click.echo(header)
    click.echo("-" * 80)


def print_table_empty(title: str, message: str) -> None:
    click.echo()
    click.echo("=" * 80)
    click.echo(title)
    click.echo("=" * 80)
    click.echo(f"  {message}")
    click.echo()


def format_content(c: Content) -> str:
    """Content as 'gap:count' pairs in increasing gap order, e.g. '2:1,3:2'."""
    return ",".join(f"{gap}:{count}" for gap, count in sorted(c.items()))


def _yes_no(flag: bool) -> str:
    return "yes" if flag else "no"


# =============================================================================
# Smoothing and Orbits
# =============================================================================


def display_smooth(
    start: str,
    marker: int,
    steps: int,
    reached: str,
    report: OrbitReport | None,
    fmt: str,
) -> None:
    """Show a smoothing result, with the orbit when ``report`` is given."""
    if fmt == "json-lines":
        if report is not None:
            for i, (state, m) in enumerate(zip(report.states, report.measure_trace)):
                emit_record({"record": "state", "index": i, "state": format_state(state), "measure": m})
        emit_record(
            {"record": "smooth", "start": start, "marker": marker, "steps": steps, "smooth": reached}
        )
        return

    click.echo(f"Start:  {start} (marker {marker})")
    click.echo(f"Steps:  {steps}")
    click.echo(f"Smooth: {reached}")
    if report is not None:
        _print_orbit_table("Orbit", report, mark_index=steps)


def display_orbit(report: OrbitReport, system: str, fmt: str) -> None:
    if fmt == "json-lines":
        for i, (state, m) in enumerate(zip(report.states, report.measure_trace)):
            emit_record(
                {
                    "record": "state",
                    "index": i,
                    "state": format_state(state),
                    "measure": m,
                    "content": format_content(content(state)),
                }
            )
        emit_record(
            {
                "record": "summary",
                "system": system,
                "start": format_state(report.states[0]),
                "transient": report.transient_length,
                "period": report.period,
                "smooth_index": report.smooth_index,
            }
        )
        return

    _print_orbit_table(f"Orbit ({system})", report)
    click.echo(f"Transient: {report.transient_length}")
    click.echo(f"Period:    {report.period}")
    if report.smooth_index is not None:
        click.echo(f"First smooth state: step {report.smooth_index}")


def _print_orbit_table(title: str, report: OrbitReport, mark_index: int | None = None) -> None:
    print_table_header(title, f"{'STEP':<6}{'STATE':<44}{'MEASURE':>10}  CONTENT")
    cycle_start = report.transient_length
    for i, (state, m) in enumerate(zip(report.states, report.measure_trace)):
        flags = ""
        if i == cycle_start:
            flags += " <cycle"
        if i == len(report.states) - 1:
            flags += " (repeat)"
        if mark_index is not None and i == mark_index:
            flags += " *smooth"
        click.echo(
            f"{i:<6}{format_state(state):<44}{m:>10}  {format_content(content(state))}{flags}"
        )
    click.echo("-" * 80)


# =============================================================================
# Verification
# =============================================================================


def _status(result: ClaimResult) -> str:
    if result.skipped:
        return "skipped"
    return "pass" if result.passed else "FAIL"


def display_report(report: VerificationReport, fmt: str, timings: bool = False) -> None:
    """Show a verification report. Timings are only shown when asked for."""
    params = report.params
    if fmt == "json-lines":
        for r in report.results:
            record = {
                "record": "claim",
                "N": params.N,
                "n": params.n,
                "claim": r.claim_id,
                "statement": r.statement,
                "space": r.space,
                "states_checked": r.states_checked,
                "status": _status(r),
                "counterexample_count": r.counterexample_count,
                "counterexamples": [
                    {"state": c.state, "lhs": c.lhs, "rhs": c.rhs} for c in r.counterexamples
                ],
            }
            if r.skipped:
                record["skip_reason"] = r.skip_reason
            if timings:
                record["elapsed_seconds"] = round(r.elapsed_seconds, 6)
            emit_record(record)
        emit_record(
            {
                "record": "summary",
                "N": params.N,
                "n": params.n,
                "all_passed": report.all_passed,
                "failed": [r.claim_id for r in report.failed],
                "skipped": [r.claim_id for r in report.skipped],
                "observations": report.observations,
            }
        )
        return

    header = f"{'CLAIM':<34}{'SPACE':<8}{'STATES':>10}  RESULT"
    if timings:
        header += "      TIME"
    print_table_header(f"Verification {format_params(params)}", header)
    for r in report.results:
        line = f"{r.claim_id:<34}{r.space:<8}{r.states_checked:>10}  {_status(r):<7}"
        if timings:
            line += f"{r.elapsed_seconds:>9.3f}s"
        click.echo(line.rstrip())
        if r.skipped:
            click.echo(f"    {r.skip_reason}")
        for c in r.counterexamples:
            click.echo(f"    {c.state}: {c.lhs} vs {c.rhs}")
        if r.counterexample_count > len(r.counterexamples):
            click.echo(f"    ... {r.counterexample_count - len(r.counterexamples)} more")
    click.echo("-" * 80)

    if report.observations:
        click.echo("Observations:")
        for key, value in sorted(report.observations.items()):
            click.echo(f"  {key}: {value}")

    total = len(report.results)
    if report.all_passed:
        click.echo(f"All {total} claims passed.")
    else:
        passed = sum(r.passed for r in report.results)
        click.echo(
            f"{passed}/{total} claims passed, {len(report.failed)} failed, "
            f"{len(report.skipped)} skipped."
        )


def display_claim_progress(result: ClaimResult, params: SpaceParams) -> None:
    click.echo(f"[{format_params(params)}] {result.claim_id}: {_status(result)}", err=True)


# =============================================================================
# Enumeration and Inspection
# =============================================================================


def display_count(space: str, params: SpaceParams, count: int, fmt: str) -> None:
    if fmt == "json-lines":
        emit_record({"record": "count", "space": space, "N": params.N, "n": params.n, "count": count})
    else:
        click.echo(f"{space} {format_params(params)}: {count}")


def display_state(value, fmt: str) -> None:
    if fmt == "json-lines":
        emit_record({"record": "state", "state": format_state(value)})
    else:
        click.echo(format_state(value))


def display_inspection(value, facts: dict, fmt: str) -> None:
    """Show the facts about one value, in the order given."""
    if fmt == "json-lines":
        emit_record({"record": "inspect", "state": format_state(value), **facts})
        return

    print_table_header(format_state(value), f"{'PROPERTY':<24}VALUE")
    for key, fact in facts.items():
        if isinstance(fact, bool):
            fact = _yes_no(fact)
        elif fact is None:
            fact = "-"
        click.echo(f"{key:<24}{fact}")
