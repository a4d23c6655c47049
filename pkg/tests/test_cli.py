"""CLI tests for smooth, orbit, verify, enumerate, render and inspect."""

from __future__ import annotations

import json

import pytest
from click.testing import CliRunner

import mrhythm.dynamics as dynamics
from mrhythm.cli import main
from mrhythm.core import DifferenceVector, MarkedDifference, format_state, parse_state
from mrhythm.dynamics import smooth_rhythm
from mrhythm.oracle import claim_ids
from tests.conftest import make_rhythm_of


@pytest.fixture()
def runner() -> CliRunner:
    return CliRunner()


def _records(output: str) -> list[dict]:
    return [json.loads(line) for line in output.splitlines() if line.startswith("{")]


# ---------------------------------------------------------------------------
# smooth command
# ---------------------------------------------------------------------------


def test_smooth_example(runner: CliRunner):
    result = runner.invoke(main, ["smooth", "N=8", "n=3", "a=0,1,2"])
    assert result.exit_code == 0, result.output
    assert "Steps:  2" in result.output
    assert "Smooth: N=8 n=3 a=5,7,2" in result.output


def test_smooth_accepts_single_quoted_argument(runner: CliRunner):
    result = runner.invoke(main, ["smooth", "N=8 n=3 a=0,1,2", "--format", "json-lines"])
    assert result.exit_code == 0
    (record,) = _records(result.output)
    assert record == {
        "marker": 0,
        "record": "smooth",
        "smooth": "N=8 n=3 a=5,7,2",
        "start": "N=8 n=3 a=0,1,2",
        "steps": 2,
    }


def test_smooth_already_smooth(runner: CliRunner):
    result = runner.invoke(main, ["smooth", "N=8", "n=3", "a=5,7,2"])
    assert result.exit_code == 0
    assert "Steps:  0" in result.output


def test_smooth_trace_lists_measures(runner: CliRunner):
    result = runner.invoke(
        main, ["smooth", "N=8", "n=3", "a=0,1,2", "--trace", "--format", "json-lines"]
    )
    assert result.exit_code == 0
    states = [r for r in _records(result.output) if r["record"] == "state"]
    assert [r["measure"] for r in states[:3]] == [6, 12, 18]


@pytest.mark.parametrize(
    "entries, marker",
    [((0, 1, 2), 0), ((0, 1, 2), 2), ((0, 1, 2, 3), 1), ((5, 7, 2), 0)],
)
def test_smooth_agrees_with_smooth_rhythm(runner: CliRunner, entries, marker):
    a = make_rhythm_of(entries, N=12 if len(entries) == 4 else 8)
    steps, reached = smooth_rhythm(a, marker)
    result = runner.invoke(
        main, ["smooth", format_state(a), "--marker", str(marker), "--format", "json-lines"]
    )
    assert result.exit_code == 0, result.output
    (record,) = _records(result.output)
    assert record["steps"] == steps
    assert record["smooth"] == format_state(reached)


def test_smooth_rejects_double_winding(runner: CliRunner):
    result = runner.invoke(main, ["smooth", "N=8", "n=3", "a=0,2,1"])
    assert result.exit_code == 1
    assert "gap sum 16" in result.output


def test_smooth_rejects_differences(runner: CliRunner):
    result = runner.invoke(main, ["smooth", "N=8", "n=3", "d=6,1,1"])
    assert result.exit_code == 1


# ---------------------------------------------------------------------------
# orbit command
# ---------------------------------------------------------------------------


def test_orbit_ref_measure_trace(runner: CliRunner):
    result = runner.invoke(main, ["orbit", "N=8", "n=3", "k=0", "a=0,1,2", "--format", "json-lines"])
    assert result.exit_code == 0
    records = _records(result.output)
    measures = [r["measure"] for r in records if r["record"] == "state"]
    assert measures[:3] == [6, 12, 18]
    summary = records[-1]
    assert summary["system"] == "ref"
    assert summary["period"] == 48
    assert summary["smooth_index"] == 2


def test_orbit_def_period_six_with_constant_content(runner: CliRunner):
    result = runner.invoke(main, ["orbit", "N=8", "n=3", "k=0", "d=3,3,2", "--format", "json-lines"])
    assert result.exit_code == 0
    records = _records(result.output)
    assert records[-1]["period"] == 6
    assert records[-1]["transient"] == 0
    assert {r["content"] for r in records if r["record"] == "state"} == {"2:1,3:2"}


def test_orbit_system_def_on_marked_rhythm(runner: CliRunner):
    result = runner.invoke(
        main, ["orbit", "N=8", "n=3", "k=0", "a=0,1,2", "--system", "def", "--format", "json-lines"]
    )
    assert result.exit_code == 0
    records = _records(result.output)
    assert records[0]["state"] == "N=8 n=3 k=0 d=6,1,1"
    assert records[-1]["period"] == 6


def test_orbit_human_output(runner: CliRunner):
    result = runner.invoke(main, ["orbit", "N=8", "n=3", "k=0", "d=3,3,2"])
    assert result.exit_code == 0
    assert "Period:    6" in result.output
    assert "=" * 80 in result.output


def test_orbit_system_ref_on_difference_rejected(runner: CliRunner):
    result = runner.invoke(main, ["orbit", "N=8", "n=3", "k=0", "d=3,3,2", "--system", "ref"])
    assert result.exit_code == 1


def test_orbit_needs_marker(runner: CliRunner):
    result = runner.invoke(main, ["orbit", "N=8", "n=3", "a=0,1,2"])
    assert result.exit_code == 1


def test_orbit_cap_too_low(runner: CliRunner):
    result = runner.invoke(main, ["orbit", "N=8", "n=3", "k=0", "a=0,1,2", "--max-steps", "2"])
    assert result.exit_code == 3
    assert "did not close" in result.output


# ---------------------------------------------------------------------------
# verify command
# ---------------------------------------------------------------------------


def test_verify_8_3_passes(runner: CliRunner):
    result = runner.invoke(main, ["verify", "N=8", "n=3"])
    assert result.exit_code == 0, result.output
    assert f"All {len(claim_ids())} claims passed." in result.output


def test_verify_json_lines_is_byte_stable(runner: CliRunner):
    args = ["verify", "N=7", "n=4", "--format", "json-lines"]
    first = runner.invoke(main, args)
    second = runner.invoke(main, args)
    assert first.exit_code == 0
    assert first.output == second.output
    records = _records(first.output)
    assert records[-1]["record"] == "summary"
    assert records[-1]["all_passed"] is True
    assert "elapsed_seconds" not in records[0]


def test_verify_timings_opt_in(runner: CliRunner):
    result = runner.invoke(
        main, ["verify", "N=6", "n=3", "--claim", "commutation", "--timings", "--format", "json-lines"]
    )
    assert result.exit_code == 0
    assert "elapsed_seconds" in _records(result.output)[0]


def test_verify_over_budget_exits_3(runner: CliRunner):
    result = runner.invoke(main, ["verify", "N=8", "n=3", "--budget", "100"])
    assert result.exit_code == 3
    assert "Skipped commutation" in result.output


def test_verify_tampered_def_step_exits_2(runner: CliRunner, monkeypatch):
    def swapped(D: MarkedDifference) -> MarkedDifference:
        gaps = list(D.gaps)
        k, j = D.marker, (D.marker + 1) % D.params.n
        total = gaps[k] + gaps[j]
        gaps[k], gaps[j] = total - total // 2, total // 2
        return MarkedDifference(j, DifferenceVector(D.params, tuple(gaps)))

    monkeypatch.setattr(dynamics, "def_step", swapped)
    result = runner.invoke(main, ["verify", "N=8", "n=3", "--claim", "commutation"])
    assert result.exit_code == 2
    assert "FAIL" in result.output


def test_verify_sweep(runner: CliRunner):
    result = runner.invoke(main, ["verify", "--all-up-to", "5", "--format", "json-lines"])
    assert result.exit_code == 0
    summaries = [r for r in _records(result.output) if r["record"] == "summary"]
    assert [(r["N"], r["n"]) for r in summaries] == [(3, 3), (4, 3), (4, 4), (5, 3), (5, 4), (5, 5)]


def test_verify_verbose_reports_progress(runner: CliRunner):
    result = runner.invoke(main, ["verify", "N=6", "n=3", "--claim", "commutation", "-v"])
    assert result.exit_code == 0
    assert "[N=6 n=3] commutation: pass" in result.output


@pytest.mark.parametrize(
    "args",
    [
        ["verify"],
        ["verify", "N=8", "n=2"],
        ["verify", "N=8", "n=3", "--all-up-to", "5"],
        ["verify", "N=8", "n=3", "k=0", "a=0,1,2"],
    ],
)
def test_verify_bad_input_exits_1(runner: CliRunner, args):
    assert runner.invoke(main, args).exit_code == 1


@pytest.mark.parametrize(
    "args",
    [
        ["orbit", "N=8", "n=3", "k=0", "a=0,1,2", "--system", "xyz"],
        ["verify", "N=8", "n=3", "--claim", "nope"],
        ["verify", "N=8", "n=3", "--budget", "abc"],
        ["smooth"],
        ["inspect", "N=8", "n=3", "a=5,7,2", "--format", "xml"],
        ["render", "N=8", "n=3", "k=0", "a=0,1,2", "--no-such-option"],
    ],
)
def test_usage_errors_exit_1(runner: CliRunner, args):
    result = runner.invoke(main, args)
    assert result.exit_code == 1, result.output


def test_help_exits_0(runner: CliRunner):
    result = runner.invoke(main, ["verify", "--help"])
    assert result.exit_code == 0
    assert "--all-up-to" in result.output


# ---------------------------------------------------------------------------
# enumerate command
# ---------------------------------------------------------------------------


@pytest.mark.parametrize(
    "args, expected",
    [
        (["N=8", "n=3"], 63),
        (["N=8", "n=3", "--space", "marked-rhythms"], 504),
        (["N=8", "n=3", "--space", "rhythms"], 168),
        (["N=8", "n=3", "--space", "differences"], 21),
        (["N=5", "n=5"], 5),
        (["N=8", "n=3", "--periodic"], 6),
        (["N=8", "n=3", "--quasi-smooth"], 6),
        (["N=8", "n=3", "--space", "marked-rhythms", "--periodic"], 48),
    ],
)
def test_enumerate_counts(runner: CliRunner, args, expected):
    result = runner.invoke(main, ["enumerate", *args, "--count", "--format", "json-lines"])
    assert result.exit_code == 0, result.output
    assert _records(result.output)[0]["count"] == expected


def test_enumerate_periodic_rhythms_rejected(runner: CliRunner):
    result = runner.invoke(main, ["enumerate", "N=8", "n=3", "--space", "rhythms", "--periodic"])
    assert result.exit_code == 1


def test_enumerate_over_budget(runner: CliRunner):
    result = runner.invoke(main, ["enumerate", "N=8", "n=3", "--budget", "10"])
    assert result.exit_code == 3


def test_enumerated_states_round_trip(runner: CliRunner):
    result = runner.invoke(main, ["enumerate", "N=9", "n=4", "--space", "marked-rhythms"])
    assert result.exit_code == 0
    lines = result.output.splitlines()
    assert len(lines) == 4 * 9 * 56
    for line in lines:
        assert format_state(parse_state(line)) == line


# ---------------------------------------------------------------------------
# render and inspect commands
# ---------------------------------------------------------------------------


def test_render_to_file(runner: CliRunner, tmp_path):
    out = tmp_path / "fig.svg"
    result = runner.invoke(main, ["render", "N=8", "n=3", "k=0", "a=0,1,2", "--out", str(out)])
    assert result.exit_code == 0
    assert out.read_text(encoding="utf-8").startswith("<svg")


def test_render_file_matches_stdout(runner: CliRunner, tmp_path):
    out = tmp_path / "fig.svg"
    args = ["render", "N=8", "n=3", "k=1", "a=5,1,2", "--size", "320"]
    to_file = runner.invoke(main, [*args, "--out", str(out)])
    to_stdout = runner.invoke(main, args)
    assert to_file.exit_code == 0
    assert out.read_text(encoding="utf-8") == to_stdout.output


def test_render_to_stdout(runner: CliRunner):
    result = runner.invoke(main, ["render", "N=8", "n=3", "k=1", "a=5,1,2"])
    assert result.exit_code == 0
    assert result.output.count('class="node"') == 3
    assert result.output.count('class="beat-label"') == 8


def test_render_degenerate_style(runner: CliRunner):
    result = runner.invoke(main, ["render", "N=8", "n=3", "k=0", "a=0,1,2", "--ring-radius", "3"])
    assert result.exit_code == 1
    assert "must exceed node radius" in result.output


def test_inspect_stable_not_periodic(runner: CliRunner):
    result = runner.invoke(main, ["inspect", "N=8", "n=3", "k=2", "d=3,3,2", "--format", "json-lines"])
    assert result.exit_code == 0
    (record,) = _records(result.output)
    assert record["mu_stable"] is True
    assert record["periodic"] is False
    assert record["quasi_smooth"] is False
    assert record["transient"] == 1
    assert record["period"] == 6


def test_inspect_rhythm_human(runner: CliRunner):
    result = runner.invoke(main, ["inspect", "N=8", "n=3", "a=5,7,2"])
    assert result.exit_code == 0
    assert "smooth" in result.output
    assert "yes" in result.output
