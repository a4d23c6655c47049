"""Shared helpers for marked-rhythm-cli tests.

Tests build states inline from (N, n, marker, values) rather than parsing
strings, so each test shows the exact state it exercises.
"""

from __future__ import annotations

from mrhythm.core import (
    MarkedDifference,
    MarkedRhythm,
    Rhythm,
    SpaceParams,
    make_marked_difference,
    make_marked_rhythm,
    make_rhythm,
)


def make_rhythm_of(entries: tuple[int, ...], *, N: int = 8) -> Rhythm:
    """Validated rhythm with n taken from the entry count."""
    return make_rhythm(SpaceParams(N, len(entries)), entries)


def make_state(marker: int, entries: tuple[int, ...], *, N: int = 8) -> MarkedRhythm:
    """Validated marked rhythm, e.g. make_state(0, (0, 1, 2)) in mR_8^3."""
    return make_marked_rhythm(SpaceParams(N, len(entries)), marker, entries)


def make_gaps(marker: int, gaps: tuple[int, ...], *, N: int | None = None) -> MarkedDifference:
    """Validated marked difference; N defaults to the gap sum."""
    N = sum(gaps) if N is None else N
    return make_marked_difference(SpaceParams(N, len(gaps)), marker, gaps)
