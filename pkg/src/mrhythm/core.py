"""Modular arithmetic, rhythm types, translations and the state text format.

A rhythm of length N with n onsets is an n-tuple of distinct beats in Z_N
listed in cyclic order, so that its cyclic gaps add up to exactly N. A marked
rhythm pairs a rhythm with a marker in Z_n. Gap vectors (differences) are the
translation-free shadow of rhythms.

All value types are frozen dataclasses. Their constructors do not validate;
use the ``make_*`` functions (or the parsers) to build checked values.
"""

import re
from dataclasses import dataclass
from math import comb

# Exact product of gaps (unbounded int).
MeasureValue = int


# --- Modular Arithmetic ---


def check_modulus(m: int) -> int:
    """Validate a modulus (m >= 3) and return it.

    Raises:
        ValueError: If m is not an integer >= 3.
    """
    if not isinstance(m, int) or m < 3:
        raise ValueError(f"Invalid modulus {m!r}: must be an integer >= 3")
    return m


def _check_operand(x: int, m: int) -> None:
    if not 0 <= x < m:
        raise ValueError(f"Operand {x} is not in Z_{m}")


def residue_mod(x: int, m: int) -> int:
    """Least nonnegative remainder of x modulo m."""
    return x % check_modulus(m)


def add_mod(a: int, b: int, m: int) -> int:
    """Addition in Z_m."""
    check_modulus(m)
    _check_operand(a, m)
    _check_operand(b, m)
    return (a + b) % m


def sub_mod(a: int, b: int, m: int) -> int:
    """Subtraction in Z_m."""
    check_modulus(m)
    _check_operand(a, m)
    _check_operand(b, m)
    return (a - b) % m


def interval_mod(a: int, b: int, m: int) -> list[int]:
    """Closed cyclic interval [a, a+1, ..., b] in Z_m.

    Only defined for distinct endpoints.

    Examples:
        interval_mod(6, 1, 8) -> [6, 7, 0, 1]
        interval_mod(3, 4, 8) -> [3, 4]

    Raises:
        ValueError: If a == b or either endpoint is outside Z_m.
    """
    check_modulus(m)
    _check_operand(a, m)
    _check_operand(b, m)
    if a == b:
        raise ValueError(f"Interval [{a},{b}]_{m} needs distinct endpoints")
    out = [a]
    x = a
    while x != b:
        x = (x + 1) % m
        out.append(x)
    return out


# --- Domain Types ---


@dataclass(frozen=True, slots=True)
class SpaceParams:
    """Beat count N and onset count n, with 3 <= n <= N."""

    N: int
    n: int

    def __post_init__(self) -> None:
        if not isinstance(self.N, int) or not isinstance(self.n, int):
            raise ValueError(f"N and n must be integers, got N={self.N!r} n={self.n!r}")
        if not 3 <= self.n <= self.N:
            raise ValueError(
                f"Invalid space N={self.N} n={self.n}: need 3 <= n <= N"
            )

    @property
    def composition_count(self) -> int:
        """|D_N^n| = C(N-1, n-1)."""
        return comb(self.N - 1, self.n - 1)

    @property
    def marked_difference_count(self) -> int:
        return self.n * self.composition_count

    @property
    def rhythm_count(self) -> int:
        return self.N * self.composition_count

    @property
    def marked_rhythm_count(self) -> int:
        return self.n * self.N * self.composition_count


@dataclass(frozen=True, slots=True)
class Rhythm:
    """n distinct beats of Z_N in single-winding cyclic order."""

    params: SpaceParams
    entries: tuple[int, ...]

    @property
    def n(self) -> int:
        return self.params.n

    @property
    def N(self) -> int:
        return self.params.N


@dataclass(frozen=True, slots=True)
class MarkedRhythm:
    """A rhythm together with the index of the entry the next step rewrites."""

    marker: int
    rhythm: Rhythm

    @property
    def params(self) -> SpaceParams:
        return self.rhythm.params


@dataclass(frozen=True, slots=True)
class DifferenceVector:
    """Positive cyclic gaps summing to N."""

    params: SpaceParams
    gaps: tuple[int, ...]

    @property
    def n(self) -> int:
        return self.params.n

    @property
    def N(self) -> int:
        return self.params.N


@dataclass(frozen=True, slots=True)
class MarkedDifference:
    """A gap vector together with a marker."""

    marker: int
    difference: DifferenceVector

    @property
    def params(self) -> SpaceParams:
        return self.difference.params

    @property
    def gaps(self) -> tuple[int, ...]:
        return self.difference.gaps


# States of the two dynamical systems.
State = MarkedRhythm | MarkedDifference


# --- Constructors ---


def _check_marker(k: int, n: int) -> None:
    if not isinstance(k, int) or not 0 <= k < n:
        raise ValueError(f"Marker {k!r} is not in Z_{n}")


def make_rhythm(params: SpaceParams, entries) -> Rhythm:
    """Build a validated rhythm.

    Raises:
        ValueError: On wrong length, entries outside Z_N, duplicate entries,
            or a cyclic gap sum other than N (entries out of cyclic order).
    """
    entries = tuple(entries)
    N, n = params.N, params.n
    if len(entries) != n:
        raise ValueError(f"Rhythm needs {n} entries, got {len(entries)}")
    for x in entries:
        if not isinstance(x, int) or not 0 <= x < N:
            raise ValueError(f"Entry {x!r} is not in Z_{N}")
    if len(set(entries)) != n:
        raise ValueError(f"Rhythm entries must be distinct: {entries}")
    gap_sum = sum((entries[i] - entries[i - 1]) % N for i in range(n))
    if gap_sum != N:
        raise ValueError(
            f"Rhythm {entries} is not in cyclic order: gap sum {gap_sum} != {N}"
        )
    return Rhythm(params, entries)


def make_difference(params: SpaceParams, gaps) -> DifferenceVector:
    """Build a validated gap vector.

    Raises:
        ValueError: On wrong length, a gap < 1, or a gap sum other than N.
    """
    gaps = tuple(gaps)
    if len(gaps) != params.n:
        raise ValueError(f"Difference needs {params.n} gaps, got {len(gaps)}")
    for g in gaps:
        if not isinstance(g, int) or g < 1:
            raise ValueError(f"Gap {g!r} must be a positive integer")
    if sum(gaps) != params.N:
        raise ValueError(f"Gaps {gaps} sum to {sum(gaps)}, expected {params.N}")
    return DifferenceVector(params, gaps)


def make_marked_rhythm(params: SpaceParams, marker: int, entries) -> MarkedRhythm:
    """Build a validated marked rhythm."""
    _check_marker(marker, params.n)
    return MarkedRhythm(marker, make_rhythm(params, entries))


def make_marked_difference(params: SpaceParams, marker: int, gaps) -> MarkedDifference:
    """Build a validated marked difference."""
    _check_marker(marker, params.n)
    return MarkedDifference(marker, make_difference(params, gaps))


# --- Differences and Translations ---


def difference(a: Rhythm) -> DifferenceVector:
    """Cyclic gaps d_i = a_i - a_{i-1} (mod N); d_0 wraps to a_{n-1}."""
    e = a.entries
    N = a.params.N
    return DifferenceVector(a.params, tuple((e[i] - e[i - 1]) % N for i in range(len(e))))


def delta(A: MarkedRhythm) -> MarkedDifference:
    """Marked difference of a marked rhythm; the marker is kept."""
    return MarkedDifference(A.marker, difference(A.rhythm))


def translate(a: Rhythm) -> Rhythm:
    """Shift every beat forward by one (mod N)."""
    N = a.params.N
    return Rhythm(a.params, tuple((x + 1) % N for x in a.entries))


def translate_marked(A: MarkedRhythm) -> MarkedRhythm:
    """Translate the rhythm part, keeping the marker."""
    return MarkedRhythm(A.marker, translate(A.rhythm))


def transpose_adjacent(d: DifferenceVector, k: int) -> DifferenceVector:
    """Swap gaps k and k+1 (mod n)."""
    n = d.params.n
    _check_marker(k, n)
    j = (k + 1) % n
    gaps = list(d.gaps)
    gaps[k], gaps[j] = gaps[j], gaps[k]
    return DifferenceVector(d.params, tuple(gaps))


def embed(k: int, a: Rhythm) -> MarkedRhythm:
    """Mark entry k of a rhythm."""
    _check_marker(k, a.params.n)
    return MarkedRhythm(k, a)


def rhythm_part(A: MarkedRhythm) -> Rhythm:
    """Forget the marker."""
    return A.rhythm


def rhythm_from_anchor(params: SpaceParams, anchor: int, d: DifferenceVector) -> Rhythm:
    """Rebuild the rhythm that starts at ``anchor`` and has gaps ``d``.

    Inverse of ``difference`` once the first beat is fixed:
    a_0 = anchor and a_i = a_{i-1} + d_i (mod N) for i >= 1.
    """
    if d.params != params:
        raise ValueError(f"Difference belongs to {d.params}, expected {params}")
    N = params.N
    if not 0 <= anchor < N:
        raise ValueError(f"Anchor {anchor} is not in Z_{N}")
    entries = [anchor]
    for g in d.gaps[1:]:
        entries.append((entries[-1] + g) % N)
    return Rhythm(params, tuple(entries))


# --- Text Format ---

# N=<int> n=<int> [k=<int>] [a=<int>,...|d=<int>,...]
_STATE_RE = re.compile(
    r"N=(?P<N>\d+)[ \t]+n=(?P<n>\d+)"
    r"(?:[ \t]+k=(?P<k>\d+))?"
    r"(?:[ \t]+(?P<kind>[ad])=(?P<values>\d+(?:,\d+)*))?"
)


def _match(text: str) -> re.Match:
    match = _STATE_RE.fullmatch(text.strip())
    if match is None:
        raise ValueError(
            f"Cannot parse {text!r}: expected 'N=<int> n=<int> [k=<int>] "
            "[a=<int>,...|d=<int>,...]'"
        )
    return match


def parse_params(text: str) -> SpaceParams:
    """Parse ``N=.. n=..`` (nothing else allowed)."""
    match = _match(text)
    if match["k"] is not None or match["kind"] is not None:
        raise ValueError(f"Expected only 'N=<int> n=<int>', got {text!r}")
    return SpaceParams(int(match["N"]), int(match["n"]))


def parse_state(text: str) -> Rhythm | MarkedRhythm | DifferenceVector | MarkedDifference:
    """Parse any of the four value types from the single-line text format.

    ``a=`` gives a rhythm, ``d=`` a gap vector; a ``k=`` field makes it marked.

    Raises:
        ValueError: On syntax errors, trailing garbage, or invalid values.
    """
    match = _match(text)
    if match["kind"] is None:
        raise ValueError(f"Missing 'a=' or 'd=' field in {text!r}")
    params = SpaceParams(int(match["N"]), int(match["n"]))
    values = tuple(int(v) for v in match["values"].split(","))
    marker = int(match["k"]) if match["k"] is not None else None

    if match["kind"] == "a":
        if marker is None:
            return make_rhythm(params, values)
        return make_marked_rhythm(params, marker, values)
    if marker is None:
        return make_difference(params, values)
    return make_marked_difference(params, marker, values)


def _parse_as(text: str, kind: type, label: str):
    value = parse_state(text)
    if not isinstance(value, kind):
        raise ValueError(f"Expected a {label}, got {text!r}")
    return value


def parse_rhythm(text: str) -> Rhythm:
    return _parse_as(text, Rhythm, "rhythm 'N=.. n=.. a=..'")


def parse_marked_rhythm(text: str) -> MarkedRhythm:
    return _parse_as(text, MarkedRhythm, "marked rhythm 'N=.. n=.. k=.. a=..'")


def parse_marked_difference(text: str) -> MarkedDifference:
    return _parse_as(text, MarkedDifference, "marked difference 'N=.. n=.. k=.. d=..'")


def format_params(params: SpaceParams) -> str:
    return f"N={params.N} n={params.n}"


def _join(values: tuple[int, ...]) -> str:
    return ",".join(str(v) for v in values)


def format_state(value: Rhythm | MarkedRhythm | DifferenceVector | MarkedDifference) -> str:
    """Render a value in the text format accepted by ``parse_state``."""
    match value:
        case Rhythm(params=params, entries=entries):
            return f"{format_params(params)} a={_join(entries)}"
        case MarkedRhythm(marker=k, rhythm=rhythm):
            return f"{format_params(rhythm.params)} k={k} a={_join(rhythm.entries)}"
        case DifferenceVector(params=params, gaps=gaps):
            return f"{format_params(params)} d={_join(gaps)}"
        case MarkedDifference(marker=k, difference=d):
            return f"{format_params(d.params)} k={k} d={_join(d.gaps)}"
    raise TypeError(f"Cannot format {type(value).__name__}")
