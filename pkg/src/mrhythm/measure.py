"""The product-of-gaps measure and the structural predicates built on it.

The measure of a rhythm is the product of its cyclic gaps. It ignores the
marker, is unchanged by translation, and never decreases under either step
map, so along any orbit it climbs until the orbit settles into a cycle.
"""

from collections import Counter
from math import prod
from typing import NamedTuple

from .core import (
    DifferenceVector,
    MarkedDifference,
    MarkedRhythm,
    MeasureValue,
    Rhythm,
    State,
    delta,
    difference,
)

# Content of a gap vector: gap value -> multiplicity.
Content = Counter


# --- Measures ---


def measure_rhythm(a: Rhythm) -> MeasureValue:
    """Product over i of (a_{i+1} - a_i mod N)."""
    e = a.entries
    N = a.params.N
    n = len(e)
    return prod((e[(i + 1) % n] - e[i]) % N for i in range(n))


def measure_marked_rhythm(A: MarkedRhythm) -> MeasureValue:
    return measure_rhythm(A.rhythm)


def measure_difference(d: DifferenceVector) -> MeasureValue:
    return prod(d.gaps)


def measure_marked_difference(D: MarkedDifference) -> MeasureValue:
    return prod(D.difference.gaps)


def measure_of(value: Rhythm | DifferenceVector | State) -> MeasureValue:
    """Measure of any of the four value types."""
    match value:
        case MarkedRhythm():
            return measure_marked_rhythm(value)
        case MarkedDifference():
            return measure_marked_difference(value)
        case Rhythm():
            return measure_rhythm(value)
        case DifferenceVector():
            return measure_difference(value)
    raise TypeError(f"No measure for {type(value).__name__}")


# --- Width and Content ---


def _gaps_of(value) -> tuple[int, ...]:
    match value:
        case DifferenceVector(gaps=gaps):
            return gaps
        case MarkedDifference():
            return value.difference.gaps
        case Rhythm():
            return difference(value).gaps
        case MarkedRhythm():
            return difference(value.rhythm).gaps
    raise TypeError(f"No gaps for {type(value).__name__}")


def width(value: DifferenceVector | MarkedDifference | Rhythm | MarkedRhythm) -> int:
    """Largest gap minus smallest gap (rhythms go through their difference)."""
    gaps = _gaps_of(value)
    return max(gaps) - min(gaps)


def content(value: MarkedDifference | DifferenceVector) -> Content:
    """Multiset of gap values."""
    return Counter(_gaps_of(value))


# --- Predicates ---


def is_smooth(a: Rhythm) -> bool:
    """A rhythm is smooth when its gaps differ by at most one."""
    return width(a) <= 1


def is_max_marked(D: MarkedDifference) -> bool:
    gaps = D.difference.gaps
    return gaps[D.marker] == max(gaps)


def is_quasi_smooth_marked(D: MarkedDifference) -> bool:
    """Width <= 1 and max-marked, i.e. periodic under the deformation map."""
    return width(D) <= 1 and is_max_marked(D)


def is_quasi_smooth_rhythm_marked(A: MarkedRhythm) -> bool:
    return is_quasi_smooth_marked(delta(A))


def is_quasi_smooth_rhythm(a: Rhythm) -> bool:
    """Some marker makes the rhythm quasi-smooth."""
    d = difference(a)
    return any(
        is_quasi_smooth_marked(MarkedDifference(k, d)) for k in range(a.params.n)
    )


def is_mu_invariant(x: State) -> bool:
    """The measure does not change over one step."""
    from .dynamics import advance

    return measure_of(advance(x)) == measure_of(x)


def is_mu_stable(x: State) -> bool:
    """The measure is constant along the whole forward orbit.

    Checked at every state of the orbit through one full cycle; by
    monotonicity this covers every iterate.
    """
    from .dynamics import orbit

    trace = orbit(x).measure_trace
    return all(m == trace[0] for m in trace)


# --- Floor/Ceil Product ---


class FloorCeilProduct(NamedTuple):
    lhs: int
    rhs: int
    equal: bool


def floor_ceil_product(a: int, b: int) -> FloorCeilProduct:
    """Compare a*b with floor((a+b)/2) * ceil((a+b)/2).

    The right side is never smaller, with equality iff |a - b| <= 1.
    """
    if a < 1 or b < 1:
        raise ValueError(f"Need positive integers, got ({a}, {b})")
    s = a + b
    lhs = a * b
    rhs = (s // 2) * (s - s // 2)
    return FloorCeilProduct(lhs, rhs, lhs == rhs)
