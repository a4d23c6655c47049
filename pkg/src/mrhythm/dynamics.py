"""Reformation and deformation maps, orbits, and rhythm smoothing.

The reformation step rewrites the marked entry of a rhythm as the discrete
average of its two cyclic neighbours and advances the marker. The
deformation step is the same move seen on gap vectors: the marked gap and the
next one are replaced by the floor/ceil halves of their sum.
"""

from dataclasses import dataclass
from enum import Enum

from .core import (
    DifferenceVector,
    MarkedDifference,
    MarkedRhythm,
    MeasureValue,
    Rhythm,
    SpaceParams,
    State,
    check_modulus,
    embed,
)
from .measure import is_smooth, measure_of


class OrbitCapExceededError(RuntimeError):
    """An orbit did not close within its step cap."""


# --- Discrete Average ---


def discrete_average(a: int, b: int, N: int) -> int:
    """a + floor((b - a mod N) / 2), taken mod N.

    The midpoint of the forward arc from a to b, rounded toward a.
    Commutes with translation: avg(a+1, b+1) = avg(a, b) + 1.
    """
    check_modulus(N)
    if not (0 <= a < N and 0 <= b < N):
        raise ValueError(f"Operands ({a}, {b}) must lie in Z_{N}")
    return (a + ((b - a) % N) // 2) % N


def reform_triple(triple: Rhythm) -> Rhythm:
    """Replace the middle entry of a 3-onset rhythm by the average of the outer two."""
    if triple.params.n != 3:
        raise ValueError(f"reform_triple needs a 3-onset rhythm, got n={triple.params.n}")
    a, _, c = triple.entries
    return Rhythm(triple.params, (a, discrete_average(a, c, triple.params.N), c))


# --- Step Maps ---


def ref_step(A: MarkedRhythm) -> MarkedRhythm:
    """One reformation step.

    Entry k becomes avg(a_{k-1}, a_{k+1}); all other entries are kept and the
    marker moves to k+1 (mod n).
    """
    rhythm = A.rhythm
    e = rhythm.entries
    N, n = rhythm.params.N, rhythm.params.n
    k = A.marker
    left = e[k - 1]
    right = e[(k + 1) % n]
    entries = e[:k] + (discrete_average(left, right, N),) + e[k + 1 :]
    return MarkedRhythm((k + 1) % n, Rhythm(rhythm.params, entries))


def def_step(D: MarkedDifference) -> MarkedDifference:
    """One deformation step.

    Gaps k and k+1 (mod n) become floor(s/2) and ceil(s/2) of their sum s;
    the marker moves to k+1 (mod n).
    """
    d = D.difference
    gaps = list(d.gaps)
    n = d.params.n
    k = D.marker
    j = (k + 1) % n
    total = gaps[k] + gaps[j]
    # Sum of two gaps is at most N - (n - 2) < N, so no reduction mod N happens.
    assert total < d.params.N, f"adjacent gap sum {total} reached N in {d.gaps}"
    half = total // 2
    gaps[k] = half
    gaps[j] = total - half
    return MarkedDifference(j, DifferenceVector(d.params, tuple(gaps)))


class System(Enum):
    """The two dynamical systems: reformation on marked rhythms, deformation on marked differences."""

    REF = "ref"
    DEF = "def"

    @classmethod
    def of(cls, state: State) -> "System":
        if isinstance(state, MarkedRhythm):
            return cls.REF
        if isinstance(state, MarkedDifference):
            return cls.DEF
        raise TypeError(f"{type(state).__name__} is not a state of either system")

    def step(self, state: State) -> State:
        # Resolved at call time.
        if self is System.REF:
            return ref_step(state)
        return def_step(state)


def advance(state: State) -> State:
    """Apply the step map of whichever system the state belongs to."""
    return System.of(state).step(state)


# --- Orbits ---


@dataclass
class OrbitReport:
    """Forward orbit of a state up to its first repetition.

    ``states`` ends with the first repeated state, so
    ``states[transient_length + period] == states[transient_length]``.
    """

    states: list[State]
    transient_length: int
    period: int
    measure_trace: list[MeasureValue]
    smooth_index: int | None = None  # marked-rhythm orbits only

    @property
    def cycle(self) -> list[State]:
        t = self.transient_length
        return self.states[t : t + self.period]

    @property
    def is_periodic_start(self) -> bool:
        return self.transient_length == 0


def default_orbit_cap(params: SpaceParams) -> int:
    """|mR_N^n| + 1: no orbit in either system can be longer."""
    return params.marked_rhythm_count + 1


def orbit(start: State, step=None, cap: int | None = None) -> OrbitReport:
    """Iterate ``step`` from ``start`` until a state repeats.

    Args:
        start: A marked rhythm or marked difference.
        step: The step map; defaults to the map of the state's system.
        cap: Maximum number of distinct states to record; defaults to
            ``default_orbit_cap``.

    Raises:
        ValueError: If cap < 1.
        OrbitCapExceededError: If no repetition occurs within the cap.
    """
    if step is None:
        step = System.of(start).step
    if cap is None:
        cap = default_orbit_cap(start.params)
    if cap < 1:
        raise ValueError(f"Orbit cap must be >= 1, got {cap}")

    first_seen: dict[State, int] = {}
    states: list[State] = []
    x = start
    while x not in first_seen:
        if len(states) >= cap:
            raise OrbitCapExceededError(f"Orbit did not close within {cap} states")
        first_seen[x] = len(states)
        states.append(x)
        x = step(x)

    transient = first_seen[x]
    period = len(states) - transient
    states.append(x)

    smooth_index = None
    if isinstance(start, MarkedRhythm):
        smooth_index = next(
            (i for i, s in enumerate(states) if is_smooth(s.rhythm)), None
        )

    return OrbitReport(
        states=states,
        transient_length=transient,
        period=period,
        measure_trace=[measure_of(s) for s in states],
        smooth_index=smooth_index,
    )


def period_of(start: State) -> int:
    """Least m >= 1 returning the orbit's first cyclic state to itself."""
    return orbit(start).period


def smoothing_orbit(a: Rhythm, marker: int = 0) -> OrbitReport:
    """Orbit of the rhythm marked at ``marker`` under the reformation map."""
    return orbit(embed(marker, a))


def smooth_rhythm(a: Rhythm, marker: int = 0) -> tuple[int, Rhythm]:
    """Smallest l >= 0 such that the l-th reformation of (marker, a) is smooth.

    Returns:
        (l, the smooth rhythm part reached after l steps)

    Raises:
        RuntimeError: If the orbit never reaches a smooth rhythm, which would
            contradict the width characterization of periodic states.
    """
    report = smoothing_orbit(a, marker)
    if report.smooth_index is None:
        raise RuntimeError(f"Orbit of {a.entries} never reached a smooth rhythm")
    return report.smooth_index, report.states[report.smooth_index].rhythm
