"""Property tests sampling spaces too large to walk exhaustively."""

from __future__ import annotations

from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.stateful import RuleBasedStateMachine, initialize, invariant, rule

from mrhythm.core import (
    MarkedDifference,
    MarkedRhythm,
    SpaceParams,
    delta,
    format_state,
    make_difference,
    parse_state,
    rhythm_from_anchor,
    translate_marked,
)
from mrhythm.dynamics import def_step, orbit, ref_step, smooth_rhythm, smoothing_orbit
from mrhythm.measure import (
    content,
    is_mu_stable,
    is_quasi_smooth_marked,
    is_smooth,
    measure_of,
    width,
)


@st.composite
def marked_rhythms(draw, max_N: int = 40, max_n: int = 8) -> MarkedRhythm:
    N = draw(st.integers(min_value=3, max_value=max_N))
    n = draw(st.integers(min_value=3, max_value=min(N, max_n)))
    params = SpaceParams(N, n)
    cuts = sorted(draw(st.permutations(range(1, N)))[: n - 1])
    bounds = [0, *cuts, N]
    d = make_difference(params, [bounds[i + 1] - bounds[i] for i in range(n)])
    anchor = draw(st.integers(0, N - 1))
    marker = draw(st.integers(0, n - 1))
    return MarkedRhythm(marker, rhythm_from_anchor(params, anchor, d))


@st.composite
def marked_differences(draw, **kwargs) -> MarkedDifference:
    return delta(draw(marked_rhythms(**kwargs)))


# ---------------------------------------------------------------------------
# One-step laws
# ---------------------------------------------------------------------------


@given(marked_rhythms())
def test_commutation(A):
    assert delta(ref_step(A)) == def_step(delta(A))


@given(marked_rhythms())
def test_translation_equivariance(A):
    assert ref_step(translate_marked(A)) == translate_marked(ref_step(A))


@given(marked_rhythms())
def test_measure_never_decreases(A):
    assert measure_of(ref_step(A)) >= measure_of(A)
    assert measure_of(translate_marked(A)) == measure_of(A)


@given(marked_differences())
def test_def_step_stays_in_space(D):
    E = def_step(D)
    assert sum(E.gaps) == D.params.N
    assert min(E.gaps) >= 1
    assert E.marker == (D.marker + 1) % D.params.n


@given(marked_rhythms())
def test_text_round_trip(A):
    assert parse_state(format_state(A)) == A
    assert parse_state(format_state(delta(A))) == delta(A)


# ---------------------------------------------------------------------------
# Orbit laws
# ---------------------------------------------------------------------------


@settings(max_examples=50)
@given(marked_differences())
def test_quasi_smooth_states_return_after_n_n_minus_1_steps(D):
    n = D.params.n
    x = D
    for _ in range(n * (n - 1)):
        x = def_step(x)
    if is_quasi_smooth_marked(D):
        assert x == D


@settings(max_examples=50)
@given(marked_differences(max_N=30))
def test_periodic_iff_quasi_smooth(D):
    assert orbit(D).is_periodic_start == is_quasi_smooth_marked(D)


@settings(max_examples=50)
@given(marked_differences(max_N=30))
def test_stable_states_have_width_at_most_one(D):
    if is_mu_stable(D):
        assert width(D) <= 1
        assert all(content(s) == content(D) for s in orbit(D).states)


@settings(max_examples=50)
@given(marked_rhythms(max_N=24, max_n=6))
def test_smoothing_stops_at_first_smooth_state(A):
    steps, reached = smooth_rhythm(A.rhythm, A.marker)
    assert is_smooth(reached)
    states = smoothing_orbit(A.rhythm, A.marker).states
    assert not any(is_smooth(s.rhythm) for s in states[:steps])


# ---------------------------------------------------------------------------
# Lockstep machine: a marked rhythm and its marked difference
# ---------------------------------------------------------------------------


class LockstepMachine(RuleBasedStateMachine):
    """Steps a marked rhythm and its shadow difference side by side."""

    @initialize(A=marked_rhythms(max_N=24))
    def start(self, A):
        self.A = A
        self.D = delta(A)
        self.last_measure = measure_of(A)

    @rule()
    def step_both(self):
        self.A = ref_step(self.A)
        self.D = def_step(self.D)

    @rule()
    def translate_upstairs(self):
        self.A = translate_marked(self.A)

    @invariant()
    def shadows_agree(self):
        assert delta(self.A) == self.D

    @invariant()
    def measure_climbs(self):
        m = measure_of(self.A)
        assert m == measure_of(self.D)
        assert m >= self.last_measure
        self.last_measure = m


LockstepMachine.TestCase.settings = settings(max_examples=30, stateful_step_count=40)
TestLockstep = LockstepMachine.TestCase
