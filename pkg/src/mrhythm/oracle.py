"""Exhaustive enumeration of state spaces and brute-force claim checking.

Every claim is checked on every state of its space for one (N, n). Periodic
sets are found purely by walking the functional graph of the step map and are
only compared against the width/max-marked characterization inside the
report, never used to compute it.
"""

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from itertools import combinations

from . import dynamics
from .config import COUNTEREXAMPLE_LIMIT, DEFAULT_BUDGET, FLOOR_CEIL_GRID
from .core import (
    DifferenceVector,
    MarkedDifference,
    MarkedRhythm,
    Rhythm,
    SpaceParams,
    State,
    delta,
    format_params,
    format_state,
    make_marked_difference,
    make_marked_rhythm,
    rhythm_from_anchor,
    translate,
    translate_marked,
    transpose_adjacent,
)
from .dynamics import System, orbit
from .measure import (
    content,
    floor_ceil_product,
    is_max_marked,
    is_mu_stable,
    is_quasi_smooth_marked,
    is_quasi_smooth_rhythm,
    is_quasi_smooth_rhythm_marked,
    is_smooth,
    measure_of,
    width,
)


class BudgetExceededError(RuntimeError):
    """A state space is larger than the configured budget."""


# --- Enumeration ---


def check_budget(size: int, budget: int | None, label: str) -> None:
    if budget is not None and size > budget:
        raise BudgetExceededError(
            f"{label} has {size} states, over the budget of {budget} (raise --budget)"
        )


def enumerate_compositions(params: SpaceParams) -> list[DifferenceVector]:
    """All gap vectors of D_N^n in lexicographic order.

    Each choice of n-1 cut points in 1..N-1 gives one composition; cut points
    in lexicographic order give gap vectors in lexicographic order.
    """
    N = params.N
    out = []
    for cuts in combinations(range(1, N), params.n - 1):
        bounds = (0, *cuts, N)
        gaps = tuple(bounds[i + 1] - bounds[i] for i in range(params.n))
        out.append(DifferenceVector(params, gaps))
    return out


def enumerate_rhythms(params: SpaceParams, budget: int | None = DEFAULT_BUDGET) -> list[Rhythm]:
    """All rhythms, as anchor x composition."""
    check_budget(params.rhythm_count, budget, f"R for {format_params(params)}")
    return [
        rhythm_from_anchor(params, anchor, d)
        for d in enumerate_compositions(params)
        for anchor in range(params.N)
    ]


def enumerate_marked_differences(
    params: SpaceParams, budget: int | None = DEFAULT_BUDGET
) -> list[MarkedDifference]:
    check_budget(params.marked_difference_count, budget, f"mD for {format_params(params)}")
    return [
        MarkedDifference(k, d)
        for d in enumerate_compositions(params)
        for k in range(params.n)
    ]


def enumerate_marked_rhythms(
    params: SpaceParams, budget: int | None = DEFAULT_BUDGET
) -> list[MarkedRhythm]:
    check_budget(params.marked_rhythm_count, budget, f"mR for {format_params(params)}")
    return [
        MarkedRhythm(k, a)
        for a in enumerate_rhythms(params, budget=None)
        for k in range(params.n)
    ]


def enumerate_states(params: SpaceParams, system: System, budget: int | None = DEFAULT_BUDGET) -> list[State]:
    if system is System.REF:
        return enumerate_marked_rhythms(params, budget)
    return enumerate_marked_differences(params, budget)


# --- Periodic Points ---


def find_cycles(states, step) -> dict[State, int]:
    """Map every periodic state to its minimal period.

    Walks each state's forward orbit until it meets either a state already
    classified or a state on the current path; the latter closes a new cycle.
    """
    periods: dict[State, int] = {}
    done: set[State] = set()
    for start in states:
        if start in done:
            continue
        position: dict[State, int] = {}
        path: list[State] = []
        x = start
        while x not in done and x not in position:
            position[x] = len(path)
            path.append(x)
            x = step(x)
        if x in position:
            cycle = path[position[x] :]
            for c in cycle:
                periods[c] = len(cycle)
        done.update(path)
    return periods


def periodic_states(params: SpaceParams, system: System, budget: int | None = DEFAULT_BUDGET) -> dict[State, int]:
    """Periodic states of a system with their minimal periods."""
    return find_cycles(enumerate_states(params, system, budget), system.step)


def brute_force_periodic_set(
    params: SpaceParams, system: System, budget: int | None = DEFAULT_BUDGET
) -> frozenset[State]:
    """Per(system), found by orbit analysis alone."""
    return frozenset(periodic_states(params, system, budget))


# --- Report Types ---


@dataclass
class Counterexample:
    """A state violating a claim, with both sides of the broken relation."""

    state: str
    lhs: str
    rhs: str


@dataclass
class ClaimResult:
    """Outcome of checking one claim over its whole space."""

    claim_id: str
    statement: str
    space: str
    states_checked: int
    counterexamples: list[Counterexample] = field(default_factory=list)
    counterexample_count: int = 0
    elapsed_seconds: float = 0.0
    skip_reason: str | None = None
    observations: dict = field(default_factory=dict)

    @property
    def skipped(self) -> bool:
        return self.skip_reason is not None

    @property
    def passed(self) -> bool:
        return not self.skipped and self.counterexample_count == 0


@dataclass
class VerificationReport:
    """All claim results for one (N, n), in fixed claim order."""

    params: SpaceParams
    results: list[ClaimResult]

    @property
    def all_passed(self) -> bool:
        return all(r.passed for r in self.results)

    @property
    def failed(self) -> list[ClaimResult]:
        return [r for r in self.results if not r.skipped and not r.passed]

    @property
    def skipped(self) -> list[ClaimResult]:
        return [r for r in self.results if r.skipped]

    @property
    def observations(self) -> dict:
        merged: dict = {}
        for r in self.results:
            merged.update(r.observations)
        return merged


class _Counterexamples:
    """Keeps the first few violations and counts all of them."""

    def __init__(self, limit: int = COUNTEREXAMPLE_LIMIT):
        self.limit = limit
        self.items: list[Counterexample] = []
        self.total = 0

    def add(self, state, lhs, rhs) -> None:
        self.total += 1
        if len(self.items) < self.limit:
            self.items.append(Counterexample(_show(state), _show(lhs), _show(rhs)))


def _show(value) -> str:
    if isinstance(value, (Rhythm, MarkedRhythm, DifferenceVector, MarkedDifference)):
        return format_state(value)
    return str(value)


# --- Shared Per-(N, n) Data ---


class _Universe:
    """Lazily built state spaces, step images and periodic sets for one (N, n)."""

    def __init__(self, params: SpaceParams):
        self.params = params

    @cached_property
    def marked_rhythms(self) -> list[MarkedRhythm]:
        return enumerate_marked_rhythms(self.params, budget=None)

    @cached_property
    def marked_differences(self) -> list[MarkedDifference]:
        return enumerate_marked_differences(self.params, budget=None)

    @cached_property
    def rhythms(self) -> list[Rhythm]:
        return enumerate_rhythms(self.params, budget=None)

    @cached_property
    def ref_image(self) -> dict[MarkedRhythm, MarkedRhythm]:
        return {A: dynamics.ref_step(A) for A in self.marked_rhythms}

    @cached_property
    def def_image(self) -> dict[MarkedDifference, MarkedDifference]:
        return {D: dynamics.def_step(D) for D in self.marked_differences}

    @cached_property
    def ref_periods(self) -> dict[MarkedRhythm, int]:
        return find_cycles(self.marked_rhythms, self.ref_image.__getitem__)

    @cached_property
    def def_periods(self) -> dict[MarkedDifference, int]:
        return find_cycles(self.marked_differences, self.def_image.__getitem__)

    @cached_property
    def def_stable(self) -> dict[MarkedDifference, bool]:
        return {D: is_mu_stable(D) for D in self.marked_differences}


# --- Claims ---


@dataclass(frozen=True)
class Claim:
    claim_id: str
    statement: str
    space: str  # space whose every state is checked
    gate: str | None  # space whose size is compared with the budget
    check: object


_CLAIMS: dict[str, Claim] = {}


def _claim(claim_id: str, statement: str, space: str, gate: str | None = "same"):
    def register(fn):
        _CLAIMS[claim_id] = Claim(
            claim_id, statement, space, space if gate == "same" else gate, fn
        )
        return fn

    return register


def claim_ids() -> list[str]:
    """All claim ids in report order."""
    return list(_CLAIMS)


def space_size(params: SpaceParams, space: str) -> int:
    N = params.N
    sizes = {
        "Z_N": N,
        "Z_N^2": N * N,
        "R_N^3": SpaceParams(N, 3).rhythm_count,
        "R": params.rhythm_count,
        "mR": params.marked_rhythm_count,
        "mD": params.marked_difference_count,
        "mR+mD": params.marked_rhythm_count + params.marked_difference_count,
        "grid": FLOOR_CEIL_GRID * FLOOR_CEIL_GRID,
    }
    return sizes[space]


@_claim(
    "average-compatibility",
    "avg(a+1, b+1) == avg(a, b) + 1 for all a, b in Z_N",
    "Z_N^2",
)
def _check_average_compatibility(u: _Universe, found: _Counterexamples) -> dict:
    N = u.params.N
    avg = dynamics.discrete_average
    for a in range(N):
        for b in range(N):
            lhs = avg((a + 1) % N, (b + 1) % N, N)
            rhs = (avg(a, b, N) + 1) % N
            if lhs != rhs:
                found.add((a, b), lhs, rhs)
    return {}


@_claim(
    "floor-ceil-identity",
    "floor(x/2) + ceil(x/2) == x (mod N) for all x in Z_N",
    "Z_N",
)
def _check_floor_ceil_identity(u: _Universe, found: _Counterexamples) -> dict:
    N = u.params.N
    for x in range(N):
        lhs = (x // 2 + -(-x // 2)) % N
        if lhs != x:
            found.add(x, lhs, x)
    return {}


@_claim(
    "triple-equivariance",
    "reform_triple(translate(t)) == translate(reform_triple(t)) for every 3-onset rhythm",
    "R_N^3",
)
def _check_triple_equivariance(u: _Universe, found: _Counterexamples) -> dict:
    for t in enumerate_rhythms(SpaceParams(u.params.N, 3), budget=None):
        lhs = dynamics.reform_triple(translate(t))
        rhs = translate(dynamics.reform_triple(t))
        if lhs != rhs:
            found.add(t, lhs, rhs)
    return {}


@_claim(
    "translation-equivariance",
    "ref_step(translate(A)) == translate(ref_step(A)) for every marked rhythm",
    "mR",
)
def _check_translation_equivariance(u: _Universe, found: _Counterexamples) -> dict:
    for A in u.marked_rhythms:
        lhs = dynamics.ref_step(translate_marked(A))
        rhs = translate_marked(u.ref_image[A])
        if lhs != rhs:
            found.add(A, lhs, rhs)
    return {}


@_claim(
    "commutation",
    "delta(ref_step(A)) == def_step(delta(A)) for every marked rhythm",
    "mR",
)
def _check_commutation(u: _Universe, found: _Counterexamples) -> dict:
    for A in u.marked_rhythms:
        lhs = delta(u.ref_image[A])
        rhs = dynamics.def_step(delta(A))
        if lhs != rhs:
            found.add(A, lhs, rhs)
    return {}


@_claim(
    "closure-ref",
    "ref_step maps every marked rhythm to a valid marked rhythm",
    "mR",
)
def _check_closure_ref(u: _Universe, found: _Counterexamples) -> dict:
    for A, B in u.ref_image.items():
        try:
            make_marked_rhythm(u.params, B.marker, B.rhythm.entries)
        except ValueError as exc:
            found.add(A, B, exc)
    return {}


@_claim(
    "closure-def",
    "def_step maps every marked difference to a valid marked difference",
    "mD",
)
def _check_closure_def(u: _Universe, found: _Counterexamples) -> dict:
    for D, E in u.def_image.items():
        try:
            make_marked_difference(u.params, E.marker, E.gaps)
        except ValueError as exc:
            found.add(D, E, exc)
    return {}


@_claim(
    "measure-invariance",
    "measure(translate(A)) == measure(A) for every marked rhythm",
    "mR",
)
def _check_measure_invariance(u: _Universe, found: _Counterexamples) -> dict:
    for A in u.marked_rhythms:
        lhs = measure_of(translate_marked(A))
        rhs = measure_of(A)
        if lhs != rhs:
            found.add(A, lhs, rhs)
    return {}


@_claim(
    "measure-descent",
    "measure(delta(A)) == measure(A) for every marked rhythm",
    "mR",
)
def _check_measure_descent(u: _Universe, found: _Counterexamples) -> dict:
    for A in u.marked_rhythms:
        lhs = measure_of(delta(A))
        rhs = measure_of(A)
        if lhs != rhs:
            found.add(A, lhs, rhs)
    return {}


@_claim(
    "monotonicity-ref",
    "measure(ref_step(A)) >= measure(A) for every marked rhythm",
    "mR",
)
def _check_monotonicity_ref(u: _Universe, found: _Counterexamples) -> dict:
    for A, B in u.ref_image.items():
        after, before = measure_of(B), measure_of(A)
        if after < before:
            found.add(A, after, before)
    return {}


@_claim(
    "monotonicity-def",
    "measure(def_step(D)) >= measure(D), with equality iff |d_k - d_k+1| <= 1",
    "mD",
)
def _check_monotonicity_def(u: _Universe, found: _Counterexamples) -> dict:
    n = u.params.n
    for D, E in u.def_image.items():
        after, before = measure_of(E), measure_of(D)
        k = D.marker
        close = abs(D.gaps[k] - D.gaps[(k + 1) % n]) <= 1
        if after < before:
            found.add(D, after, before)
        elif (after == before) != close:
            found.add(D, f"equal={after == before}", f"adjacent_close={close}")
    return {}


@_claim(
    "monotone-descent",
    "measure grows under ref_step at A iff it grows under def_step at delta(A)",
    "mR",
)
def _check_monotone_descent(u: _Universe, found: _Counterexamples) -> dict:
    for A, B in u.ref_image.items():
        D = delta(A)
        upstairs = measure_of(B) >= measure_of(A)
        downstairs = measure_of(u.def_image[D]) >= measure_of(D)
        if upstairs != downstairs:
            found.add(A, upstairs, downstairs)
    return {}


@_claim(
    "floor-ceil-product",
    "a*b <= floor((a+b)/2)*ceil((a+b)/2), equality iff |a-b| <= 1, on the grid",
    "grid",
    gate=None,
)
def _check_floor_ceil_product(u: _Universe, found: _Counterexamples) -> dict:
    for pair, lhs, rhs in floor_ceil_grid_violations(FLOOR_CEIL_GRID):
        found.add(pair, lhs, rhs)
    return {}


@lru_cache(maxsize=4)
def floor_ceil_grid_violations(size: int) -> tuple[tuple[tuple[int, int], int, int], ...]:
    """Grid points 1 <= a, b <= size where the floor/ceil product law fails.

    The grid does not depend on (N, n), so a sweep walks it once.
    """
    bad = []
    for a in range(1, size + 1):
        for b in range(1, size + 1):
            lhs, rhs, equal = floor_ceil_product(a, b)
            if rhs < lhs or equal != (abs(a - b) <= 1):
                bad.append(((a, b), lhs, rhs))
    return tuple(bad)


@_claim(
    "periodic-invariance",
    "every periodic marked rhythm keeps its measure over one step",
    "mR",
)
def _check_periodic_invariance(u: _Universe, found: _Counterexamples) -> dict:
    for A in u.marked_rhythms:
        if A in u.ref_periods:
            after, before = measure_of(u.ref_image[A]), measure_of(A)
            if after != before:
                found.add(A, after, before)
    return {}


@_claim(
    "periodic-stable",
    "every periodic state of either system is measure-stable",
    "mR+mD",
    gate="mR",
)
def _check_periodic_stable(u: _Universe, found: _Counterexamples) -> dict:
    for D in u.marked_differences:
        if D in u.def_periods and not u.def_stable[D]:
            found.add(D, "periodic", "not stable")
    for A in u.marked_rhythms:
        # A periodic orbit is its own cycle, so the cycle's measures suffice.
        if A in u.ref_periods:
            x = A
            for _ in range(u.ref_periods[A]):
                if measure_of(u.ref_image[x]) != measure_of(x):
                    found.add(A, "periodic", "not stable")
                    break
                x = u.ref_image[x]
    return {}


@_claim(
    "quotient-periodicity",
    "A is periodic under ref_step iff delta(A) is periodic under def_step",
    "mR",
)
def _check_quotient_periodicity(u: _Universe, found: _Counterexamples) -> dict:
    for A in u.marked_rhythms:
        upstairs = A in u.ref_periods
        downstairs = delta(A) in u.def_periods
        if upstairs != downstairs:
            found.add(A, upstairs, downstairs)
    return {
        "periodic_marked_rhythms": len(u.ref_periods),
        "ref_periods": sorted(set(u.ref_periods.values())),
    }


@_claim(
    "period-lift",
    "the ref_step period of A divides N times the def_step period of delta(A)",
    "mR",
)
def _check_period_lift(u: _Universe, found: _Counterexamples) -> dict:
    N = u.params.N
    for A in u.marked_rhythms:
        period = u.ref_periods.get(A)
        if period is None:
            continue
        lower = u.def_periods.get(delta(A))
        if lower is None or (N * lower) % period != 0:
            found.add(A, period, f"{N} x {lower}")
    return {}


@_claim(
    "invariant-step-cases",
    "a measure-invariant step either keeps the gaps (d_k+1 = d_k + 1) or swaps gaps k, k+1",
    "mD",
)
def _check_invariant_step_cases(u: _Universe, found: _Counterexamples) -> dict:
    n = u.params.n
    for D, E in u.def_image.items():
        if measure_of(E) != measure_of(D):
            continue
        k = D.marker
        j = (k + 1) % n
        dk, dj = D.gaps[k], D.gaps[j]
        if dj == dk + 1:
            expected = MarkedDifference(j, D.difference)
        elif dj in (dk, dk - 1):
            expected = MarkedDifference(j, transpose_adjacent(D.difference, k))
        else:
            found.add(D, f"invariant with gaps {dk},{dj}", "|d_k - d_k+1| <= 1")
            continue
        if E != expected:
            found.add(D, E, expected)
    return {}


@_claim(
    "stable-content",
    "the content is constant along the orbit of every stable marked difference",
    "mD",
)
def _check_stable_content(u: _Universe, found: _Counterexamples) -> dict:
    for D in u.marked_differences:
        if not u.def_stable[D]:
            continue
        start = content(D)
        for s in orbit(D).states:
            if content(s) != start:
                found.add(D, s, "content changed")
                break
    return {}


@_claim(
    "stable-width",
    "every stable marked difference has width <= 1",
    "mD",
)
def _check_stable_width(u: _Universe, found: _Counterexamples) -> dict:
    for D in u.marked_differences:
        if u.def_stable[D] and width(D) > 1:
            found.add(D, width(D), 1)
    return {}


@_claim(
    "max-marked-persists",
    "width <= 1 and max-marked implies every iterate is max-marked",
    "mD",
)
def _check_max_marked_persists(u: _Universe, found: _Counterexamples) -> dict:
    for D in u.marked_differences:
        if width(D) <= 1 and is_max_marked(D):
            for s in orbit(D).states:
                if not is_max_marked(s):
                    found.add(D, s, "not max-marked")
                    break
    return {}


@_claim(
    "unmarked-not-periodic",
    "width <= 1 and not max-marked implies not periodic",
    "mD",
)
def _check_unmarked_not_periodic(u: _Universe, found: _Counterexamples) -> dict:
    for D in u.marked_differences:
        if width(D) <= 1 and not is_max_marked(D) and D in u.def_periods:
            found.add(D, "periodic", "not max-marked")
    return {}


@_claim(
    "periodic-characterization",
    "D is periodic under def_step iff width(D) <= 1 and D is max-marked",
    "mD",
)
def _check_periodic_characterization(u: _Universe, found: _Counterexamples) -> dict:
    for D in u.marked_differences:
        brute = D in u.def_periods
        predicted = is_quasi_smooth_marked(D)
        if brute != predicted:
            found.add(D, f"periodic={brute}", f"quasi_smooth={predicted}")
    return {"periodic_marked_differences": len(u.def_periods)}


@_claim(
    "period-bound",
    "def_step applied n(n-1) times returns every periodic marked difference",
    "mD",
)
def _check_period_bound(u: _Universe, found: _Counterexamples) -> dict:
    n = u.params.n
    for D in u.marked_differences:
        if D not in u.def_periods:
            continue
        x = D
        for _ in range(n * (n - 1)):
            x = u.def_image[x]
        if x != D:
            found.add(D, x, D)
    return {"def_periods": sorted(set(u.def_periods.values()))}


@_claim(
    "marked-rhythm-characterization",
    "A is periodic under ref_step iff delta(A) has width <= 1 and is max-marked",
    "mR",
)
def _check_marked_rhythm_characterization(u: _Universe, found: _Counterexamples) -> dict:
    for A in u.marked_rhythms:
        brute = A in u.ref_periods
        predicted = is_quasi_smooth_rhythm_marked(A)
        if brute != predicted:
            found.add(A, f"periodic={brute}", f"quasi_smooth={predicted}")
    return {}


@_claim(
    "smooth-iff-quasi-smooth",
    "a rhythm is smooth iff some marking of it is periodic; smoothing stops at the first smooth iterate",
    "R",
    gate="mR",
)
def _check_smooth_iff_quasi_smooth(u: _Universe, found: _Counterexamples) -> dict:
    n = u.params.n
    cap = dynamics.default_orbit_cap(u.params)
    longest = 0
    for a in u.rhythms:
        smooth = is_smooth(a)
        brute = any(MarkedRhythm(k, a) in u.ref_periods for k in range(n))
        if smooth != brute or smooth != is_quasi_smooth_rhythm(a):
            found.add(a, f"smooth={smooth}", f"quasi_smooth={brute}")
            continue

        steps, reached = dynamics.smooth_rhythm(a)
        x = MarkedRhythm(0, a)
        scanned = 0
        while not is_smooth(x.rhythm) and scanned < cap:
            x = u.ref_image[x]
            scanned += 1
        if steps != scanned or reached != x.rhythm:
            found.add(a, f"l={steps} {format_state(reached)}", f"l={scanned} {format_state(x.rhythm)}")
        longest = max(longest, steps)
    return {"max_smoothing_steps": longest}


# --- Running ---


def _run(u: _Universe, claim: Claim) -> ClaimResult:
    found = _Counterexamples()
    started = time.perf_counter()
    observations = claim.check(u, found)
    return ClaimResult(
        claim_id=claim.claim_id,
        statement=claim.statement,
        space=claim.space,
        states_checked=space_size(u.params, claim.space),
        counterexamples=found.items,
        counterexample_count=found.total,
        elapsed_seconds=time.perf_counter() - started,
        observations=observations,
    )


def _run_in_worker(params: SpaceParams, claim_id: str) -> ClaimResult:
    return _run(_Universe(params), _CLAIMS[claim_id])


def verify_all(
    params: SpaceParams,
    claims: list[str] | None = None,
    budget: int | None = DEFAULT_BUDGET,
    jobs: int = 1,
    on_result=None,
) -> VerificationReport:
    """Check every selected claim over every state of its space.

    Claims whose space is over budget are reported as skipped rather than
    raising. With jobs > 1 the runnable claims are checked in worker
    processes; results always come back in claim order. ``on_result`` is
    called with each finished ClaimResult, skipped ones included.

    Raises:
        ValueError: On an unknown claim id or jobs < 1.
    """
    selected = claim_ids() if not claims else list(claims)
    unknown = [c for c in selected if c not in _CLAIMS]
    if unknown:
        raise ValueError(
            f"Unknown claim(s): {', '.join(unknown)}. Known: {', '.join(claim_ids())}"
        )
    if jobs < 1:
        raise ValueError(f"jobs must be >= 1, got {jobs}")
    # Report order follows the registry, not the request.
    selected = [c for c in claim_ids() if c in set(selected)]

    results: dict[str, ClaimResult] = {}
    runnable: list[str] = []
    for claim_id in selected:
        claim = _CLAIMS[claim_id]
        if claim.gate is not None and budget is not None:
            size = space_size(params, claim.gate)
            if size > budget:
                results[claim_id] = ClaimResult(
                    claim_id=claim_id,
                    statement=claim.statement,
                    space=claim.space,
                    states_checked=0,
                    skip_reason=f"{claim.gate} has {size} states, over the budget of {budget}",
                )
                if on_result:
                    on_result(results[claim_id])
                continue
        runnable.append(claim_id)

    if jobs == 1 or len(runnable) <= 1:
        universe = _Universe(params)
        for claim_id in runnable:
            results[claim_id] = _run(universe, _CLAIMS[claim_id])
            if on_result:
                on_result(results[claim_id])
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            done = pool.map(_run_in_worker, [params] * len(runnable), runnable)
            for claim_id, result in zip(runnable, done):
                results[claim_id] = result
                if on_result:
                    on_result(result)

    return VerificationReport(params, [results[c] for c in selected])
