"""Input scenarios, the numerical oracle pipeline, and closed-form/oracle comparison.

A scenario fixes the initial mode-a field (mode b always starts with exactly
one photon): coherent, thermal, or squeezed vacuum.  For each scenario the
heralded observables can be produced two independent ways:

* :func:`closed_form_record` - the analytic expressions in
  :mod:`heraldkit.closedform`;
* :func:`oracle_record` - build the truncated state, evolve it exactly
  (sector eigendecomposition), project on the detected photon number, and
  read the statistics off the collapsed state.

:func:`run_verify` sweeps a parameter grid and reports field-by-field
agreement between the two routes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import closedform
from .closedform import HeraldRecord
from .dynamics import evolve, evolve_ensemble
from .fock import (
    MAX_CUTOFF,
    ModeEnsemble,
    TruncationConfig,
    TwoModeState,
    coherent_state,
    fock_state,
    squeezed_vacuum_state,
    tensor_with_number,
    thermal_weights,
)
from .heralding import project_ensemble, project_pure
from .observables import photon_statistics

__all__ = [
    "Coherent",
    "Thermal",
    "SqueezedVacuum",
    "ScenarioSpec",
    "scenario_label",
    "default_truncation",
    "default_series_cut",
    "initial_pure_state",
    "thermal_ensemble",
    "oracle_record",
    "closed_form_record",
    "scenario_record",
    "FieldCheck",
    "VerifyReport",
    "verify_points",
    "compare_point",
    "run_verify",
]

# closed form and oracle both treat rarer outcomes as never-happened
DEGENERATE_PROBABILITY = 1e-12


@dataclass(frozen=True)
class Coherent:
    alpha: complex


@dataclass(frozen=True)
class Thermal:
    nbar: float


@dataclass(frozen=True)
class SqueezedVacuum:
    r: float


ScenarioSpec = Coherent | Thermal | SqueezedVacuum


def scenario_label(scenario: ScenarioSpec) -> str:
    if isinstance(scenario, Coherent):
        a = scenario.alpha
        param = f"{a.real:g}" if a.imag == 0 else f"{a.real:g}{a.imag:+g}j"
        return f"coherent(alpha={param})"
    if isinstance(scenario, Thermal):
        return f"thermal(nbar={scenario.nbar:g})"
    if isinstance(scenario, SqueezedVacuum):
        return f"squeezed(r={scenario.r:g})"
    raise TypeError(f"not a scenario: {scenario!r}")


# ---------------------------------------------------------------------------
# default truncations: grow until the dropped tail is below 1e-12, add margin


def _coherent_cutoff(alpha: complex) -> int:
    mean = abs(alpha) ** 2
    return max(12, math.ceil(mean + 10.0 * math.sqrt(mean + 1.0)))


def _squeezed_cutoff(r: float) -> int:
    tau = math.tanh(r)
    norm = 1.0 / math.cosh(r)
    p = norm  # |<0|state>|^2
    total = p
    k = 0
    while total < 1.0 - 1e-12 and 2 * k + 10 < MAX_CUTOFF:
        k += 1
        p *= (tau * tau / 4.0) * (2 * k) * (2 * k - 1) / (k * k)
        total += p
    return max(24, 2 * k + 8)


def _thermal_cutoff(nbar: float) -> int:
    if nbar <= 0.0:
        return 40
    q = nbar / (1.0 + nbar)
    needed = math.ceil(math.log(1e-12) / math.log(q))
    return min(max(40, needed), MAX_CUTOFF - 1)


def default_truncation(scenario: ScenarioSpec) -> TruncationConfig:
    """Truncation keeping the initial tail below ~1e-12 with evolution headroom."""
    if isinstance(scenario, Coherent):
        n = min(_coherent_cutoff(scenario.alpha), MAX_CUTOFF - 1)
        return TruncationConfig(n, n + 1)
    if isinstance(scenario, SqueezedVacuum):
        n = min(_squeezed_cutoff(scenario.r), MAX_CUTOFF - 1)
        return TruncationConfig(n, n + 1)
    if isinstance(scenario, Thermal):
        m = _thermal_cutoff(scenario.nbar)
        return TruncationConfig(m + 1, m + 1)
    raise TypeError(f"not a scenario: {scenario!r}")


def default_series_cut(scenario: ScenarioSpec) -> int:
    """Default photon-number cutoff for closed-form distributions and series."""
    if isinstance(scenario, Thermal):
        return max(80, _thermal_cutoff(scenario.nbar))
    return default_truncation(scenario).n_max_a


# ---------------------------------------------------------------------------
# oracle pipeline


def initial_pure_state(scenario: Coherent | SqueezedVacuum, config: TruncationConfig) -> TwoModeState:
    """Scenario mode-a state (renormalized on the grid) with one photon on mode b."""
    if isinstance(scenario, Coherent):
        mode_a = coherent_state(scenario.alpha, config.n_max_a)
    elif isinstance(scenario, SqueezedVacuum):
        mode_a = squeezed_vacuum_state(scenario.r, config.n_max_a)
    else:
        raise TypeError("thermal input is an ensemble; use thermal_ensemble")
    return tensor_with_number(mode_a.renormalized(), 1, config)


def thermal_ensemble(nbar: float, config: TruncationConfig, m_cut: int | None = None) -> ModeEnsemble:
    """Thermal mode a as a weighted Fock ensemble, each member with one photon on b.

    Members run up to min(m_cut, n_max_a - 1) so every member's photon-number
    sector fits the grid even after full exchange.
    """
    top = config.n_max_a - 1 if m_cut is None else min(m_cut, config.n_max_a - 1)
    weights, _ = thermal_weights(nbar, top)
    members = tuple(
        (float(weights[m]), tensor_with_number(fock_state(m, config.n_max_a), 1, config))
        for m in range(top + 1)
    )
    return ModeEnsemble(members)


def oracle_record(
    scenario: ScenarioSpec,
    n_detected: int,
    lambda_t: float,
    config: TruncationConfig | None = None,
) -> HeraldRecord:
    """Heralded observables via the truncated numerical pipeline (no closed forms)."""
    if config is None:
        config = default_truncation(scenario)
    if isinstance(scenario, Thermal):
        ensemble = evolve_ensemble(thermal_ensemble(scenario.nbar, config), lambda_t)
        heralded = project_ensemble(ensemble, n_detected)
    else:
        state = evolve(initial_pure_state(scenario, config), lambda_t)
        heralded = project_pure(state, n_detected)
    if heralded.is_zero:
        return HeraldRecord(lambda_t, None, None, 0.0, None)
    stats = photon_statistics(heralded.state)
    return HeraldRecord(lambda_t, stats.mean, stats.mandel_q, heralded.probability, stats.distribution)


def closed_form_record(
    scenario: ScenarioSpec,
    n_detected: int,
    lambda_t: float,
    n_cut: int | None = None,
) -> HeraldRecord:
    """Heralded observables via the analytic expressions (n_detected >= 1)."""
    if n_cut is None:
        n_cut = default_series_cut(scenario)
    if isinstance(scenario, Coherent):
        return closedform.coherent_record(scenario.alpha, n_detected, lambda_t, n_cut)
    if isinstance(scenario, Thermal):
        return closedform.thermal_record(scenario.nbar, n_detected, lambda_t, n_cut)
    if isinstance(scenario, SqueezedVacuum):
        return closedform.squeezed_record(scenario.r, n_detected, lambda_t, n_cut)
    raise TypeError(f"not a scenario: {scenario!r}")


def scenario_record(
    scenario: ScenarioSpec,
    n_detected: int,
    lambda_t: float,
    n_cut: int | None = None,
    config: TruncationConfig | None = None,
) -> HeraldRecord:
    """Closed form where it applies; oracle pipeline for N = 0 or zero squeezing."""
    if n_detected == 0 or (isinstance(scenario, SqueezedVacuum) and scenario.r == 0.0):
        return oracle_record(scenario, n_detected, lambda_t, config)
    return closed_form_record(scenario, n_detected, lambda_t, n_cut)


# ---------------------------------------------------------------------------
# closed-form vs oracle comparison grid


@dataclass(frozen=True)
class FieldCheck:
    """One compared field; errors are inf when only one side is defined."""

    scenario: str
    n_detected: int
    lambda_t_over_pi: float
    field: str
    closed_form: float | None
    oracle: float | None
    abs_error: float
    rel_error: float


@dataclass(frozen=True)
class VerifyReport:
    preset: str
    tolerance: float
    checks: tuple[FieldCheck, ...]
    passed: tuple[bool, ...]

    @property
    def total(self) -> int:
        return len(self.checks)

    @property
    def n_passed(self) -> int:
        return sum(self.passed)

    @property
    def n_failed(self) -> int:
        return self.total - self.n_passed

    @property
    def all_passed(self) -> bool:
        return self.n_failed == 0


def _errors(cf: float | None, orc: float | None) -> tuple[float, float]:
    if cf is None and orc is None:
        return 0.0, 0.0
    if cf is None or orc is None:
        return math.inf, math.inf
    abs_err = abs(cf - orc)
    denom = max(abs(cf), abs(orc))
    if denom == 0.0:
        return abs_err, 0.0 if abs_err == 0.0 else math.inf
    return abs_err, abs_err / denom


def compare_point(
    scenario: ScenarioSpec,
    n_detected: int,
    lambda_t: float,
    closed: HeraldRecord | None = None,
    oracle: HeraldRecord | None = None,
    config: TruncationConfig | None = None,
) -> list[FieldCheck]:
    """Field-by-field comparison of the two routes at one grid point.

    Scalar fields give one check each; distributions give a single check
    carrying the worst-matching entry.
    """
    if config is None:
        config = default_truncation(scenario)
    if closed is None:
        n_cut = config.n_max_a
        if isinstance(scenario, Thermal):
            # align the series cut with the oracle member set (m0 <= n_max_a - 1)
            # so both sides truncate the same classical tail
            n_cut = max(1, config.n_max_a - n_detected)
        closed = closed_form_record(scenario, n_detected, lambda_t, n_cut=n_cut)
    if oracle is None:
        oracle = oracle_record(scenario, n_detected, lambda_t, config)
    label = scenario_label(scenario)
    ltp = lambda_t / math.pi
    checks = []
    for field in ("herald_prob", "mean", "mandel_q"):
        cf = getattr(closed, field)
        orc = getattr(oracle, field)
        abs_err, rel_err = _errors(cf, orc)
        checks.append(FieldCheck(label, n_detected, ltp, field, cf, orc, abs_err, rel_err))

    cf_dist, orc_dist = closed.distribution, oracle.distribution
    if cf_dist is None and orc_dist is None:
        checks.append(FieldCheck(label, n_detected, ltp, "p_0", None, None, 0.0, 0.0))
    elif cf_dist is None or orc_dist is None:
        checks.append(FieldCheck(label, n_detected, ltp, "p_0", None, None, math.inf, math.inf))
    else:
        size = max(cf_dist.size, orc_dist.size)
        a = np.zeros(size)
        b = np.zeros(size)
        a[: cf_dist.size] = cf_dist
        b[: orc_dist.size] = orc_dist
        worst = int(np.argmax(np.abs(a - b)))
        abs_err, rel_err = _errors(float(a[worst]), float(b[worst]))
        checks.append(
            FieldCheck(label, n_detected, ltp, f"p_{worst}", float(a[worst]), float(b[worst]), abs_err, rel_err)
        )
    return checks


def verify_points(preset: str) -> list[tuple[ScenarioSpec, int, float]]:
    """Comparison grid: (scenario, detected count, coupling phase) triples."""
    if preset == "small":
        return [(Coherent(1.0), 1, k * math.pi / 10.0) for k in range(1, 6)]
    if preset != "full":
        raise ValueError("preset must be 'small' or 'full'")
    scenarios: list[ScenarioSpec] = [
        Coherent(0.5),
        Coherent(1.0),
        Coherent(2.0),
        Thermal(1.0),
        Thermal(2.0),
        SqueezedVacuum(0.5),
        SqueezedVacuum(1.0),
    ]
    points = []
    for scenario in scenarios:
        for n_detected in (1, 2):
            for k in range(1, 21):
                points.append((scenario, n_detected, k * math.pi / 40.0))
    return points


def run_verify(preset: str = "full", tolerance: float = 1e-6) -> VerifyReport:
    """Compare the closed forms against the oracle pipeline over a preset grid.

    A check passes when its absolute or its relative error is within
    ``tolerance``.  Evolved states are shared across detected counts at the
    same grid point, so the full grid stays fast.
    """
    if not tolerance >= 0.0:
        raise ValueError("tolerance must be >= 0")
    points = verify_points(preset)
    checks: list[FieldCheck] = []

    by_scenario: dict[ScenarioSpec, list[tuple[int, float]]] = {}
    for scenario, n_detected, lambda_t in points:
        by_scenario.setdefault(scenario, []).append((n_detected, lambda_t))

    for scenario, tasks in by_scenario.items():
        config = default_truncation(scenario)
        if isinstance(scenario, Thermal):
            base_ens = thermal_ensemble(scenario.nbar, config)
        else:
            base_state = initial_pure_state(scenario, config)
        evolved_cache: dict[float, object] = {}
        for n_detected, lambda_t in tasks:
            if lambda_t not in evolved_cache:
                if isinstance(scenario, Thermal):
                    evolved_cache[lambda_t] = evolve_ensemble(base_ens, lambda_t)
                else:
                    evolved_cache[lambda_t] = evolve(base_state, lambda_t)
            ev = evolved_cache[lambda_t]
            if isinstance(scenario, Thermal):
                heralded = project_ensemble(ev, n_detected)
            else:
                heralded = project_pure(ev, n_detected)
            if heralded.is_zero:
                oracle = HeraldRecord(lambda_t, None, None, 0.0, None)
            else:
                stats = photon_statistics(heralded.state)
                oracle = HeraldRecord(
                    lambda_t, stats.mean, stats.mandel_q, heralded.probability, stats.distribution
                )
            checks.extend(compare_point(scenario, n_detected, lambda_t, oracle=oracle, config=config))

    passed = tuple(c.abs_error <= tolerance or c.rel_error <= tolerance for c in checks)
    return VerifyReport(preset, tolerance, tuple(checks), passed)
