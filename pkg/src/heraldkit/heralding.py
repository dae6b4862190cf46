"""Conditional collapse of mode a on a photon-number measurement of mode b."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .fock import DiagonalMixture, ModeEnsemble, SingleModeState, TwoModeState

__all__ = ["ZERO_PROBABILITY", "HeraldedState", "project_pure", "project_ensemble", "herald_spectrum"]

# outcomes rarer than this collapse to the zero-probability marker
ZERO_PROBABILITY = 1e-14


@dataclass(frozen=True, eq=False)
class HeraldedState:
    """Mode-a state conditioned on detecting a photon count on mode b.

    ``state`` is a :class:`SingleModeState` (pure input), a
    :class:`DiagonalMixture` (ensemble input), or None for the
    zero-probability marker.
    """

    state: SingleModeState | DiagonalMixture | None
    probability: float

    @property
    def is_zero(self) -> bool:
        return self.state is None


def project_pure(state: TwoModeState, n_detected: int) -> HeraldedState:
    """Collapse a pure two-mode state on the outcome ``n_detected`` in mode b.

    Returns the renormalized mode-a state together with the outcome
    probability; outcomes with probability below 1e-14 give the
    zero-probability marker instead.
    """
    if not 0 <= n_detected <= state.config.n_max_b:
        raise ValueError(f"n_detected={n_detected} outside mode-b grid 0..{state.config.n_max_b}")
    column = state.amplitudes[:, n_detected]
    prob = float(np.sum(np.abs(column) ** 2))
    if prob < ZERO_PROBABILITY:
        return HeraldedState(None, 0.0)
    collapsed = SingleModeState(column / math.sqrt(prob), normalized=True)
    return HeraldedState(collapsed, prob)


def project_ensemble(ensemble: ModeEnsemble, n_detected: int) -> HeraldedState:
    """Collapse an ensemble; the result is diagonal in photon number.

    The outcome probability is the weight-averaged member probability and the
    conditional mode-a distribution is their probability-weighted mixture.
    """
    if not 0 <= n_detected <= ensemble.config.n_max_b:
        raise ValueError(f"n_detected={n_detected} outside mode-b grid 0..{ensemble.config.n_max_b}")
    dist = np.zeros(ensemble.config.n_max_a + 1, dtype=float)
    for weight, member in ensemble.members:
        column = member.amplitudes[:, n_detected]
        dist += weight * np.abs(column) ** 2
    prob = float(dist.sum())
    if prob < ZERO_PROBABILITY:
        return HeraldedState(None, 0.0)
    return HeraldedState(DiagonalMixture(dist / prob, normalized=True), prob)


def herald_spectrum(state: TwoModeState) -> np.ndarray:
    """Probability of each mode-b outcome N = 0 .. n_max_b (sums to |psi|^2)."""
    return np.sum(np.abs(state.amplitudes) ** 2, axis=0)
