"""Photon-counting observables of single-mode states and diagonal mixtures."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .fock import DiagonalMixture, SingleModeState

__all__ = ["MEAN_UNDEFINED", "HeadroomError", "PhotonStatistics", "photon_statistics", "a2ad2_moment"]

# below this mean the Mandel parameter is reported as undefined
MEAN_UNDEFINED = 1e-14


class HeadroomError(ValueError):
    """State support touches the cutoff, so the requested moment is unreliable."""


@dataclass(frozen=True, eq=False)
class PhotonStatistics:
    """Mean photon number, Mandel Q (None when undefined) and the distribution."""

    mean: float
    mandel_q: float | None
    distribution: np.ndarray


def photon_statistics(state: SingleModeState | DiagonalMixture) -> PhotonStatistics:
    """Photon-number statistics of a pure state or diagonal mixture.

    Mandel Q = (<n^2> - <n>^2)/<n> - 1; it is None for vacuum-like states
    whose mean is below 1e-14 (Q is 0/0 there).
    """
    p = state.probabilities()
    n = np.arange(p.size, dtype=float)
    mean = float(np.dot(n, p))
    if mean < MEAN_UNDEFINED:
        return PhotonStatistics(mean, None, p)
    second = float(np.dot(n * n, p))
    mandel_q = (second - mean * mean) / mean - 1.0
    return PhotonStatistics(mean, mandel_q, p)


def a2ad2_moment(state: SingleModeState) -> float:
    """Antinormally ordered second moment <a^2 adag^2> = sum (n+1)(n+2) p_n.

    Requires support strictly below n_max - 2: with weight at the top of the
    grid, the two virtual raises implied by the moment would be truncated.
    """
    p = state.probabilities()
    if float(p[-3:].sum()) > 1e-12:
        raise HeadroomError("support within two levels of the cutoff; moment would be truncated")
    n = np.arange(p.size, dtype=float)
    return float(np.dot((n + 1.0) * (n + 2.0), p))
