"""Truncated Fock-space states for one and two bosonic modes.

Everything downstream (exact evolution, heralding, observables) works on the
immutable containers defined here.  Amplitude arrays are plain complex numpy
vectors/matrices indexed by photon number; constructors use multiplicative
recurrences so no factorial is ever materialised.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "MAX_CUTOFF",
    "CutoffError",
    "TruncationConfig",
    "SingleModeState",
    "DiagonalMixture",
    "TwoModeState",
    "ModeEnsemble",
    "fock_state",
    "coherent_state",
    "squeezed_vacuum_state",
    "thermal_weights",
    "tensor_with_number",
    "raise_mode",
    "lower_mode",
    "lower_a",
    "lower_b",
    "raise_a",
    "raise_b",
]

# hard ceiling on photon-number cutoffs; keeps sector matrices small
MAX_CUTOFF = 200

# tail mass above which a constructor refuses to truncate
TAIL_REJECT = 1e-6
# tail mass below which the stored amplitudes count as normalized
TAIL_NORMALIZED = 1e-12


class CutoffError(ValueError):
    """Requested cutoff drops more probability than we are willing to ignore."""

    def __init__(self, message: str, tail_mass: float):
        super().__init__(message)
        self.tail_mass = tail_mass


def _frozen(arr: np.ndarray) -> np.ndarray:
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True)
class TruncationConfig:
    """Inclusive photon-number cutoffs for the two modes.

    States with cutoff ``n_max`` store amplitudes for n = 0 .. n_max.
    """

    n_max_a: int
    n_max_b: int

    def __post_init__(self):
        for name, n in (("n_max_a", self.n_max_a), ("n_max_b", self.n_max_b)):
            if not isinstance(n, (int, np.integer)) or not 1 <= n <= MAX_CUTOFF:
                raise ValueError(f"{name} must be an integer in [1, {MAX_CUTOFF}], got {n!r}")

    @property
    def shape(self) -> tuple[int, int]:
        return (self.n_max_a + 1, self.n_max_b + 1)


@dataclass(frozen=True, eq=False)
class SingleModeState:
    """Pure single-mode state as a complex amplitude vector over photon number.

    Parameters
    ----------
    amplitudes : array_like
        Complex vector, entry n is the amplitude on the n-photon state.
    normalized : bool
        Declare the vector unit-norm.  Checked at construction (1e-10).
    """

    amplitudes: np.ndarray
    normalized: bool = True

    def __post_init__(self):
        amp = np.array(self.amplitudes, dtype=complex)
        if amp.ndim != 1 or amp.size < 2:
            raise ValueError("amplitudes must be a 1-d vector over n = 0..n_max with n_max >= 1")
        if not np.all(np.isfinite(amp)):
            raise ValueError("amplitudes must be finite")
        object.__setattr__(self, "amplitudes", _frozen(amp))
        if self.normalized and abs(self.norm_sq() - 1.0) > 1e-10:
            raise ValueError("state declared normalized but has |psi|^2 != 1")

    @property
    def n_max(self) -> int:
        return self.amplitudes.size - 1

    def norm_sq(self) -> float:
        return float(np.vdot(self.amplitudes, self.amplitudes).real)

    def probabilities(self) -> np.ndarray:
        return np.abs(self.amplitudes) ** 2

    def renormalized(self) -> "SingleModeState":
        n = math.sqrt(self.norm_sq())
        if n == 0.0:
            raise ValueError("cannot renormalize the zero vector")
        return SingleModeState(self.amplitudes / n, normalized=True)


@dataclass(frozen=True, eq=False)
class DiagonalMixture:
    """Photon-number-diagonal mixed state: a weight per Fock level."""

    weights: np.ndarray
    normalized: bool = True

    def __post_init__(self):
        w = np.array(self.weights, dtype=float)
        if w.ndim != 1 or w.size < 1:
            raise ValueError("weights must be a 1-d vector")
        if not np.all(np.isfinite(w)) or np.any(w < -1e-12):
            raise ValueError("weights must be finite and nonnegative")
        w[w < 0] = 0.0  # clip float dust
        object.__setattr__(self, "weights", _frozen(w))
        if self.normalized and abs(w.sum() - 1.0) > 1e-10:
            raise ValueError("mixture declared normalized but weights do not sum to 1")

    @property
    def n_max(self) -> int:
        return self.weights.size - 1

    def probabilities(self) -> np.ndarray:
        return self.weights.copy()


@dataclass(frozen=True, eq=False)
class TwoModeState:
    """Pure two-mode state; ``amplitudes[n_a, n_b]`` over the truncated grid."""

    amplitudes: np.ndarray
    config: TruncationConfig
    normalized: bool = True

    def __post_init__(self):
        amp = np.array(self.amplitudes, dtype=complex)
        if amp.shape != self.config.shape:
            raise ValueError(f"amplitude matrix shape {amp.shape} does not match config {self.config.shape}")
        if not np.all(np.isfinite(amp)):
            raise ValueError("amplitudes must be finite")
        object.__setattr__(self, "amplitudes", _frozen(amp))
        if self.normalized and abs(self.norm_sq() - 1.0) > 1e-10:
            raise ValueError("state declared normalized but has |psi|^2 != 1")

    def norm_sq(self) -> float:
        return float(np.vdot(self.amplitudes, self.amplitudes).real)

    def renormalized(self) -> "TwoModeState":
        n = math.sqrt(self.norm_sq())
        if n == 0.0:
            raise ValueError("cannot renormalize the zero vector")
        return TwoModeState(self.amplitudes / n, self.config, normalized=True)


@dataclass(frozen=True, eq=False)
class ModeEnsemble:
    """Statistical mixture of two-mode pure states (weight, state) for classical inputs.

    Weights may sum to less than 1 when a truncated classical tail was dropped.
    """

    members: tuple[tuple[float, TwoModeState], ...]

    def __post_init__(self):
        if not self.members:
            raise ValueError("ensemble needs at least one member")
        total = 0.0
        cfg = self.members[0][1].config
        for w, st in self.members:
            if not (math.isfinite(w) and w >= 0.0):
                raise ValueError("member weights must be finite and nonnegative")
            if st.config != cfg:
                raise ValueError("all members must share one truncation config")
            total += w
        if total > 1.0 + 1e-10:
            raise ValueError(f"member weights sum to {total} > 1")

    @property
    def config(self) -> TruncationConfig:
        return self.members[0][1].config

    def total_weight(self) -> float:
        return float(sum(w for w, _ in self.members))


# ---------------------------------------------------------------------------
# constructors


def fock_state(n: int, n_max: int) -> SingleModeState:
    """Number state |n> on a grid of size n_max + 1."""
    if not 0 <= n <= n_max:
        raise ValueError(f"need 0 <= n <= n_max, got n={n}, n_max={n_max}")
    amp = np.zeros(n_max + 1, dtype=complex)
    amp[n] = 1.0
    return SingleModeState(amp, normalized=True)


def coherent_state(alpha: complex, n_max: int) -> SingleModeState:
    """Coherent state with complex amplitude alpha, truncated at n_max.

    Amplitudes follow the stable recurrence amp_n = amp_{n-1} * alpha / sqrt(n).
    Raises :class:`CutoffError` if the discarded Poisson tail exceeds 1e-6;
    the ``normalized`` flag is set only when the tail is below 1e-12.
    """
    alpha = complex(alpha)
    amp = np.zeros(n_max + 1, dtype=complex)
    amp[0] = math.exp(-0.5 * abs(alpha) ** 2)
    for n in range(1, n_max + 1):
        amp[n] = amp[n - 1] * alpha / math.sqrt(n)
    tail = max(0.0, 1.0 - float(np.sum(np.abs(amp) ** 2)))
    if tail > TAIL_REJECT:
        raise CutoffError(
            f"coherent state |alpha|={abs(alpha):.4g} loses tail mass {tail:.3e} at n_max={n_max}", tail
        )
    return SingleModeState(amp, normalized=tail < TAIL_NORMALIZED)


def squeezed_vacuum_state(r: float, n_max: int) -> SingleModeState:
    """Squeezed vacuum with real squeezing parameter r >= 0 (even levels only).

    State proportional to exp((tanh r / 2) * adag^2)|0>; odd amplitudes are
    exactly zero.  Same tail policy as :func:`coherent_state`.
    """
    if r < 0 or not math.isfinite(r):
        raise ValueError("squeezing parameter r must be finite and >= 0")
    if n_max < 2:
        raise ValueError("squeezed vacuum needs n_max >= 2")
    tau = math.tanh(r)
    amp = np.zeros(n_max + 1, dtype=complex)
    amp[0] = 1.0 / math.sqrt(math.cosh(r))
    for k in range(1, n_max // 2 + 1):
        amp[2 * k] = amp[2 * k - 2] * (tau / 2.0) * math.sqrt((2 * k) * (2 * k - 1)) / k
    tail = max(0.0, 1.0 - float(np.sum(np.abs(amp) ** 2)))
    if tail > TAIL_REJECT:
        raise CutoffError(f"squeezed vacuum r={r:.4g} loses tail mass {tail:.3e} at n_max={n_max}", tail)
    return SingleModeState(amp, normalized=tail < TAIL_NORMALIZED)


def thermal_weights(nbar: float, m_max: int) -> tuple[np.ndarray, float]:
    """Geometric photon-number weights of a thermal state with mean nbar.

    Returns
    -------
    weights : ndarray
        P_m = nbar^m / (1 + nbar)^(m+1) for m = 0 .. m_max.
    tail_mass : float
        Exact discarded mass (nbar / (1 + nbar))^(m_max + 1).
    """
    if nbar < 0 or not math.isfinite(nbar):
        raise ValueError("thermal mean nbar must be finite and >= 0")
    if m_max < 0:
        raise ValueError("m_max must be >= 0")
    q = nbar / (1.0 + nbar)
    w = np.empty(m_max + 1, dtype=float)
    w[0] = 1.0 / (1.0 + nbar)
    for m in range(1, m_max + 1):
        w[m] = w[m - 1] * q
    tail = q ** (m_max + 1)
    return _frozen(w), float(tail)


def tensor_with_number(a_state: SingleModeState, n_b: int, config: TruncationConfig) -> TwoModeState:
    """Product of a mode-a state with the number state |n_b> on mode b."""
    if not 0 <= n_b <= config.n_max_b:
        raise ValueError(f"n_b={n_b} outside mode-b grid 0..{config.n_max_b}")
    if a_state.n_max > config.n_max_a:
        raise ValueError("mode-a state does not fit the requested truncation")
    amp = np.zeros(config.shape, dtype=complex)
    amp[: a_state.n_max + 1, n_b] = a_state.amplitudes
    return TwoModeState(amp, config, normalized=a_state.normalized)


# ---------------------------------------------------------------------------
# ladder maps (unnormalized outputs)


def raise_mode(state: SingleModeState) -> SingleModeState:
    """Apply the raising operator; amplitude leaving the grid is an error."""
    amp = state.amplitudes
    if abs(amp[-1]) > 0.0:
        raise ValueError("raising would push amplitude past the cutoff")
    out = np.zeros_like(amp)
    n = np.arange(1, amp.size)
    out[1:] = np.sqrt(n) * amp[:-1]
    return SingleModeState(out, normalized=False)


def lower_mode(state: SingleModeState) -> SingleModeState:
    """Apply the lowering operator."""
    amp = state.amplitudes
    out = np.zeros_like(amp)
    n = np.arange(1, amp.size)
    out[:-1] = np.sqrt(n) * amp[1:]
    return SingleModeState(out, normalized=False)


def _ladder_2m(state: TwoModeState, axis: int, raising: bool) -> TwoModeState:
    amp = state.amplitudes
    out = np.zeros_like(amp)
    size = amp.shape[axis]
    root = np.sqrt(np.arange(1, size))
    root = root.reshape((-1, 1) if axis == 0 else (1, -1))
    src_hi = [slice(None), slice(None)]
    src_lo = [slice(None), slice(None)]
    src_hi[axis] = slice(1, None)
    src_lo[axis] = slice(None, -1)
    if raising:
        top = [slice(None), slice(None)]
        top[axis] = slice(-1, None)
        if np.any(np.abs(amp[tuple(top)]) > 0.0):
            raise ValueError("raising would push amplitude past the cutoff")
        out[tuple(src_hi)] = root * amp[tuple(src_lo)]
    else:
        out[tuple(src_lo)] = root * amp[tuple(src_hi)]
    return TwoModeState(out, state.config, normalized=False)


def lower_a(state: TwoModeState) -> TwoModeState:
    """Lowering operator on mode a of a two-mode state (unnormalized result)."""
    return _ladder_2m(state, axis=0, raising=False)


def lower_b(state: TwoModeState) -> TwoModeState:
    """Lowering operator on mode b."""
    return _ladder_2m(state, axis=1, raising=False)


def raise_a(state: TwoModeState) -> TwoModeState:
    """Raising operator on mode a; errors if the top row is occupied."""
    return _ladder_2m(state, axis=0, raising=True)


def raise_b(state: TwoModeState) -> TwoModeState:
    """Raising operator on mode b; errors if the top column is occupied."""
    return _ladder_2m(state, axis=1, raising=True)
