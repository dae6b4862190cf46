"""Shared independent oracles for the test suite.

``dense_evolve`` exponentiates the full two-mode coupling Hamiltonian as one
dense matrix (no sector bookkeeping), giving an implementation-independent
reference for the evolution code and for every closed form.
``overlap_series`` evaluates the Gaussian-state overlaps by brute-force
Fock-series summation.
"""

from __future__ import annotations

import functools
import math

import numpy as np
import pytest

from heraldkit import TruncationConfig, TwoModeState


@functools.lru_cache(maxsize=8)
def _dense_eig(config: TruncationConfig) -> tuple[np.ndarray, np.ndarray]:
    na, nb = config.n_max_a + 1, config.n_max_b + 1
    dim = na * nb
    h = np.zeros((dim, dim))
    for ia in range(na - 1):
        for ib in range(1, nb):
            # adag_a b |ia, ib> = sqrt((ia+1) ib) |ia+1, ib-1>
            row = (ia + 1) * nb + (ib - 1)
            col = ia * nb + ib
            v = math.sqrt((ia + 1) * ib)
            h[row, col] += v
            h[col, row] += v
    w, vecs = np.linalg.eigh(h)
    return w, vecs


def dense_evolve(state: TwoModeState, lambda_t: float) -> TwoModeState:
    """exp(-i lambda_t H) applied through one dense eigendecomposition."""
    w, vecs = _dense_eig(state.config)
    vec = state.amplitudes.reshape(-1)
    out = vecs @ (np.exp(-1j * lambda_t * w) * (vecs.conj().T @ vec))
    return TwoModeState(out.reshape(state.amplitudes.shape), state.config, normalized=state.normalized)


def overlap_series(n1: int, n2: int, r: float, lambda_t: float, n_fock: int = 120) -> float:
    """<0| exp(y/2 a^2) a^n1dag... computed as an explicit Fock-basis sum.

    y = tanh(r) cos^2(lambda_t); the reference vector is
    v = exp(y/2 adag^2)|0> and the overlap is <adag^n1 v, adag^n2 v>.
    """
    y = math.tanh(r) * math.cos(lambda_t) ** 2
    v = np.zeros(n_fock + 1)
    v[0] = 1.0
    for k in range(1, n_fock // 2 + 1):
        v[2 * k] = v[2 * k - 2] * (y / 2.0) * math.sqrt((2 * k) * (2 * k - 1)) / k

    def raised(m: int) -> np.ndarray:
        out = np.zeros(n_fock + 1 + m)
        for n in range(m, n_fock + 1 + m):
            if v[n - m] != 0.0:
                # <n| adag^m |n-m> = sqrt(n! / (n-m)!)
                fac = math.sqrt(math.prod(range(n - m + 1, n + 1))) if m else 1.0
                out[n] = fac * v[n - m]
        return out

    left = raised(n1)
    right = raised(n2)
    ln = min(left.size, right.size)
    return float(np.dot(left[:ln], right[:ln]))


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20260815)


def random_two_mode(rng: np.random.Generator, config: TruncationConfig) -> TwoModeState:
    amp = rng.normal(size=config.shape) + 1j * rng.normal(size=config.shape)
    amp /= np.linalg.norm(amp)
    return TwoModeState(amp, config, normalized=True)
