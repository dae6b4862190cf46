"""Closed-form heralded observables against independent oracles and frozen values.

The dense-matrix oracle (conftest) knows nothing about the analytic
expressions: it exponentiates the coupling Hamiltonian, extracts the
detected column, and takes plain moments of the resulting weights.
"""

import math

import numpy as np
import pytest

from heraldkit import (
    DegenerateInputError,
    TruncationConfig,
    coherent_record,
    coherent_state,
    fock_state,
    hermite_at_zero,
    squeezed_coeffs,
    squeezed_overlap,
    squeezed_record,
    squeezed_vacuum_state,
    tensor_with_number,
    thermal_record,
    thermal_series_tail,
    thermal_weights,
)

from conftest import dense_evolve, overlap_series


def _dense_pure_point(initial, n_detected, lambda_t):
    """prob, mean, q, dist from the dense-matrix pipeline, moments taken inline."""
    out = dense_evolve(initial, lambda_t)
    col = out.amplitudes[:, n_detected]
    prob = float(np.real(np.vdot(col, col)))
    p = np.abs(col) ** 2 / prob
    ns = np.arange(p.size, dtype=float)
    mean = float(ns @ p)
    second = float((ns * ns) @ p)
    q = (second - mean * mean) / mean - 1.0 if mean > 1e-14 else None
    return prob, mean, q, p


def _dense_thermal_point(nbar, config, n_detected, lambda_t):
    weights, _ = thermal_weights(nbar, config.n_max_a - 1)
    num = np.zeros(config.n_max_a + 1)
    for m0, w in enumerate(weights):
        st = tensor_with_number(fock_state(m0, config.n_max_a), 1, config)
        out = dense_evolve(st, lambda_t)
        num += w * np.abs(out.amplitudes[:, n_detected]) ** 2
    prob = float(num.sum())
    p = num / prob
    ns = np.arange(p.size, dtype=float)
    mean = float(ns @ p)
    second = float((ns * ns) @ p)
    q = (second - mean * mean) / mean - 1.0 if mean > 1e-14 else None
    return prob, mean, q, p


def _assert_record_close(record, prob, mean, q, dist, tol=1e-10):
    assert record.herald_prob == pytest.approx(prob, abs=tol, rel=tol)
    assert record.mean == pytest.approx(mean, abs=tol, rel=tol)
    assert record.mandel_q == pytest.approx(q, abs=10 * tol, rel=10 * tol)
    got = record.distribution
    size = max(got.size, dist.size)
    a = np.zeros(size)
    b = np.zeros(size)
    a[: got.size] = got
    b[: dist.size] = dist
    assert np.abs(a - b).max() < tol


# ---------------------------------------------------------------------------
# Hermite values at the origin


def test_hermite_at_zero_frozen():
    assert [hermite_at_zero(n) for n in range(0, 9, 2)] == [1, -2, 12, -120, 1680]
    assert all(hermite_at_zero(n) == 0 for n in (1, 3, 5, 7))
    assert hermite_at_zero(-2) == 0


# ---------------------------------------------------------------------------
# coherent input


def test_coherent_full_swap_frozen():
    rec = coherent_record(2.0, 1, math.pi / 2.0, 30)
    assert rec.herald_prob == pytest.approx(0.07326255555493671, rel=1e-13)  # 4 e^-4
    assert rec.mean == pytest.approx(1.0, abs=1e-12)
    assert rec.mandel_q == pytest.approx(-1.0, abs=1e-12)
    assert rec.distribution[1] == pytest.approx(1.0, abs=1e-12)


def test_coherent_zero_phase_frozen():
    rec = coherent_record(2.0, 1, 0.0, 48)
    assert rec.herald_prob == pytest.approx(1.0, abs=1e-13)
    assert rec.mean == pytest.approx(4.0, abs=1e-12)
    assert rec.mandel_q == pytest.approx(0.0, abs=1e-12)
    assert rec.distribution[4] == pytest.approx(0.19536681481316456, rel=1e-12)


def test_coherent_against_dense_oracle():
    config = TruncationConfig(30, 31)
    alpha = 1.3 + 0.4j  # complex amplitude exercises every phase in the formulas
    initial = tensor_with_number(coherent_state(alpha, 30).renormalized(), 1, config)
    for n_detected in (1, 2, 3):
        for ltp in (0.17, 0.29, 0.41):
            ref = _dense_pure_point(initial, n_detected, ltp * math.pi)
            rec = coherent_record(alpha, n_detected, ltp * math.pi, 30)
            _assert_record_close(rec, *ref)


def test_coherent_vacuum_input():
    rec = coherent_record(0.0, 1, 0.3 * math.pi, 10)
    assert rec.herald_prob == pytest.approx(math.cos(0.3 * math.pi) ** 2, rel=1e-14)
    assert rec.mean == 0.0
    assert rec.mandel_q is None
    assert rec.distribution[0] == pytest.approx(1.0)


def test_coherent_impossible_outcome_marker():
    # three detections need at least two exchanged photons; at lambda_t = 0 none moved
    rec = coherent_record(1.0, 3, 0.0, 10)
    assert rec.herald_prob == 0.0
    assert rec.mean is None and rec.mandel_q is None and rec.distribution is None


# ---------------------------------------------------------------------------
# thermal input


def test_thermal_full_swap_frozen():
    rec = thermal_record(2.0, 1, math.pi / 2.0, 80)
    assert rec.herald_prob == pytest.approx(2.0 / 9.0, abs=1e-15)
    assert rec.mean == pytest.approx(1.0, abs=1e-14)
    assert rec.mandel_q == pytest.approx(-1.0, abs=1e-14)
    assert rec.distribution[1] == pytest.approx(1.0, abs=1e-14)


def test_thermal_zero_phase_recovers_input():
    nbar = 2.0
    rec = thermal_record(nbar, 1, 0.0, 200)
    assert rec.herald_prob == pytest.approx(1.0, abs=1e-12)
    assert rec.mean == pytest.approx(nbar, rel=1e-12)
    assert rec.mandel_q == pytest.approx(nbar, rel=1e-11)


def test_thermal_against_dense_oracle():
    config = TruncationConfig(34, 35)
    nbar = 1.5
    for n_detected in (1, 2):
        # align the series cut with the oracle's member set so both sides
        # truncate identically: member m0 <= 33 maps to series index m0 + 1 - N
        m_cut = config.n_max_a - n_detected
        for ltp in (0.23, 0.37):
            ref = _dense_thermal_point(nbar, config, n_detected, ltp * math.pi)
            rec = thermal_record(nbar, n_detected, ltp * math.pi, m_cut)
            _assert_record_close(rec, *ref)


def test_thermal_tail_bound_dominates_remainder():
    for n_detected in (1, 2):
        for ltp in (0.1, 0.3, 0.45):
            short = thermal_record(2.0, n_detected, ltp * math.pi, 30).herald_prob
            long = thermal_record(2.0, n_detected, ltp * math.pi, 150).herald_prob
            bound = thermal_series_tail(2.0, n_detected, ltp * math.pi, 30)
            # the two sides are summed in different groupings; allow rounding
            assert long - short <= bound * (1.0 + 1e-9) + 1e-15
            assert bound < 1e-2
            assert thermal_series_tail(2.0, n_detected, ltp * math.pi, 80) < bound


# ---------------------------------------------------------------------------
# squeezed-vacuum input


def test_squeezed_full_swap_frozen():
    rec = squeezed_record(1.0, 2, math.pi / 2.0, 60)
    assert rec.herald_prob == pytest.approx(0.1879440533758696, rel=1e-12)  # tanh^2(1)/(2 cosh 1)
    assert rec.mean == pytest.approx(1.0, abs=1e-12)
    assert rec.mandel_q == pytest.approx(-1.0, abs=1e-12)
    assert rec.distribution[1] == pytest.approx(1.0, abs=1e-12)


def test_squeezed_parity_forbidden():
    rec = squeezed_record(1.0, 1, math.pi / 2.0, 60)
    assert rec.herald_prob == 0.0
    assert rec.mean is None and rec.distribution is None


def test_squeezed_zero_phase_recovers_input():
    rec = squeezed_record(1.0, 1, 0.0, 120)
    assert rec.herald_prob == pytest.approx(1.0, abs=1e-13)
    assert rec.mean == pytest.approx(1.3810978455418155, rel=1e-12)  # sinh^2(1)
    assert rec.mandel_q == pytest.approx(3.7621956910836314, rel=1e-11)
    probs = squeezed_vacuum_state(1.0, 120).probabilities()
    assert np.abs(rec.distribution - probs).max() < 1e-12


def test_squeezed_against_dense_oracle():
    config = TruncationConfig(40, 41)
    r = 0.5
    initial = tensor_with_number(squeezed_vacuum_state(r, 40).renormalized(), 1, config)
    for n_detected in (1, 2, 3):
        for ltp in (0.19, 0.33, 0.47):
            ref = _dense_pure_point(initial, n_detected, ltp * math.pi)
            rec = squeezed_record(r, n_detected, ltp * math.pi, 40)
            _assert_record_close(rec, *ref)


def test_squeezed_needs_positive_r():
    with pytest.raises(DegenerateInputError):
        squeezed_coeffs(0.0, 1, 0.3)
    with pytest.raises(DegenerateInputError):
        squeezed_record(0.0, 1, 0.3, 20)


def test_squeezed_impossible_outcome_marker():
    rec = squeezed_record(1.0, 2, 0.0, 40)  # no exchange yet, b holds one photon
    assert rec.herald_prob == 0.0 and rec.mean is None


# ---------------------------------------------------------------------------
# Gaussian overlaps


def test_overlap_matches_series_oracle():
    for r in (0.5, 1.0):
        for lt in (math.pi / 8.0, math.pi / 4.0, 3.0 * math.pi / 8.0):
            for n1 in range(7):
                for n2 in range(7):
                    got = squeezed_overlap(n1, n2, r, lt)
                    want = overlap_series(n1, n2, r, lt)
                    assert abs(got.imag) < 1e-12
                    assert got.real == pytest.approx(want, abs=1e-10, rel=1e-10)


def test_overlap_frozen_closed_forms():
    for r, lt in ((0.5, 0.2), (1.0, math.pi / 4.0), (1.0, 1.1)):
        y = math.tanh(r) * math.cos(lt) ** 2
        one = 1.0 / math.sqrt(1.0 - y * y)
        assert squeezed_overlap(0, 0, r, lt).real == pytest.approx(one, rel=1e-12)
        assert squeezed_overlap(1, 1, r, lt).real == pytest.approx(one**3, rel=1e-12)
        assert squeezed_overlap(0, 2, r, lt).real == pytest.approx(y * one**3, rel=1e-12)


def test_overlap_parity_zeros_exact():
    for n1, n2 in ((0, 1), (1, 2), (2, 3), (0, 3), (1, 4)):
        assert squeezed_overlap(n1, n2, 0.8, 0.9) == 0j
