"""State containers, constructors, and ladder maps."""

import math

import numpy as np
import pytest

from heraldkit import (
    CutoffError,
    DiagonalMixture,
    ModeEnsemble,
    SingleModeState,
    TruncationConfig,
    TwoModeState,
    coherent_state,
    fock_state,
    lower_a,
    lower_b,
    lower_mode,
    raise_a,
    raise_mode,
    squeezed_vacuum_state,
    tensor_with_number,
    thermal_weights,
)


def test_truncation_config_validation():
    cfg = TruncationConfig(10, 12)
    assert cfg.shape == (11, 13)
    with pytest.raises(ValueError):
        TruncationConfig(0, 12)
    with pytest.raises(ValueError):
        TruncationConfig(10, 500)


def test_fock_state_is_unit_vector():
    st = fock_state(3, 8)
    assert st.normalized
    assert st.norm_sq() == pytest.approx(1.0, abs=0)
    assert st.amplitudes[3] == 1.0
    assert np.count_nonzero(st.amplitudes) == 1
    with pytest.raises(ValueError):
        fock_state(9, 8)


def test_states_are_immutable():
    st = fock_state(0, 4)
    with pytest.raises(ValueError):
        st.amplitudes[0] = 2.0
    grid = TruncationConfig(2, 2)
    two = tensor_with_number(fock_state(1, 2), 0, grid)
    with pytest.raises(ValueError):
        two.amplitudes[0, 0] = 1.0


def test_normalized_flag_is_checked():
    with pytest.raises(ValueError):
        SingleModeState(np.array([1.0, 1.0], dtype=complex), normalized=True)
    st = SingleModeState(np.array([1.0, 1.0], dtype=complex), normalized=False)
    assert st.norm_sq() == pytest.approx(2.0, rel=1e-15)
    assert st.renormalized().norm_sq() == pytest.approx(1.0, rel=1e-15)


def test_coherent_amplitudes_match_poisson():
    alpha = 1.3 - 0.4j
    st = coherent_state(alpha, 30)
    mean = abs(alpha) ** 2
    env = math.exp(-mean / 2.0)
    for n in (0, 1, 2, 5):
        want = env * alpha**n / math.sqrt(math.factorial(n))
        assert st.amplitudes[n] == pytest.approx(want, rel=1e-13)
    assert st.norm_sq() == pytest.approx(1.0, abs=1e-12)


def test_coherent_rejects_too_small_grid():
    with pytest.raises(CutoffError) as exc:
        coherent_state(6.0, 12)
    assert exc.value.tail_mass > 1e-6


def test_squeezed_vacuum_even_support_and_weights():
    r = 1.0
    st = squeezed_vacuum_state(r, 60)
    probs = st.probabilities()
    assert np.all(probs[1::2] == 0.0)
    assert probs[0] == pytest.approx(1.0 / math.cosh(r), rel=1e-14)
    # |<2|sq>|^2 = tanh^2 r / (2 cosh r)
    assert probs[2] == pytest.approx(math.tanh(r) ** 2 / (2.0 * math.cosh(r)), rel=1e-13)
    assert st.norm_sq() == pytest.approx(1.0, abs=1e-8)


def test_thermal_weights_geometric():
    nbar = 2.0
    weights, tail = thermal_weights(nbar, 80)
    q = nbar / (1.0 + nbar)
    assert weights[0] == pytest.approx(1.0 / 3.0, rel=1e-15)
    assert weights[5] == pytest.approx(q**5 / 3.0, rel=1e-13)
    assert tail == pytest.approx(5.452654957103163e-15, rel=1e-12)
    assert weights.sum() + tail == pytest.approx(1.0, abs=1e-13)


def test_tensor_with_number_layout():
    cfg = TruncationConfig(3, 2)
    st = tensor_with_number(fock_state(2, 3), 1, cfg)
    assert st.amplitudes.shape == (4, 3)
    assert st.amplitudes[2, 1] == 1.0
    assert st.norm_sq() == pytest.approx(1.0, abs=0)
    with pytest.raises(ValueError):
        tensor_with_number(fock_state(2, 3), 5, cfg)


def test_single_mode_ladders():
    st = fock_state(2, 5)
    up = raise_mode(st)
    assert up.amplitudes[3] == pytest.approx(math.sqrt(3.0))
    assert not up.normalized
    down = lower_mode(st)
    assert down.amplitudes[1] == pytest.approx(math.sqrt(2.0))
    with pytest.raises(ValueError):
        raise_mode(fock_state(5, 5))
    vac = lower_mode(fock_state(0, 5))
    assert vac.norm_sq() == 0.0


def test_two_mode_ladders():
    cfg = TruncationConfig(4, 4)
    st = tensor_with_number(fock_state(3, 4), 2, cfg)
    la = lower_a(st)
    assert la.amplitudes[2, 2] == pytest.approx(math.sqrt(3.0))
    lb = lower_b(st)
    assert lb.amplitudes[3, 1] == pytest.approx(math.sqrt(2.0))
    ra = raise_a(st)
    assert ra.amplitudes[4, 2] == pytest.approx(2.0)
    with pytest.raises(ValueError):
        raise_a(tensor_with_number(fock_state(4, 4), 2, cfg))


def test_diagonal_mixture_moments_input():
    probs = np.array([0.25, 0.5, 0.25])
    mix = DiagonalMixture(probs)
    assert mix.probabilities() == pytest.approx(probs)
    with pytest.raises(ValueError):
        DiagonalMixture(np.array([0.5, -0.1, 0.6]))


def test_mode_ensemble_weight_rules():
    cfg = TruncationConfig(3, 3)
    member = tensor_with_number(fock_state(0, 3), 1, cfg)
    ens = ModeEnsemble(((0.6, member), (0.3, member)))
    assert ens.total_weight() == pytest.approx(0.9)
    assert ens.config == cfg
    with pytest.raises(ValueError):
        ModeEnsemble(((0.8, member), (0.8, member)))
    with pytest.raises(ValueError):
        ModeEnsemble(((-0.1, member),))


def test_renormalized_marks_flag():
    st = SingleModeState(np.array([0.5, 0.5], dtype=complex), normalized=False)
    rn = st.renormalized()
    assert rn.normalized
    assert rn.norm_sq() == pytest.approx(1.0, rel=1e-15)
