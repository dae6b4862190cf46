"""Closed-form observables of the heralded mode-a states.

For each input scenario (coherent, thermal, geometric-diagonal; squeezed
vacuum) the heralded state after detecting N photons on mode b has analytic
normalization, mean photon number, Mandel Q and photon-number distribution.
This module evaluates those expressions directly, with no truncated dynamics
involved; the numerical pipeline (dynamics + heralding + observables) serves
as the independent cross-check, wired up in :mod:`heraldkit.scenarios`.

Numerical policy: factorial-bearing coefficients are either reduced
symbolically until only small factorials remain, or evaluated as a
log-magnitude plus a unit-modulus phase and recombined per term.  Degenerate
limits (lambda_t = 0, pi/2; parity-forbidden outcomes) are reached exactly,
with the convention 0**0 = 1 and H_n(0) = 0 for n < 0.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "DegenerateHeraldError",
    "DegenerateInputError",
    "HeraldRecord",
    "CoherentCoefficients",
    "SqueezedCoefficients",
    "hermite_at_zero",
    "coherent_coeffs",
    "coherent_record",
    "thermal_record",
    "thermal_series_tail",
    "squeezed_overlap",
    "squeezed_coeffs",
    "squeezed_record",
]

# herald probabilities below this are reported as exactly zero
DEGENERATE_PROBABILITY = 1e-14
# below this mean the Mandel parameter is undefined
MEAN_UNDEFINED = 1e-14


class DegenerateHeraldError(ValueError):
    """The requested outcome has (numerically) zero probability."""


class DegenerateInputError(ValueError):
    """The input scenario degenerates (e.g. zero squeezing); closed forms do not apply."""


@dataclass(frozen=True, eq=False)
class HeraldRecord:
    """Observables of one heralded state; None marks undefined entries."""

    lambda_t: float
    mean: float | None
    mandel_q: float | None
    herald_prob: float
    distribution: np.ndarray | None


@dataclass(frozen=True, eq=False)
class CoherentCoefficients:
    """Amplitudes of the two-term collapsed state for a coherent input.

    The heralded state is proportional to
    alpha0 |c alpha> - i alpha1 adag |c alpha>, and norm_c is its squared
    norm, which equals the herald probability.
    """

    alpha0: complex
    alpha1: complex
    norm_c: float


@dataclass(frozen=True, eq=False)
class SqueezedCoefficients:
    """Polynomial coefficients and Gaussian overlaps for a squeezed-vacuum input.

    The heralded state is proportional to
    sum_m q[m] adag^m exp((tanh r / 2) cos^2(lambda_t) adag^2) |0>;
    ``overlaps[i, j]`` holds the Gaussian moments needed up to the second
    antinormal moment, and norm_sq is the herald probability.
    """

    q: np.ndarray
    norm_sq: float
    overlaps: np.ndarray


def _degenerate(lambda_t: float) -> HeraldRecord:
    return HeraldRecord(lambda_t, None, None, 0.0, None)


def _scaled_power(base: complex, k: int, extra_log: float) -> complex:
    """base**k * exp(extra_log) with the 0**0 = 1 convention, magnitude in log domain."""
    if k == 0:
        return complex(math.exp(extra_log))
    mag = abs(base)
    if mag == 0.0:
        return 0j
    return cmath.rect(math.exp(k * math.log(mag) + extra_log), k * cmath.phase(base))


def hermite_at_zero(n: int) -> int:
    """Hermite polynomial H_n evaluated at 0, as an exact integer.

    H_{2k}(0) = (-1)^k (2k)!/k!, odd orders vanish, and negative orders are
    defined as 0 (the value every formula here needs at its boundary terms).
    """
    if n < 0 or n % 2 == 1:
        return 0
    k = n // 2
    value = math.factorial(n) // math.factorial(k)
    return -value if k % 2 else value


# ---------------------------------------------------------------------------
# coherent input


def coherent_coeffs(alpha: complex, n_detected: int, lambda_t: float) -> CoherentCoefficients:
    """Collapsed-state amplitudes after heralding ``n_detected`` photons.

    Raises :class:`DegenerateHeraldError` when the outcome probability is
    below 1e-14 (e.g. n_detected >= 2 at lambda_t = 0).
    """
    if n_detected < 1:
        raise ValueError("closed forms cover n_detected >= 1; use the oracle pipeline for N = 0")
    alpha = complex(alpha)
    c = math.cos(lambda_t)
    s = math.sin(lambda_t)
    n = n_detected
    beta = -1j * alpha * s
    env_log = -0.5 * (abs(alpha) * s) ** 2
    alpha0 = c * math.sqrt(n) * _scaled_power(beta, n - 1, env_log - 0.5 * math.lgamma(n))
    alpha1 = s * _scaled_power(beta, n, env_log - 0.5 * math.lgamma(n + 1))
    ca2 = (abs(alpha) * c) ** 2
    # i c (alpha a0 conj(a1) - conj(...)) collapses to -2 c Im(alpha a0 conj(a1))
    cross = -2.0 * c * (alpha * alpha0 * alpha1.conjugate()).imag
    norm_c = abs(alpha0) ** 2 + abs(alpha1) ** 2 * (1.0 + ca2) + cross
    if norm_c < DEGENERATE_PROBABILITY:
        raise DegenerateHeraldError(
            f"herald probability {norm_c:.3e} below 1e-14 for N={n} at lambda_t={lambda_t}"
        )
    return CoherentCoefficients(alpha0, alpha1, float(norm_c))


def coherent_record(alpha: complex, n_detected: int, lambda_t: float, n_cut: int) -> HeraldRecord:
    """Heralded-state observables for a coherent input, all in closed form."""
    if n_cut < 1:
        raise ValueError("n_cut must be >= 1")
    try:
        co = coherent_coeffs(alpha, n_detected, lambda_t)
    except DegenerateHeraldError:
        return _degenerate(lambda_t)
    alpha = complex(alpha)
    c = math.cos(lambda_t)
    u = c * alpha
    ca2 = abs(u) ** 2
    a0, a1, norm_c = co.alpha0, co.alpha1, co.norm_c

    mean = (ca2 * abs(a1) ** 2 + abs(u * a0 - 1j * (1.0 + ca2) * a1) ** 2) / norm_c
    if mean < MEAN_UNDEFINED:
        mandel_q = None
    else:
        mandel_q = (ca2 / (mean * norm_c)) * (
            ca2 * abs(a1) ** 2 + abs(u * a0 - 1j * (2.0 + ca2) * a1) ** 2
        ) - mean

    dist = np.zeros(n_cut + 1, dtype=float)
    if abs(u) == 0.0:
        # collapsed state is a0|0> - i a1|1>
        dist[0] = abs(a0) ** 2 / norm_c
        dist[1] = abs(a1) ** 2 / norm_c
    else:
        log_u2 = 2.0 * math.log(abs(u))
        dist[0] = math.exp(-ca2) * abs(a0) ** 2 / norm_c
        for n in range(1, n_cut + 1):
            scale = math.exp(-ca2 + (n - 1) * log_u2 - math.lgamma(n + 1))
            dist[n] = scale * abs(u * a0 - 1j * n * a1) ** 2 / norm_c
    return HeraldRecord(lambda_t, float(mean), mandel_q, norm_c, dist)


# ---------------------------------------------------------------------------
# thermal input


def _thermal_terms(nbar: float, n_detected: int, lambda_t: float, m_cut: int) -> np.ndarray:
    """Unnormalized collapsed weights w_m, m = 0..m_cut; their sum is the herald probability."""
    n = n_detected
    q = nbar / (1.0 + nbar)
    c2 = math.cos(lambda_t) ** 2
    s2 = math.sin(lambda_t) ** 2
    s_pow = s2 ** (n - 1)  # 0**0 == 1 covers N = 1 at lambda_t = 0
    p_before = q ** (n - 1) / (1.0 + nbar)  # thermal weight P_{N-1}
    w = np.zeros(m_cut + 1, dtype=float)
    # the m = 0 term of the series has c^{2m-2} cancelled symbolically,
    # which keeps lambda_t = pi/2 exact
    w[0] = p_before * s_pow * c2 * n
    base = p_before * q * s_pow  # P_N * s^(2N-2), i.e. the m = 1 base weight
    for m in range(1, m_cut + 1):
        w[m] = base * (s2 * m - c2 * n) ** 2
        base *= q * c2 * (n + m) / (m + 1.0)
    return w


def thermal_record(nbar: float, n_detected: int, lambda_t: float, m_cut: int) -> HeraldRecord:
    """Heralded-state observables for a thermal input (diagonal in photon number).

    The analytic series is truncated at m_cut; see
    :func:`thermal_series_tail` for a bound on the discarded terms.
    """
    if n_detected < 1:
        raise ValueError("closed forms cover n_detected >= 1; use the oracle pipeline for N = 0")
    if nbar < 0 or not math.isfinite(nbar):
        raise ValueError("thermal mean nbar must be finite and >= 0")
    if m_cut < 1:
        raise ValueError("m_cut must be >= 1")
    w = _thermal_terms(nbar, n_detected, lambda_t, m_cut)
    norm_t = float(w.sum())
    if norm_t < DEGENERATE_PROBABILITY:
        return _degenerate(lambda_t)
    m = np.arange(m_cut + 1, dtype=float)
    mean = float(np.dot(m, w)) / norm_t
    if mean < MEAN_UNDEFINED:
        mandel_q = None
    else:
        fall2 = float(np.dot(m * (m - 1.0), w)) / norm_t  # <n(n-1)>
        mandel_q = fall2 / mean - mean
    return HeraldRecord(lambda_t, mean, mandel_q, norm_t, w / norm_t)


def thermal_series_tail(nbar: float, n_detected: int, lambda_t: float, m_cut: int) -> float:
    """Upper bound on the collapsed-weight series mass beyond m_cut.

    Sums 60 further terms exactly, then bounds the remainder by a geometric
    envelope; returns inf if the envelope ratio has not fallen below 1.
    """
    extra = 60
    n = n_detected
    q = nbar / (1.0 + nbar)
    c2 = math.cos(lambda_t) ** 2
    s2 = math.sin(lambda_t) ** 2
    w = _thermal_terms(nbar, n_detected, lambda_t, m_cut + extra)
    tail = float(w[m_cut + 1 :].sum())
    top = m_cut + extra
    envelope = float(w[top]) if s2 * top >= c2 * n else (
        # envelope (s2 m + c2 N)^2 >= (s2 m - c2 N)^2 rebuilt from the last term
        float(w[top]) * ((s2 * top + c2 * n) / max(abs(s2 * top - c2 * n), 1e-300)) ** 2
    )
    ratio = q * c2 * (n + top) / (top + 1.0)
    if s2 > 0.0:
        ratio *= ((s2 * (top + 1) + c2 * n) / (s2 * top + c2 * n)) ** 2
    if ratio >= 1.0:
        return math.inf
    return tail + envelope * ratio / (1.0 - ratio)


# ---------------------------------------------------------------------------
# squeezed-vacuum input


def _signed_log_hermite(n: int) -> tuple[int, float]:
    """(sign, log |H_n(0)|); sign 0 encodes H_n(0) = 0."""
    if n < 0 or n % 2 == 1:
        return 0, -math.inf
    k = n // 2
    return (-1 if k % 2 else 1), math.lgamma(n + 1) - math.lgamma(k + 1)


def squeezed_overlap(n1: int, n2: int, r: float, lambda_t: float) -> complex:
    """Gaussian moment <0| e^{g a^2} a^{n1} adag^{n2} e^{g adag^2} |0> with g = (tanh r / 2) cos^2(lambda_t).

    Evaluated by the double binomial sum over Hermite values at zero, with
    per-term magnitudes kept in log domain.  The value is real; outcomes with
    n1 + n2 odd vanish identically.
    """
    if n1 < 0 or n2 < 0:
        raise ValueError("n1 and n2 must be >= 0")
    if r < 0 or not math.isfinite(r):
        raise ValueError("squeezing parameter r must be finite and >= 0")
    if (n1 + n2) % 2 == 1:
        return 0j
    y = math.tanh(r) * math.cos(lambda_t) ** 2
    log_dm = -0.5 * math.log1p(-y)  # log 1/sqrt(1 - y)
    log_dp = -0.5 * math.log1p(y)
    log_pref = -(n1 + n2) * math.log(2.0) - 0.5 * (math.log1p(-y * y))
    best = -math.inf
    terms: list[tuple[float, int]] = []
    for m1 in range(n1 + 1):
        for m2 in range(n2 + 1):
            e1 = n2 + m1 - m2
            e2 = n1 + m2 - m1
            sgn1, logh1 = _signed_log_hermite(e1)
            sgn2, logh2 = _signed_log_hermite(e2)
            if sgn1 == 0 or sgn2 == 0:
                continue
            # (-i)^(n2 + m1 + m2) is real (+-1) whenever both Hermite orders are even
            k = n2 + m1 + m2
            sgn = sgn1 * sgn2 * (-1 if (k // 2) % 2 else 1)
            log_mag = (
                log_pref
                + _log_comb(n1, m1)
                + _log_comb(n2, m2)
                + e1 * log_dm
                + e2 * log_dp
                + logh1
                + logh2
            )
            terms.append((log_mag, sgn))
            best = max(best, log_mag)
    if not terms or best == -math.inf:
        return 0j
    acc = 0.0
    for log_mag, sgn in terms:
        acc += sgn * math.exp(log_mag - best)
    return complex(acc * math.exp(best))


def _log_comb(n: int, k: int) -> float:
    return math.lgamma(n + 1) - math.lgamma(k + 1) - math.lgamma(n - k + 1)


def _squeezed_q(n_detected: int, tau: float, c: float, s: float) -> np.ndarray:
    """Polynomial coefficients q_m, m = 0..N+1, of the collapsed squeezed state.

    All factorial ratios are cancelled symbolically: only 1/k! factors with
    k <= (N+1)/2 survive, so the coefficients stay in range for any cutoff.
    """
    n = n_detected
    q = np.zeros(n + 2, dtype=complex)
    base = -1j * math.sqrt(2.0 * tau) * c
    if n % 2 == 1:
        k0 = (n - 1) // 2
        sign = -1.0 if k0 % 2 else 1.0
        q[0] = 1j * c * sign / (math.sqrt(2.0 * tau) * math.factorial(k0))
    for m in range(1, n + 2):
        term = 0.0
        if n - 1 - m >= 0 and (n - 1 - m) % 2 == 0:
            k1 = (n - 1 - m) // 2
            sign = -1.0 if k1 % 2 else 1.0
            term += c * c * sign / (math.factorial(k1) * math.factorial(m))
        if n + 1 - m >= 0 and (n + 1 - m) % 2 == 0:
            k2 = (n + 1 - m) // 2
            sign = -1.0 if k2 % 2 else 1.0
            term += 0.5 * s * s * sign / (math.factorial(k2) * math.factorial(m - 1))
        if term != 0.0:
            q[m] = _scaled_power(base, m - 1, 0.0) * term
    return q


def _squeezed_log_pref(n_detected: int, tau: float, s: float, cosh_r: float) -> float:
    """log of the global scale 2 tau N! (tau s^2 / 2)^(N-1) / cosh r; -inf when it vanishes."""
    n = n_detected
    out = math.log(2.0 * tau) - math.log(cosh_r) + math.lgamma(n + 1)
    if n > 1:
        if s == 0.0:
            return -math.inf
        out += (n - 1) * math.log(tau * s * s / 2.0)
    return out


def squeezed_coeffs(r: float, n_detected: int, lambda_t: float) -> SqueezedCoefficients:
    """Collapsed-state data for a squeezed-vacuum input heralded on ``n_detected``.

    Raises :class:`DegenerateInputError` at r = 0 (no squeezing: the closed
    forms collapse; use the oracle pipeline instead).
    """
    if n_detected < 1:
        raise ValueError("closed forms cover n_detected >= 1; use the oracle pipeline for N = 0")
    if r <= 0 or not math.isfinite(r):
        raise DegenerateInputError("squeezed closed forms need r > 0")
    n = n_detected
    tau = math.tanh(r)
    c = math.cos(lambda_t)
    s = math.sin(lambda_t)
    q = _squeezed_q(n, tau, c, s)
    size = n + 4
    overlaps = np.zeros((size, size), dtype=complex)
    for i in range(size):
        for j in range(i, size):
            val = squeezed_overlap(i, j, r, lambda_t)
            overlaps[i, j] = val
            overlaps[j, i] = val.conjugate()
    log_pref = _squeezed_log_pref(n, tau, s, math.cosh(r))
    if log_pref == -math.inf:
        norm_sq = 0.0
    else:
        quad = float(np.real(q.conjugate() @ overlaps[: n + 2, : n + 2] @ q))
        norm_sq = max(0.0, math.exp(log_pref) * quad)
    return SqueezedCoefficients(q, norm_sq, overlaps)


def squeezed_record(r: float, n_detected: int, lambda_t: float, n_cut: int) -> HeraldRecord:
    """Heralded-state observables for a squeezed-vacuum input, all in closed form."""
    if n_cut < 1:
        raise ValueError("n_cut must be >= 1")
    co = squeezed_coeffs(r, n_detected, lambda_t)
    prob = co.norm_sq
    if prob < DEGENERATE_PROBABILITY:
        return _degenerate(lambda_t)
    n = n_detected
    q = co.q
    # the global scale cancels in every normalized moment
    quad0 = float(np.real(q.conjugate() @ co.overlaps[: n + 2, : n + 2] @ q))
    quad1 = float(np.real(q.conjugate() @ co.overlaps[1 : n + 3, 1 : n + 3] @ q))
    quad2 = float(np.real(q.conjugate() @ co.overlaps[2 : n + 4, 2 : n + 4] @ q))
    mean = quad1 / quad0 - 1.0
    if mean < MEAN_UNDEFINED:
        mandel_q = None
    else:
        a2ad2 = quad2 / quad0
        mandel_q = (a2ad2 - 2.0) / mean - mean - 4.0

    tau = math.tanh(r)
    c = math.cos(lambda_t)
    s = math.sin(lambda_t)
    log_pref = _squeezed_log_pref(n, tau, s, math.cosh(r))
    x = tau * c * c / 2.0
    log_x = math.log(x) if x > 0.0 else -math.inf
    dist = np.zeros(n_cut + 1, dtype=float)
    for level in range(n_cut + 1):
        logs: list[float] = []
        phases: list[float] = []
        for m in range(min(level, n + 1) + 1):
            if (level - m) % 2 == 1 or q[m] == 0:
                continue
            k = (level - m) // 2
            if k > 0 and x == 0.0:
                continue
            log_t = 0.5 * math.lgamma(level + 1) + k * log_x - math.lgamma(k + 1) + math.log(abs(q[m]))
            logs.append(log_t)
            phases.append(cmath.phase(q[m]))
        if not logs:
            continue
        top = max(logs)
        amp = sum(math.exp(lg - top) * cmath.exp(1j * ph) for lg, ph in zip(logs, phases))
        dist[level] = math.exp(2.0 * top + log_pref - math.log(prob)) * abs(amp) ** 2
    return HeraldRecord(lambda_t, float(mean), mandel_q, prob, dist)
