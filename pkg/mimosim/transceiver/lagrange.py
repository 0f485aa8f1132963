#-*- coding: utf-8 -*-

"""
Power multiplier of the sum-power constrained precoder update.

With X = sum_k H_k^H A_k A_k^H H_k, Y = tr(sum_k A_k A_k^H R_rk) R_t and the
eigendecomposition X + Y = U D U^H, the transmit power at multiplier lambda is

    phi(lambda) = sum_n [U^H X U]_nn / (d_n + lambda)^2

which is strictly decreasing on [0, inf) whenever X != 0. The multiplier is zero
when phi(0) <= P and otherwise the root of phi(lambda) = P, found by bisection
between the brackets (sqrt(tr X / P) - d_max)^+ and (sqrt(tr X / P) - d_min)^+.
"""

import numpy as np
from scipy import linalg

from ..utilities import hermitian_part

# Eigenvalues below this (relative to max(1, d_max)) count as numerical corruption
NEGATIVE_TOL = 1.0e-10
# Eigenvalues below this (relative to max(1, d_max)) span the null space of X + Y
NULL_TOL = 1.0e-12
MAX_BISECTIONS = 200


def common_transmit_correlation(stats):
    """
    Transmit correlation shared by all users (the base station array).
    """
    tx = stats[0].tx
    for st in stats[1:]:
        if st.tx.shape != tx.shape or not np.allclose(st.tx, tx):
            raise ValueError('All users must share the transmit correlation matrix')
    return tx


def transmit_gram(receivers, stats, robust=True):
    """
    Build the Hermitian PSD matrices X and Y of the precoder system.

    Parameters
    ----------
    receivers: list of (N_k,L) np.ndarray
        Receive matrices A_k.
    stats: list of ChannelStats
        Statistics of every user's channel.
    robust: bool, optional
        If False, Y is zero (perfect-CSI design). Default: True.

    Returns
    -------
    X: (M,M) np.ndarray
    Y: (M,M) np.ndarray
    """
    if len(receivers) != len(stats):
        raise ValueError('Need one receiver per user (%d != %d)' % (len(receivers), len(stats)))
    tx = common_transmit_correlation(stats)
    m = tx.shape[0]
    X = np.zeros((m, m), dtype=complex)
    scatter = 0.0
    for a, st in zip(receivers, stats):
        g = st.mean.conj().T @ a
        X += g @ g.conj().T
        if robust:
            scatter += np.trace(a.conj().T @ st.rx_corr @ a).real
    Y = scatter * tx
    return hermitian_part(X), hermitian_part(Y)


def decompose(X, Y):
    """
    Eigenvalues d of X + Y and the diagonal q of U^H X U, both clamped at zero.
    """
    d, U = linalg.eigh(hermitian_part(X + Y))
    scale = max(1.0, float(np.max(np.abs(d)))) if d.size else 1.0
    if d.size and d.min() < -NEGATIVE_TOL * scale:
        raise ValueError('X + Y has a negative eigenvalue %.3e' % d.min())
    d = np.clip(d, 0.0, None)
    q = np.clip(np.einsum('ij,jk,ki->i', U.conj().T, X, U).real, 0.0, None)
    return d, q, U


def transmit_power(lam, d, q):
    """
    Transmit power phi(lambda) = sum_n q_n / (d_n + lambda)^2.

    Terms with d_n + lambda == 0 contribute zero when q_n is zero and infinity otherwise.
    """
    denom = (np.asarray(d, dtype=float) + lam)**2
    q = np.asarray(q, dtype=float)
    with np.errstate(divide='ignore', invalid='ignore'):
        terms = np.where(q > 0.0, q / denom, 0.0)
    return float(np.sum(terms))


def _power_at_zero(d, q):
    # Pseudo-inverse restricted to the range of X + Y; X energy in the null space
    # makes the constraint active.
    tol = NULL_TOL * max(1.0, float(d.max())) if d.size else 0.0
    null = d <= tol
    if np.any(q[null] > tol):
        return np.inf
    keep = ~null
    return float(np.sum(q[keep] / d[keep]**2))


def brackets(trace_x, d, power):
    root = np.sqrt(trace_x / power)
    lower = max(root - float(d.max()), 0.0)
    upper = max(root - float(d.min()), 0.0)
    return lower, upper


def lambda_brackets(X, Y, power):
    """
    Lower and upper bounds on the multiplier, obtained by replacing every eigenvalue
    of X + Y with its maximum and minimum respectively.
    """
    d, q, U = decompose(X, Y)
    return brackets(np.sum(q), d, power)


def solve_multiplier(X, Y, power, bisection_tol=1.0e-10):
    """
    Multiplier for given X and Y.

    Returns
    -------
    lam: float
    d: (M,) np.ndarray
        Eigenvalues of X + Y.
    U: (M,M) np.ndarray
        Eigenvectors of X + Y.
    """
    if not power > 0.0:
        raise ValueError('power must be positive, got %r' % power)
    d, q, U = decompose(X, Y)
    trace_x = float(np.sum(q))
    if trace_x <= 0.0:
        return 0.0, d, U

    # Inactive constraint
    if _power_at_zero(d, q) <= power:
        return 0.0, d, U

    lower, upper = brackets(trace_x, d, power)
    target = bisection_tol * power
    phi_lower = transmit_power(lower, d, q)
    if lower > 0.0 and abs(phi_lower - power) <= target:
        return lower, d, U
    phi_upper = transmit_power(upper, d, q)
    if abs(phi_upper - power) <= target:
        return upper, d, U
    if phi_lower < power or phi_upper > power:
        # No root between the bounds
        return 0.0, d, U

    # Bisection on the power mismatch
    for count in range(MAX_BISECTIONS):
        lam = 0.5 * (lower + upper)
        phi = transmit_power(lam, d, q)
        if abs(phi - power) <= target:
            return lam, d, U
        if phi > power:
            lower = lam
        else:
            upper = lam
        if upper - lower <= np.finfo(float).eps * upper:
            break

    # The upper end always satisfies the power budget
    return upper, d, U


def solve_lambda(receivers, stats, power, bisection_tol=1.0e-10, robust=True):
    """
    Lagrange multiplier of the sum-power constraint for fixed receivers.

    Parameters
    ----------
    receivers: list of (N_k,L) np.ndarray
        Receive matrices A_k.
    stats: list of ChannelStats
        Statistics of every user's channel.
    power: float
        Total transmit power P.
    bisection_tol: float, optional
        Relative tolerance on the matched transmit power. Default: 1e-10.
    robust: bool, optional
        Include the channel-uncertainty matrix Y. Default: True.

    Returns
    -------
    lam: float
    """
    X, Y = transmit_gram(receivers, stats, robust=robust)
    return solve_multiplier(X, Y, power, bisection_tol=bisection_tol)[0]


# end of file
