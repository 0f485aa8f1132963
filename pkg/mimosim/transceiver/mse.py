#-*- coding: utf-8 -*-

"""
Closed-form average MSE of a linear transceiver over the statistical channel.

For user j with precoders B_k, receiver A_j and S = sum_k B_k B_k^H:

    MSE_j = tr(A_j^H H_j S H_j^H A_j) + sigma^2 tr(A_j^H A_j)
            - 2 Re tr(A_j^H H_j B_j) + L
            + tr(A_j^H R_rj A_j) tr(S R_t)

where H_j is the channel mean. The last term is the average of the scattered
component over Delta; dropping it gives the perfect-CSI objective.
"""

import numpy as np


def check_shapes(design, stats):
    """
    Raise ValueError unless the design matches the channel statistics.
    """
    if len(stats) != design.k:
        raise ValueError('Design has %d users but %d channel statistics given'
                         % (design.k, len(stats)))
    nstream = design.precoders[0].shape[1]
    for j, (b, a, st) in enumerate(zip(design.precoders, design.receivers, stats)):
        if b.shape != (st.m, nstream):
            raise ValueError('Precoder %d has shape %s, expected (%d, %d)'
                             % (j, b.shape, st.m, nstream))
        if a.shape != (st.n, nstream):
            raise ValueError('Receiver %d has shape %s, expected (%d, %d)'
                             % (j, a.shape, st.n, nstream))
    return


def _user_mse(a, b, stats_j, cov, noise_var, robust):
    h = stats_j.mean
    ah = a.conj().T @ h
    mse = np.trace(ah @ cov @ ah.conj().T).real
    mse += noise_var * np.vdot(a, a).real
    mse -= 2.0 * np.trace(ah @ b).real
    mse += a.shape[1]
    if robust:
        scatter = np.trace(a.conj().T @ stats_j.rx_corr @ a).real
        mse += scatter * np.trace(cov @ stats_j.tx).real
    return float(mse)


def per_user_mse(design, stats_j, noise_var, j, robust=True):
    """
    Average MSE of user j.

    Parameters
    ----------
    design: TransceiverDesign
        Precoders and receivers of all users.
    stats_j: ChannelStats
        Statistics of user j's channel.
    noise_var: float
        Noise variance per receive antenna, positive.
    j: int
        User index.
    robust: bool, optional
        Include the channel-uncertainty term. Default: True.
    """
    if not 0 <= j < design.k:
        raise IndexError('User index %d out of range for %d users' % (j, design.k))
    if not noise_var > 0.0:
        raise ValueError('noise_var must be positive, got %r' % noise_var)
    cov = design.transmit_covariance()
    return _user_mse(design.receivers[j], design.precoders[j], stats_j, cov, noise_var, robust)


def tmse(design, stats, noise_var, robust=True):
    """
    Total average MSE summed over users.
    """
    check_shapes(design, stats)
    if not noise_var > 0.0:
        raise ValueError('noise_var must be positive, got %r' % noise_var)
    cov = design.transmit_covariance()
    return float(sum(_user_mse(a, b, st, cov, noise_var, robust) for a, b, st in
                     zip(design.receivers, design.precoders, stats)))


def lagrangian(design, stats, noise_var, power, lam, robust=True):
    """
    TMSE + lambda * (tr(sum_k B_k B_k^H) - P).
    """
    return tmse(design, stats, noise_var, robust=robust) + lam * (design.transmit_power() - power)


# end of file
