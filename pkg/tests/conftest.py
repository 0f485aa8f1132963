#-*- coding: utf-8 -*-

import numpy as np
import pytest

from mimosim.channel import (ChannelStats, ChannelStatsRaw, exp_correlation, to_equivalent,
                             draw_channel_mean)
from mimosim.configuration import SimConfig


@pytest.fixture
def make_stats():
    """
    Factory for per-user equivalent statistics with exponential correlations.
    """
    def factory(seed=0, k=2, m=4, n=2, w=10.0, rho_tx=0.9, rho_rx=0.0):
        rng = np.random.default_rng(seed)
        rx = exp_correlation(n, rho_rx)
        tx = exp_correlation(m, rho_tx)
        return [to_equivalent(ChannelStatsRaw(draw_channel_mean(n, m, rng), rx, tx, w))
                for _ in range(k)]
    return factory


@pytest.fixture
def scalar_stats():
    """
    Factory for single-antenna statistics with mean h and receive correlation r.
    """
    def factory(h=1.0, r=0.0):
        return ChannelStats(np.array([[h]]), np.array([[r]]), np.array([[1.0]]))
    return factory


@pytest.fixture
def small_config():
    """
    A configuration that runs every experiment in well under a second.
    """
    return SimConfig(m=2, k=1, n=1, l=1, w_list=[10.0], snr_db_list=[0.0, 10.0],
                     mse_snr_db=10.0, n_trials=3, n_real=2, n_sym=10, max_iterations=20)


def numerical_gradient(func, mats, h=1.0e-5):
    """
    Central-difference gradient of a real function with respect to the real and
    imaginary parts of every entry of a list of complex matrices.
    """
    grads = []
    for mat in mats:
        grad = np.zeros(mat.shape, dtype=complex)
        for index in np.ndindex(mat.shape):
            for unit in (1.0, 1.0j):
                orig = mat[index]
                mat[index] = orig + unit * h
                fplus = func()
                mat[index] = orig - unit * h
                fminus = func()
                mat[index] = orig
                grad[index] += unit * (fplus - fminus) / (2.0 * h)
        grads.append(grad)
    return grads

# end of file
