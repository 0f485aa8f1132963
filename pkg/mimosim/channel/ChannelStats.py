#-*- coding: utf-8 -*-

import numpy as np

from .correlation import CorrelationMatrix, check_hermitian, psd_sqrt
from ..utilities import complex_normal


def _frozen(arr):
    arr = np.array(arr, dtype=complex)
    arr.setflags(write=False)
    return arr


class ChannelStatsRaw:
    """
    Statistical channel knowledge in the raw Rician/Kronecker form:

        H = sqrt(w/(w+1)) * mean0 + sqrt(1/(w+1)) * rxCorr0^{1/2} Delta txCorr^{1/2}

    A w of numpy.inf denotes a channel equal to its mean.
    """

    def __init__(self, mean0, rx_corr0, tx_corr, w):
        """
        Parameters
        ----------
        mean0: (N,M) array type
            Normalized channel mean (unit average power per entry).
        rx_corr0: CorrelationMatrix or (N,N) array type
            Normalized receive correlation matrix.
        tx_corr: CorrelationMatrix or (M,M) array type
            Normalized transmit correlation matrix.
        w: float
            Ratio of the power in the mean component to the scattered power.
        """
        if not isinstance(rx_corr0, CorrelationMatrix):
            rx_corr0 = CorrelationMatrix(rx_corr0)
        if not isinstance(tx_corr, CorrelationMatrix):
            tx_corr = CorrelationMatrix(tx_corr)
        mean0 = _frozen(mean0)
        if mean0.ndim != 2:
            raise ValueError('Channel mean must be a matrix')
        if not np.all(np.isfinite(mean0)):
            raise ValueError('Channel mean has non-finite entries')
        if mean0.shape != (rx_corr0.dim, tx_corr.dim):
            raise ValueError('Channel mean shape %s inconsistent with correlations (%d, %d)'
                             % (mean0.shape, rx_corr0.dim, tx_corr.dim))
        w = float(w)
        if not w >= 0.0:
            raise ValueError('Power ratio w must be nonnegative, got %r' % w)
        self.mean0 = mean0
        self.rx_corr0 = rx_corr0
        self.tx_corr = tx_corr
        self.w = w
        return

    @property
    def shape(self):
        return self.mean0.shape

    def __repr__(self):
        return 'ChannelStatsRaw(N=%d, M=%d, w=%g)' % (self.shape + (self.w,))


class ChannelStats:
    """
    Equivalent statistical channel H = mean + rxCorr^{1/2} Delta txCorr^{1/2}, where the
    receive correlation already carries the 1/(w+1) scattering power.
    """

    def __init__(self, mean, rx_corr, tx_corr):
        """
        Parameters
        ----------
        mean: (N,M) array type
            Channel mean.
        rx_corr: (N,N) array type
            Hermitian PSD receive correlation (not unit diagonal).
        tx_corr: CorrelationMatrix or (M,M) array type
            Normalized transmit correlation.
        """
        if not isinstance(tx_corr, CorrelationMatrix):
            tx_corr = CorrelationMatrix(tx_corr)
        mean = _frozen(mean)
        rx_corr = _frozen(rx_corr)
        if mean.ndim != 2 or rx_corr.ndim != 2 or rx_corr.shape[0] != rx_corr.shape[1]:
            raise ValueError('Channel mean and receive correlation must be matrices')
        if mean.shape != (rx_corr.shape[0], tx_corr.dim):
            raise ValueError('Channel mean shape %s inconsistent with correlations (%d, %d)'
                             % (mean.shape, rx_corr.shape[0], tx_corr.dim))
        check_hermitian(rx_corr)

        self.mean = mean
        self.rx_corr = rx_corr
        self.tx_corr = tx_corr

        # The square-root factors are reused for every realization
        self.rx_sqrt = _frozen(psd_sqrt(rx_corr))
        self.tx_sqrt = _frozen(psd_sqrt(tx_corr.entries))
        return

    @property
    def shape(self):
        return self.mean.shape

    @property
    def n(self):
        return self.mean.shape[0]

    @property
    def m(self):
        return self.mean.shape[1]

    @property
    def tx(self):
        """
        Transmit correlation entries as an ndarray.
        """
        return self.tx_corr.entries

    def __repr__(self):
        return 'ChannelStats(N=%d, M=%d)' % self.shape


class ChannelRealization:
    """
    One drawn channel matrix.
    """

    def __init__(self, h):
        self.h = _frozen(h)
        return

    @property
    def shape(self):
        return self.h.shape


def to_equivalent(raw):
    """
    Convert the raw model to the equivalent model: the mean is scaled by sqrt(w/(w+1)) and
    the receive correlation by 1/(w+1). An infinite w keeps the mean and zeroes the
    scattering.
    """
    n = raw.rx_corr0.dim
    if np.isinf(raw.w):
        return ChannelStats(raw.mean0, np.zeros((n, n), dtype=complex), raw.tx_corr)
    w = raw.w
    mean = np.sqrt(w / (w + 1.0)) * raw.mean0
    rx_corr = raw.rx_corr0.entries / (w + 1.0)
    return ChannelStats(mean, rx_corr, raw.tx_corr)


def sample_channel(stats, rng):
    """
    Draw one channel realization H = mean + rxCorr^{1/2} Delta txCorr^{1/2} with Delta of
    i.i.d. standard complex Gaussian entries.

    Parameters
    ----------
    stats: ChannelStats
        Statistical channel knowledge.
    rng: numpy.random.Generator
        Random stream; consumed even when the scattering is zero.

    Returns
    -------
    realization: ChannelRealization
    """
    delta = complex_normal(rng, stats.shape)
    h = stats.mean + stats.rx_sqrt @ delta @ stats.tx_sqrt
    return ChannelRealization(h)


def draw_channel_mean(n, m, rng):
    """
    Normalized channel mean with i.i.d. standard complex Gaussian entries.
    """
    return complex_normal(rng, (int(n), int(m)))


def average_channel_power(stats):
    """
    Average channel power E||H||_F^2 = ||mean||_F^2 + tr(rxCorr) tr(txCorr).

    Accepts either ChannelStats or ChannelStatsRaw.
    """
    if isinstance(stats, ChannelStatsRaw):
        tr_tx = np.trace(stats.tx_corr.entries).real
        if np.isinf(stats.w):
            return float(np.vdot(stats.mean0, stats.mean0).real)
        w = stats.w
        mean_power = np.vdot(stats.mean0, stats.mean0).real * w / (w + 1.0)
        return float(mean_power + np.trace(stats.rx_corr0.entries).real * tr_tx / (w + 1.0))
    mean_power = np.vdot(stats.mean, stats.mean).real
    return float(mean_power + np.trace(stats.rx_corr).real * np.trace(stats.tx).real)


# end of file
