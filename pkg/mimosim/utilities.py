#-*- coding: utf-8 -*-

import numpy as np


def db2lin(value_db):
    """
    Convert decibels to a linear power ratio.
    """
    return 10.0**(np.asarray(value_db, dtype=float) / 10.0)


def noise_variance(snr_db, power=1.0):
    """
    Per-antenna noise variance for a total transmit power and SNR = P / sigma^2.
    """
    return float(power / db2lin(snr_db))


def mean_and_stderr(values):
    """
    Sample mean and standard error of the mean. A single value has zero error.

    Parameters
    ----------
    values: array type
        Per-trial statistics.

    Returns
    -------
    mean: float
    stderr: float
    """
    values = np.asarray(values, dtype=float)
    n = values.size
    if n == 0:
        raise ValueError('Cannot summarize an empty set of trials')
    mean = float(np.mean(values))
    if n == 1:
        return mean, 0.0
    return mean, float(np.std(values, ddof=1) / np.sqrt(n))


def stream(seed, *key):
    """
    Counter-based random stream. The stream depends only on the master seed and
    the integer key, never on how many other streams were created, so trial t
    draws the same numbers whatever the trial count or thread count.
    """
    seq = np.random.SeedSequence(entropy=int(seed), spawn_key=tuple(int(k) for k in key))
    return np.random.default_rng(seq)


def complex_normal(rng, shape):
    """
    Circularly-symmetric standard complex Gaussian draws (variance 1/2 per real dimension).
    """
    return (rng.standard_normal(shape) + 1j * rng.standard_normal(shape)) / np.sqrt(2.0)


def hermitian_part(mat):
    """
    Symmetrize a nearly Hermitian matrix.
    """
    return 0.5 * (mat + mat.conj().T)


# end of file
