#-*- coding: utf-8 -*-

"""
Class definitions for the joint precoder/receiver designs. Both schemes run the same
alternating minimization; the robust one averages the MSE over the channel
uncertainty while the baseline treats the channel mean as the true channel.

.. dependencies:
    numpy, scipy
"""

import numpy as np
from scipy import linalg

from .Design import TransceiverDesign, SolverSettings
from .lagrange import transmit_gram, solve_multiplier, NULL_TOL
from . import mse
from ..utilities import complex_normal, hermitian_part

# Largest condition number accepted for the receiver/precoder systems
MAX_CONDITION = 1.0e14


class SingularSystemError(np.linalg.LinAlgError):
    """
    Raised when a receiver or precoder system matrix is numerically singular.
    """


def _solve_hpd(C, rhs, what):
    C = hermitian_part(C)
    cond = np.linalg.cond(C)
    if not np.isfinite(cond) or cond > MAX_CONDITION:
        raise SingularSystemError('%s system matrix is numerically singular (condition %.3e)'
                                  % (what, cond))
    return linalg.solve(C, rhs, assume_a='pos')


def receiver_update(precoders, stats_i, noise_var, i, robust=True):
    """
    Receive matrix of user i for fixed precoders:

        A_i = (H_i S H_i^H + tr(S R_t) R_ri + sigma^2 I)^{-1} H_i B_i

    Parameters
    ----------
    precoders: list of (M,L) np.ndarray
        Precoders B_k of all users.
    stats_i: ChannelStats
        Statistics of user i's channel.
    noise_var: float
        Noise variance per receive antenna.
    i: int
        User index.
    robust: bool, optional
        Include the channel-uncertainty term. Default: True.

    Returns
    -------
    A_i: (N_i,L) np.ndarray
    """
    if not 0 <= i < len(precoders):
        raise IndexError('User index %d out of range for %d users' % (i, len(precoders)))
    h = stats_i.mean
    cov = sum(b @ b.conj().T for b in precoders)
    C = h @ cov @ h.conj().T + noise_var * np.eye(stats_i.n)
    if robust:
        C = C + np.trace(cov @ stats_i.tx).real * stats_i.rx_corr
    return _solve_hpd(C, h @ precoders[i], 'Receiver')


def precoder_update(receivers, stats, lam, robust=True, pseudo_inverse=False):
    """
    Precoders of all users for fixed receivers and multiplier:

        B_i = (X + Y + lambda I)^{-1} H_i^H A_i

    All users share one factorization of the bracketed matrix.

    Parameters
    ----------
    receivers: list of (N_k,L) np.ndarray
        Receive matrices A_k.
    stats: list of ChannelStats
        Statistics of every user's channel.
    lam: float
        Nonnegative Lagrange multiplier.
    robust: bool, optional
        Include the channel-uncertainty matrix Y. Default: True.
    pseudo_inverse: bool, optional
        Use the pseudo-inverse when lam is zero and the matrix is singular, instead of
        raising SingularSystemError. Default: False.

    Returns
    -------
    precoders: list of (M,L) np.ndarray
    """
    if lam < 0.0:
        raise ValueError('Lagrange multiplier must be nonnegative, got %r' % lam)
    X, Y = transmit_gram(receivers, stats, robust=robust)
    C = X + Y + lam * np.eye(X.shape[0])
    rhs = np.hstack([st.mean.conj().T @ a for a, st in zip(receivers, stats)])
    try:
        sol = _solve_hpd(C, rhs, 'Precoder')
    except SingularSystemError:
        if not (pseudo_inverse and lam == 0.0):
            raise
        sol = linalg.pinvh(hermitian_part(C)) @ rhs
    return np.hsplit(sol, np.cumsum([a.shape[1] for a in receivers])[:-1])


class TMMSE:
    """
    Joint total-MMSE transceiver design that takes the channel mean as the true
    channel (perfect-CSI design, no uncertainty terms).
    """

    robust = False
    name = 'baseline'

    def __init__(self, settings=None, verbose=False):
        """
        Parameters
        ----------
        settings: SolverSettings, optional
            Power, noise and stopping parameters. Default: SolverSettings().
        verbose: bool, optional
            Print the objective after every iteration. Default: False.
        """
        self.settings = settings or SolverSettings()
        self.verbose = verbose
        return

    def tmse(self, design, stats):
        """
        Objective minimized by this scheme.
        """
        return mse.tmse(design, stats, self.settings.noise_var, robust=self.robust)

    def receivers(self, precoders, stats):
        noise_var = self.settings.noise_var
        return [receiver_update(precoders, st, noise_var, i, robust=self.robust)
                for i, st in enumerate(stats)]

    def precoders(self, receivers, stats):
        """
        Multiplier and precoders for fixed receivers. Reuses the eigendecomposition of
        X + Y from the multiplier search as the shared factorization.
        """
        X, Y = transmit_gram(receivers, stats, robust=self.robust)
        lam, d, U = solve_multiplier(X, Y, self.settings.power,
                                     bisection_tol=self.settings.bisection_tol)
        shifted = d + lam
        tol = NULL_TOL * max(1.0, float(d.max()))
        inv = np.zeros_like(shifted)
        inv[shifted > tol] = 1.0 / shifted[shifted > tol]
        factor = (U * inv) @ U.conj().T
        precoders = [factor @ (st.mean.conj().T @ a) for a, st in zip(receivers, stats)]
        return precoders, lam

    def initialize(self, stats, rng):
        """
        Random precoders scaled to the full power budget, followed by their optimal
        receivers.
        """
        settings = self.settings
        precoders = [complex_normal(rng, (st.m, settings.streams)) for st in stats]
        scale = np.sqrt(settings.power / sum(np.vdot(b, b).real for b in precoders))
        precoders = [scale * b for b in precoders]
        receivers = self.receivers(precoders, stats)
        return TransceiverDesign(precoders, receivers, scheme=self.name)

    def design(self, stats, rng=None):
        """
        Alternate multiplier, precoder and receiver updates until the squared change of
        all matrices falls below epsilon.

        Parameters
        ----------
        stats: list of ChannelStats
            Statistics of every user's channel.
        rng: numpy.random.Generator or int, optional
            Random stream or seed for the initial precoders.

        Returns
        -------
        design: TransceiverDesign
        """
        settings = self.settings
        if len(stats) < 1:
            raise ValueError('Need at least one user')
        for st in stats:
            if settings.streams > st.n:
                raise ValueError('Cannot carry %d streams with %d receive antennas'
                                 % (settings.streams, st.n))
        rng = np.random.default_rng(rng)

        current = self.initialize(stats, rng)
        initial_tmse = self.tmse(current, stats)
        if self.verbose:
            print('%s: initial TMSE %f' % (self.name, initial_tmse))

        trace = []
        converged = False
        iteration = 0
        for iteration in range(1, settings.max_iterations + 1):
            precoders, lam = self.precoders(current.receivers, stats)
            receivers = self.receivers(precoders, stats)
            update = TransceiverDesign(precoders, receivers, lam=lam, scheme=self.name)
            trace.append(self.tmse(update, stats))
            change = update.distance(current)
            current = update
            if self.verbose:
                print(' - iteration %d: TMSE %f  change %.3e  lambda %g'
                      % (iteration, trace[-1], change, lam))
            if change < settings.epsilon:
                converged = True
                break

        if not converged and self.verbose:
            print('%s: no convergence after %d iterations' % (self.name, iteration))

        return TransceiverDesign(current.precoders, current.receivers, lam=current.lam,
                                 iterations=iteration, tmse_trace=trace,
                                 initial_tmse=initial_tmse, converged=converged,
                                 scheme=self.name)

    def __repr__(self):
        msg  = 'TMMSE (%s):\n' % self.name
        msg += '  - power: %g\n' % self.settings.power
        msg += '  - noise_var: %g\n' % self.settings.noise_var
        msg += '  - epsilon: %g\n' % self.settings.epsilon
        return msg


class RobustTMMSE(TMMSE):
    """
    Joint total-MMSE transceiver design averaged over the channel uncertainty given the
    channel mean and Kronecker correlations.
    """

    robust = True
    name = 'robust'


def design(stats, settings, rng=None, verbose=False):
    """
    Robust design from statistical channel knowledge.
    """
    return RobustTMMSE(settings, verbose=verbose).design(stats, rng)


def design_baseline(stats, settings, rng=None, verbose=False):
    """
    Perfect-CSI design applied to the channel means.
    """
    return TMMSE(settings, verbose=verbose).design(stats, rng)


def select(scheme, settings=None, verbose=False):
    """
    Return the solver object for a scheme name.
    """
    if scheme in ['robust', 'Robust']:
        return RobustTMMSE(settings, verbose=verbose)
    elif scheme in ['baseline', 'Baseline', 'tmmse', 'TMMSE']:
        return TMMSE(settings, verbose=verbose)
    else:
        raise NotImplementedError('Unsupported scheme %s' % scheme)


# end of file
