#-*- coding: utf-8 -*-

import numpy as np


class SolverSettings:
    """
    Parameters of the alternating transceiver design.
    """

    def __init__(self, power=1.0, noise_var=1.0, epsilon=1.0e-4, max_iterations=100,
                 bisection_tol=1.0e-10, streams=2):
        """
        Parameters
        ----------
        power: float
            Total transmit power P.
        noise_var: float
            Per-antenna noise variance.
        epsilon: float
            Stopping threshold on sum_k ||A_k' - A_k||_F^2 + ||B_k' - B_k||_F^2.
        max_iterations: int
            Cap on the number of (lambda, B, A) iterations.
        bisection_tol: float
            Relative tolerance on the transmit power matched by the multiplier search.
        streams: int
            Number of data streams L per user.
        """
        if not power > 0.0:
            raise ValueError('power must be positive, got %r' % power)
        if not noise_var > 0.0:
            raise ValueError('noise_var must be positive, got %r' % noise_var)
        if not epsilon > 0.0:
            raise ValueError('epsilon must be positive, got %r' % epsilon)
        if int(max_iterations) < 1:
            raise ValueError('max_iterations must be at least 1, got %r' % max_iterations)
        if not bisection_tol > 0.0:
            raise ValueError('bisection_tol must be positive, got %r' % bisection_tol)
        if int(streams) < 1:
            raise ValueError('streams must be at least 1, got %r' % streams)
        self.power = float(power)
        self.noise_var = float(noise_var)
        self.epsilon = float(epsilon)
        self.max_iterations = int(max_iterations)
        self.bisection_tol = float(bisection_tol)
        self.streams = int(streams)
        return

    def __repr__(self):
        return ('SolverSettings(power=%g, noise_var=%g, epsilon=%g, max_iterations=%d)'
                % (self.power, self.noise_var, self.epsilon, self.max_iterations))


class TransceiverDesign:
    """
    Precoders B_k (M x L), receivers A_k (N_k x L), the power multiplier and the
    iteration history of one design run.
    """

    def __init__(self, precoders, receivers, lam=0.0, iterations=0, tmse_trace=None,
                 initial_tmse=None, converged=True, scheme=None):
        self.precoders = [np.asarray(b, dtype=complex) for b in precoders]
        self.receivers = [np.asarray(a, dtype=complex) for a in receivers]
        if len(self.precoders) != len(self.receivers):
            raise ValueError('Need one receiver per precoder (%d != %d)'
                             % (len(self.receivers), len(self.precoders)))
        self.lam = float(lam)
        self.iterations = int(iterations)
        self.tmse_trace = list(tmse_trace or [])
        self.initial_tmse = initial_tmse
        self.converged = bool(converged)
        self.scheme = scheme
        return

    @property
    def k(self):
        return len(self.precoders)

    def transmit_covariance(self):
        """
        S = sum_k B_k B_k^H.
        """
        return sum(b @ b.conj().T for b in self.precoders)

    def transmit_power(self):
        return float(sum(np.vdot(b, b).real for b in self.precoders))

    def distance(self, other):
        """
        Squared Frobenius distance used by the stopping rule.
        """
        total = 0.0
        for a, a_old in zip(self.receivers, other.receivers):
            total += np.vdot(a - a_old, a - a_old).real
        for b, b_old in zip(self.precoders, other.precoders):
            total += np.vdot(b - b_old, b - b_old).real
        return float(total)

    def __repr__(self):
        msg  = 'TransceiverDesign(%s):\n' % (self.scheme or 'unnamed')
        msg += '  - users: %d\n' % self.k
        msg += '  - lambda: %g\n' % self.lam
        msg += '  - iterations: %d (converged: %s)\n' % (self.iterations, self.converged)
        return msg


# end of file
