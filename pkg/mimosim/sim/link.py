#-*- coding: utf-8 -*-

import math
import numpy as np

from .modem import random_block, qpsk_demodulate
from ..utilities import complex_normal


class TrialResult:
    """
    Error counts and accumulated squared error of a link simulation.
    """

    def __init__(self, bit_errors=0, bits_sent=0, sum_squared_error=0.0, symbols_sent=0):
        """
        Parameters
        ----------
        bit_errors: int
            Number of bit errors over all users and streams.
        bits_sent: int
            Number of transmitted bits over all users and streams.
        sum_squared_error: float
            Accumulated sum over users of ||x_i - y_i||^2.
        symbols_sent: int
            Number of symbol-vector slots; each slot carries L symbols for every user.
        """
        if min(bit_errors, bits_sent, symbols_sent) < 0 or sum_squared_error < 0.0:
            raise ValueError('Trial counts must be nonnegative')
        if bit_errors > bits_sent:
            raise ValueError('More bit errors (%d) than bits sent (%d)' % (bit_errors, bits_sent))
        self.bit_errors = int(bit_errors)
        self.bits_sent = int(bits_sent)
        self.sum_squared_error = float(sum_squared_error)
        self.symbols_sent = int(symbols_sent)
        return

    @property
    def ber(self):
        return self.bit_errors / self.bits_sent if self.bits_sent else 0.0

    @property
    def mse(self):
        """
        Average total squared error per symbol slot (comparable with the TMSE).
        """
        return self.sum_squared_error / self.symbols_sent if self.symbols_sent else 0.0

    def __eq__(self, other):
        if not isinstance(other, TrialResult):
            return NotImplemented
        return (self.bit_errors, self.bits_sent, self.sum_squared_error, self.symbols_sent) == \
               (other.bit_errors, other.bits_sent, other.sum_squared_error, other.symbols_sent)

    def __repr__(self):
        return ('TrialResult(bit_errors=%d, bits_sent=%d, sum_squared_error=%r, symbols_sent=%d)'
                % (self.bit_errors, self.bits_sent, self.sum_squared_error, self.symbols_sent))


def merge_results(results):
    """
    Combine trial results. Counts are summed exactly and the squared errors with
    math.fsum, so the totals do not depend on the order of the results.
    """
    results = list(results)
    return TrialResult(bit_errors=sum(r.bit_errors for r in results),
                       bits_sent=sum(r.bits_sent for r in results),
                       sum_squared_error=math.fsum(r.sum_squared_error for r in results),
                       symbols_sent=sum(r.symbols_sent for r in results))


def run_trial(design, realizations, noise_var, symbols_per_user, rng):
    """
    Pass QPSK symbols through one channel realization per user:

        y_i = A_i^H (H_i sum_k B_k x_k + n_i)

    and slice every stream of y_i.

    Parameters
    ----------
    design: TransceiverDesign
        Precoders and receivers.
    realizations: list of ChannelRealization
        One drawn channel per user.
    noise_var: float
        Noise variance per receive antenna.
    symbols_per_user: int
        Number of symbol-vector slots; each carries L streams per user.
    rng: numpy.random.Generator
        Random stream for symbols and noise.

    Returns
    -------
    result: TrialResult
    """
    if len(realizations) != design.k:
        raise ValueError('Need one realization per user (%d != %d)'
                         % (len(realizations), design.k))
    nslot = int(symbols_per_user)
    nstream = design.precoders[0].shape[1]

    # Independent QPSK symbols for every user and stream
    blocks = [random_block(rng, nstream * nslot) for _ in range(design.k)]
    symbols = [block.symbols.reshape(nslot, nstream).T for block in blocks]
    tx = sum(b @ x for b, x in zip(design.precoders, symbols))

    bit_errors = 0
    sq_error = []
    for a, real, x, block in zip(design.receivers, realizations, symbols, blocks):
        noise = np.sqrt(noise_var) * complex_normal(rng, (real.shape[0], nslot))
        y = a.conj().T @ (real.h @ tx + noise)
        err = x - y
        sq_error.append(np.vdot(err, err).real)
        bit_errors += int(np.count_nonzero(qpsk_demodulate(y.T.ravel()) != block.bits))

    return TrialResult(bit_errors=bit_errors, bits_sent=2 * nstream * nslot * design.k,
                       sum_squared_error=math.fsum(sq_error), symbols_sent=nslot)


# end of file
