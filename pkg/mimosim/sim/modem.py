#-*- coding: utf-8 -*-

import numpy as np

# Gray-mapped QPSK scaled to unit energy
SCALE = 1.0 / np.sqrt(2.0)


class ModemSymbolBlock:
    """
    Bits and their QPSK symbols.
    """

    def __init__(self, bits, symbols):
        self.bits = np.asarray(bits, dtype=np.uint8)
        self.symbols = np.asarray(symbols, dtype=complex)
        if self.bits.size != 2 * self.symbols.size:
            raise ValueError('Block needs two bits per symbol (%d bits, %d symbols)'
                             % (self.bits.size, self.symbols.size))
        return

    def __len__(self):
        return self.symbols.size


def qpsk_modulate(bits):
    """
    Map bit pairs (b0, b1) to ((1 - 2 b0) + j (1 - 2 b1)) / sqrt(2).
    """
    bits = np.asarray(bits, dtype=np.int8).ravel()
    if bits.size % 2:
        raise ValueError('QPSK needs an even number of bits, got %d' % bits.size)
    pairs = 1 - 2 * bits.reshape(-1, 2)
    return SCALE * (pairs[:,0] + 1j * pairs[:,1])


def qpsk_demodulate(symbols):
    """
    Per-component sign decisions, inverse of qpsk_modulate.
    """
    symbols = np.asarray(symbols, dtype=complex).ravel()
    bits = np.empty((symbols.size, 2), dtype=np.uint8)
    bits[:,0] = symbols.real < 0.0
    bits[:,1] = symbols.imag < 0.0
    return bits.ravel()


def random_block(rng, nsymbols):
    """
    Uniform random bits and their symbols.
    """
    bits = rng.integers(0, 2, size=2 * int(nsymbols), dtype=np.uint8)
    return ModemSymbolBlock(bits, qpsk_modulate(bits))


# end of file
