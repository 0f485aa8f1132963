#-*- coding: utf-8 -*-

import numpy as np
from scipy import linalg

# Tolerances for Hermitian symmetry and eigenvalue clamping
HERMITIAN_TOL = 1.0e-8
EIGEN_TOL = 1.0e-10


class CorrelationMatrix:
    """
    Normalized (unit-diagonal) antenna correlation matrix.
    """

    def __init__(self, entries):
        """
        Store a copy of the entries after checking the normalization contract.

        Parameters
        ----------
        entries: (dim,dim) array type
            Hermitian positive semidefinite matrix with unit diagonal.
        """
        entries = np.array(entries, dtype=complex)
        if entries.ndim != 2 or entries.shape[0] != entries.shape[1]:
            raise ValueError('Correlation matrix must be square, got shape %s' % (entries.shape,))
        if not np.allclose(np.diag(entries), 1.0, atol=1.0e-12):
            raise ValueError('Correlation matrix must have a unit diagonal')
        check_hermitian(entries)
        entries.setflags(write=False)
        self.entries = entries
        return

    @property
    def dim(self):
        return self.entries.shape[0]

    def eigenvalues(self):
        return linalg.eigvalsh(self.entries)

    def __array__(self, dtype=None, copy=None):
        if dtype is None:
            return self.entries
        return self.entries.astype(dtype)

    def __repr__(self):
        return 'CorrelationMatrix(dim=%d)' % self.dim


def check_hermitian(r, tol=HERMITIAN_TOL):
    """
    Raise ValueError if the maximum asymmetry |r - r^H| exceeds tol.
    """
    asym = np.max(np.abs(r - r.conj().T)) if r.size else 0.0
    if asym > tol:
        raise ValueError('Matrix is not Hermitian (max asymmetry %.3e)' % asym)
    return


def exp_correlation(dim, rho):
    """
    Exponential correlation model with entries rho^|i-j|.

    Parameters
    ----------
    dim: int
        Number of antennas.
    rho: float
        Correlation coefficient of adjacent antennas, in [0, 1).

    Returns
    -------
    corr: CorrelationMatrix
    """
    dim = int(dim)
    if dim < 1:
        raise ValueError('Correlation dimension must be positive, got %d' % dim)
    if not 0.0 <= rho < 1.0:
        raise ValueError('Correlation coefficient must lie in [0, 1), got %r' % rho)
    index = np.arange(dim)
    lag = np.abs(index[:,None] - index[None,:])
    # 0**0 = 1 keeps the diagonal exact for rho = 0
    return CorrelationMatrix(np.power(float(rho), lag))


def psd_sqrt(r):
    """
    Hermitian positive semidefinite square root S of r, with S S^H = r.

    Uses the Hermitian eigendecomposition, so S is itself Hermitian. Eigenvalues
    in [-1e-10, 0] are clamped to zero.
    """
    r = np.asarray(r, dtype=complex)
    check_hermitian(r)
    d, U = linalg.eigh(0.5 * (r + r.conj().T))
    if d.size and d.min() < -EIGEN_TOL:
        raise ValueError('Matrix is not positive semidefinite (min eigenvalue %.3e)' % d.min())
    d = np.clip(d, 0.0, None)
    return (U * np.sqrt(d)) @ U.conj().T


# end of file
