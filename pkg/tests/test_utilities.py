#-*- coding: utf-8 -*-

import numpy as np
import pytest
from numpy.testing import assert_allclose

from mimosim.utilities import (db2lin, noise_variance, mean_and_stderr, stream,
                               complex_normal, hermitian_part)


def test_noise_variance():
    assert noise_variance(0.0) == pytest.approx(1.0)
    assert noise_variance(10.0, power=1.0) == pytest.approx(0.1)
    assert noise_variance(20.0, power=2.0) == pytest.approx(0.02)
    assert_allclose(db2lin([0.0, 30.0]), [1.0, 1000.0])


def test_mean_and_stderr():
    mean, stderr = mean_and_stderr([1.0, 2.0, 3.0])
    assert mean == pytest.approx(2.0)
    assert stderr == pytest.approx(1.0 / np.sqrt(3.0))
    assert mean_and_stderr([4.0]) == (4.0, 0.0)
    with pytest.raises(ValueError):
        mean_and_stderr([])


def test_stream_is_counter_based():
    a = stream(7, 3, 1).standard_normal(5)
    b = stream(7, 3, 1).standard_normal(5)
    assert np.array_equal(a, b)
    # Creating other streams in between does not shift this one
    stream(7, 0, 1).standard_normal(100)
    assert np.array_equal(stream(7, 3, 1).standard_normal(5), a)
    assert not np.array_equal(stream(7, 3, 2).standard_normal(5), a)
    assert not np.array_equal(stream(8, 3, 1).standard_normal(5), a)


def test_complex_normal_unit_variance():
    z = complex_normal(np.random.default_rng(1), 200000)
    assert np.mean(np.abs(z)**2) == pytest.approx(1.0, abs=0.01)
    assert np.var(z.real) == pytest.approx(0.5, abs=0.01)


def test_hermitian_part():
    mat = np.array([[1.0, 2.0 + 1.0j], [0.0, 3.0]])
    herm = hermitian_part(mat)
    assert_allclose(herm, herm.conj().T)
    assert_allclose(np.diag(herm), [1.0, 3.0])

# end of file
