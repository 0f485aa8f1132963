#-*- coding: utf-8 -*-

import os

import numpy as np
import pytest

pytest.importorskip('matplotlib')

from mimosim.plotting import plot_records, figure_name
from mimosim.sim import ExperimentRecord


def test_one_figure_per_tag(tmp_path):
    records = []
    for scheme in ('robust', 'baseline'):
        for snr in (0.0, 10.0):
            records.append(ExperimentRecord('ber-vs-snr:n=2;w=10', scheme, 'snr_db', snr,
                                            0.1 / (1.0 + snr), 0.001, 5, 0))
        for w in (10.0, np.inf):
            records.append(ExperimentRecord('mse-vs-w:n=2;snr_db=20', scheme, 'w', w, 0.5,
                                            0.01, 5, 0))
    paths = plot_records(records, str(tmp_path / 'figures'))
    assert [os.path.basename(p) for p in paths] == ['ber-vs-snr_n_2_w_10.png',
                                                    'mse-vs-w_n_2_snr_db_20.png']
    assert all(os.path.getsize(p) > 0 for p in paths)


def test_figure_name():
    assert figure_name('convergence:n=2;w=100;snr_db=10') == 'convergence_n_2_w_100_snr_db_10'

# end of file
