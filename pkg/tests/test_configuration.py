#-*- coding: utf-8 -*-

import numpy as np
import pytest

from mimosim.configuration import (SimConfig, ConfigurationError, DEFAULTS, parse_config,
                                   parse_config_json, load_config)


def test_empty_config_gives_defaults():
    config = parse_config('')
    assert config == SimConfig()
    assert (config.m, config.k, config.n, config.l) == (4, 2, 2, 2)
    assert config.rho_tx == 0.9 and config.rho_rx == 0.0
    assert config.epsilon == 1.0e-4 and config.power == 1.0
    assert config.n_list == [2]
    assert config.schemes == ['robust', 'baseline']


def test_negative_power_names_key():
    with pytest.raises(ConfigurationError, match='power') as err:
        parse_config('m = 4\npower = -1\n')
    assert 'line 2' in str(err.value)


def test_w_list():
    config = parse_config('w_list = [10, 50, 200, 1000]')
    assert config.w_list == [10.0, 50.0, 200.0, 1000.0]
    config = parse_config('w_list = 10, inf   # mean-only channel too')
    assert config.w_list[0] == 10.0 and np.isinf(config.w_list[1])


@pytest.mark.parametrize('text,key', [
    ('foo = 1', 'foo'),
    ('m = four', 'm'),
    ('rho_tx = 1.0', 'rho_tx'),
    ('n_trials = 0', 'n_trials'),
    ('l = 3', 'l'),
    ('schemes = robust, magic', 'schemes'),
    ('seed = -1', 'seed'),
    ('snr_db_list = ', 'snr_db_list'),
])
def test_invalid_values(text, key):
    with pytest.raises(ConfigurationError, match=key):
        parse_config(text)


def test_streams_checked_against_every_antenna_count():
    # n_list alone would pass: the MSE and convergence experiments still use n
    with pytest.raises(ConfigurationError, match='streams exceed'):
        parse_config('n = 1\nl = 2\nn_list = 2, 4\n')
    with pytest.raises(ConfigurationError, match='streams exceed'):
        SimConfig(n=3, l=2, n_list=[2, 1])
    assert parse_config('n = 2\nl = 2\nn_list = 2, 3, 4\n').n_list == [2, 3, 4]


def test_malformed_syntax():
    with pytest.raises(ConfigurationError):
        parse_config('[global]\nthis line has no separator\n')
    with pytest.raises(ConfigurationError, match='unknown'):
        parse_config('[unknown]\nm = 4\n')


def test_experiment_sections():
    text = '\n'.join([
        '; shared parameters',
        '[global]',
        'n_trials = 5',
        'seed = 42',
        '[ber-vs-snr]',
        'n_trials = 7',
        'n_list = 2, 3, 4',
    ])
    config = parse_config(text, 'ber-vs-snr')
    assert config.n_trials == 7 and config.seed == 42
    assert config.n_list == [2, 3, 4]
    config = parse_config(text, 'mse-vs-w')
    assert config.n_trials == 5 and config.n_list == [2]


def test_large_seed():
    config = parse_config('seed = 18446744073709551615')
    assert config.seed == 2**64 - 1


def test_stream_overload_warns():
    with pytest.warns(UserWarning):
        config = parse_config('k = 3')
    assert config.k == 3


def test_replace():
    config = SimConfig()
    changed = config.replace(seed=9, n=3)
    assert changed.seed == 9 and changed.n_list == [3]
    assert config.seed == 0
    with pytest.raises(ConfigurationError):
        config.replace(power=0.0)
    with pytest.raises(ConfigurationError):
        SimConfig(bogus=1)


def test_json_alias():
    config = parse_config_json('{"power": 2, "w_list": [10, 100], '
                               '"mse-vs-w": {"n_trials": 3}}', 'mse-vs-w')
    assert config.power == 2.0 and config.w_list == [10.0, 100.0]
    assert config.n_trials == 3
    assert parse_config_json('') == SimConfig()
    with pytest.raises(ConfigurationError):
        parse_config_json('[1, 2]')
    with pytest.raises(ConfigurationError):
        parse_config_json('{"power": }')


def test_load_config(tmp_path):
    path = tmp_path / 'experiment.cfg'
    path.write_text('n_trials = 4\nsnr_db_list = 0, 10\n')
    config = load_config(str(path))
    assert config.n_trials == 4 and config.snr_db_list == [0.0, 10.0]
    path = tmp_path / 'experiment.json'
    path.write_text('{"n_trials": 6}')
    assert load_config(str(path)).n_trials == 6
    with pytest.raises(OSError):
        load_config(str(tmp_path / 'missing.cfg'))


def test_every_default_is_valid():
    for key, value in DEFAULTS.items():
        if value is not None:
            assert getattr(SimConfig(), key) == value

# end of file
