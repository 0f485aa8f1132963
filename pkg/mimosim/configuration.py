#-*- coding: utf-8 -*-

import configparser
import warnings
import json
import re

import numpy as np


class ConfigurationError(ValueError):
    """
    Invalid experiment configuration. The message names the key and, when known, the line.
    """


# Defaults reproduce the four-antenna, two-user setup with two streams per user
DEFAULTS = {
    'm': 4,
    'k': 2,
    'n': 2,
    'n_list': None,
    'l': 2,
    'w_list': [10.0, 50.0, 200.0, 1000.0],
    'rho_tx': 0.9,
    'rho_rx': 0.0,
    'power': 1.0,
    'snr_db_list': [0.0, 5.0, 10.0, 15.0, 20.0, 25.0, 30.0],
    'mse_snr_db': 20.0,
    'epsilon': 1.0e-4,
    'max_iterations': 100,
    'bisection_tol': 1.0e-10,
    'n_trials': 50,
    'n_real': 20,
    'n_sym': 100,
    'seed': 0,
    'schemes': ['robust', 'baseline'],
}

SCHEMES = ('robust', 'baseline')
MAX_SEED = 2**64 - 1


def _split_list(text):
    text = text.strip()
    if text.startswith('[') and text.endswith(']'):
        text = text[1:-1]
    items = [item.strip().strip('\'"') for item in re.split(r'[,\s]+', text)]
    return [item for item in items if item]


def _to_int(text):
    if isinstance(text, (int, np.integer)) and not isinstance(text, bool):
        return int(text)
    try:
        return int(str(text).strip())
    except ValueError:
        value = float(text)
    if not value.is_integer():
        raise ValueError('not an integer: %r' % text)
    return int(value)


def _to_float(text):
    return float(text)


def _to_floats(text):
    if isinstance(text, (list, tuple)):
        return [float(item) for item in text]
    return [float(item) for item in _split_list(text)]


def _to_ints(text):
    if isinstance(text, (list, tuple)):
        return [_to_int(item) for item in text]
    return [_to_int(item) for item in _split_list(text)]


def _to_strs(text):
    if isinstance(text, (list, tuple)):
        return [str(item).strip() for item in text]
    return _split_list(text)


CONVERTERS = {
    'm': _to_int,
    'k': _to_int,
    'n': _to_int,
    'n_list': _to_ints,
    'l': _to_int,
    'w_list': _to_floats,
    'rho_tx': _to_float,
    'rho_rx': _to_float,
    'power': _to_float,
    'snr_db_list': _to_floats,
    'mse_snr_db': _to_float,
    'epsilon': _to_float,
    'max_iterations': _to_int,
    'bisection_tol': _to_float,
    'n_trials': _to_int,
    'n_real': _to_int,
    'n_sym': _to_int,
    'seed': _to_int,
    'schemes': _to_strs,
}


class SimConfig:
    """
    Experiment parameters. Unspecified parameters take the values in DEFAULTS.
    """

    def __init__(self, lines=None, **kwargs):
        unknown = set(kwargs) - set(DEFAULTS)
        if unknown:
            raise ConfigurationError('Unknown configuration key(s): %s' % ', '.join(sorted(unknown)))
        for key, default in DEFAULTS.items():
            value = kwargs.get(key, default)
            if isinstance(value, list):
                value = list(value)
            setattr(self, key, value)
        if self.n_list is None:
            self.n_list = [self.n]
        self.validate(lines=lines)
        return

    def validate(self, lines=None):
        """
        Check ranges. Raises ConfigurationError naming the offending key.
        """
        lines = lines or {}

        def fail(key, msg):
            where = ' (line %d)' % lines[key] if key in lines else ''
            raise ConfigurationError('%s%s: %s' % (key, where, msg))

        for key in ('m', 'k', 'n', 'l', 'max_iterations', 'n_trials', 'n_real', 'n_sym'):
            if getattr(self, key) < 1:
                fail(key, 'must be at least 1, got %r' % getattr(self, key))
        for key in ('power', 'epsilon', 'bisection_tol'):
            value = getattr(self, key)
            if not (value > 0.0 and np.isfinite(value)):
                fail(key, 'must be positive, got %r' % value)
        for key in ('rho_tx', 'rho_rx'):
            if not 0.0 <= getattr(self, key) < 1.0:
                fail(key, 'must lie in [0, 1), got %r' % getattr(self, key))
        if not self.w_list:
            fail('w_list', 'needs at least one value')
        for w in self.w_list:
            if not w >= 0.0:
                fail('w_list', 'values must be nonnegative or inf, got %r' % w)
        if not self.snr_db_list:
            fail('snr_db_list', 'needs at least one value')
        for value in list(self.snr_db_list) + [self.mse_snr_db]:
            if not np.isfinite(value):
                fail('snr_db_list', 'SNR values must be finite, got %r' % value)
        if not self.n_list:
            fail('n_list', 'needs at least one value')
        # n drives the MSE and convergence experiments, n_list the BER sweep
        for n in [self.n] + list(self.n_list):
            if n < 1:
                fail('n_list', 'values must be at least 1, got %r' % n)
            if self.l > n:
                fail('l', '%d streams exceed %d receive antennas' % (self.l, n))
        if not self.schemes:
            fail('schemes', 'needs at least one scheme')
        for scheme in self.schemes:
            if scheme not in SCHEMES:
                fail('schemes', 'unknown scheme %r (choose from %s)' % (scheme, ', '.join(SCHEMES)))
        if not 0 <= self.seed <= MAX_SEED:
            fail('seed', 'must be an unsigned 64-bit integer, got %r' % self.seed)
        if self.k * self.l > self.m:
            warnings.warn('k*l = %d streams exceed m = %d transmit antennas'
                          % (self.k * self.l, self.m))
        return

    def replace(self, **changes):
        """
        Copy with some parameters changed.
        """
        params = {key: getattr(self, key) for key in DEFAULTS}
        if 'n' in changes and 'n_list' not in changes:
            params['n_list'] = None
        params.update(changes)
        return SimConfig(**params)

    def __eq__(self, other):
        if not isinstance(other, SimConfig):
            return NotImplemented
        return all(getattr(self, key) == getattr(other, key) for key in DEFAULTS)

    def __repr__(self):
        msg  = 'SimConfig:\n'
        for key in DEFAULTS:
            msg += '  - %s: %r\n' % (key, getattr(self, key))
        return msg


class Configuration:
    """
    Reads experiment options from INI-style text.
    """

    def __init__(self, text, module=None):
        """
        Store the configuration text and the experiment whose section overrides [global].
        """
        self.text = text
        self.module = module
        return

    def _locate(self, text):
        # Line numbers of every (section, key)
        lines = {}
        section = None
        for lineno, line in enumerate(text.splitlines(), start=1):
            stripped = line.strip()
            if not stripped or stripped[0] in '#;':
                continue
            if stripped.startswith('[') and stripped.endswith(']'):
                section = stripped[1:-1].strip()
                continue
            match = re.match(r'([^=:]+?)\s*[=:]', stripped)
            if match:
                lines[(section, match.group(1).strip().lower())] = lineno
        return lines

    def __call__(self):
        """
        Parse options for the module. Returns a dictionary of raw values and a dictionary
        of their line numbers.
        """
        text = self.text
        lines = self._locate(text)

        # Flat files get an implicit global section
        first = next((line.strip() for line in text.splitlines()
                      if line.strip() and line.strip()[0] not in '#;'), '')
        offset = 0
        if not first.startswith('['):
            text = '[global]\n' + text
            offset = 1
            lines = {('global' if sec is None else sec, key): lineno
                     for (sec, key), lineno in lines.items()}

        # Create configparser object
        config = configparser.RawConfigParser(inline_comment_prefixes=('#',';'))
        try:
            config.read_string(text)
        except configparser.Error as err:
            msg = str(err)
            if offset and hasattr(err, 'lineno'):
                msg = '%s (line %d of the file)' % (msg, err.lineno - offset)
            raise ConfigurationError('Malformed configuration: %s' % msg) from err

        known = {'global', 'ber-vs-snr', 'mse-vs-w', 'convergence'}
        for section in config.sections():
            if section not in known:
                raise ConfigurationError('Unknown section [%s] (line %d)'
                                         % (section, self._section_line(section)))

        # Get global options, then the module's overrides
        optdict = {}
        optlines = {}
        sections = ['global'] + ([self.module] if self.module else [])
        for section in sections:
            if not config.has_section(section):
                continue
            for key, value in config.items(section):
                optdict[key] = value
                if (section, key) in lines:
                    optlines[key] = lines[(section, key)]

        return optdict, optlines

    def _section_line(self, section):
        for lineno, line in enumerate(self.text.splitlines(), start=1):
            if line.strip() == '[%s]' % section:
                return lineno
        return 0


def build_config(optdict, optlines=None):
    """
    Convert raw option values into a validated SimConfig.
    """
    optlines = optlines or {}
    params = {}
    for key, raw in optdict.items():
        where = ' (line %d)' % optlines[key] if key in optlines else ''
        if key not in CONVERTERS:
            raise ConfigurationError('Unknown configuration key %r%s' % (key, where))
        try:
            params[key] = CONVERTERS[key](raw)
        except (TypeError, ValueError) as err:
            raise ConfigurationError('%s%s: malformed value %r' % (key, where, raw)) from err

    return SimConfig(lines=optlines, **params)


def parse_config(text, experiment=None):
    """
    Parse INI-style experiment configuration text.

    Parameters
    ----------
    text: str
        Flat 'key = value' lines, or a [global] section plus optional per-experiment
        sections.
    experiment: str, optional
        Experiment name whose section overrides [global].

    Returns
    -------
    config: SimConfig
    """
    optdict, optlines = Configuration(text, experiment)()
    return build_config(optdict, optlines)


def parse_config_json(text, experiment=None):
    """
    JSON alias of parse_config: an object with the same keys, optionally nesting
    per-experiment objects under the experiment name.
    """
    try:
        data = json.loads(text) if text.strip() else {}
    except json.JSONDecodeError as err:
        raise ConfigurationError('Malformed JSON configuration: line %d: %s'
                                 % (err.lineno, err.msg)) from err
    if not isinstance(data, dict):
        raise ConfigurationError('JSON configuration must be an object')
    optdict = {key: value for key, value in data.items() if not isinstance(value, dict)}
    sections = {key: value for key, value in data.items() if isinstance(value, dict)}
    for name, section in sections.items():
        if name not in ('global', 'ber-vs-snr', 'mse-vs-w', 'convergence'):
            raise ConfigurationError('Unknown section %r' % name)
    optdict.update(sections.get('global', {}))
    if experiment is not None:
        optdict.update(sections.get(experiment, {}))
    return build_config(optdict)


def load_config(path, experiment=None):
    """
    Read a configuration file; files ending in .json use the JSON loader. OSError
    propagates for unreadable files.
    """
    with open(path, 'r', encoding='utf-8') as fid:
        text = fid.read()
    if str(path).lower().endswith('.json'):
        return parse_config_json(text, experiment)
    return parse_config(text, experiment)


# end of file
