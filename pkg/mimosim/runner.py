#-*- coding: utf-8 -*-

import os
import sys

import numpy as np

from .configuration import ConfigurationError, load_config, parse_config
from .records import write_records
from .sim.experiments import EXPERIMENTS

# Exit statuses
EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_CONFIG = 2
EXIT_IO = 3

THREADS_ENV = 'MIMO_SIM_THREADS'


def resolve_threads(threads=None):
    """
    Thread count from the argument, then the MIMO_SIM_THREADS variable, then 1.
    """
    if threads is None:
        env = os.environ.get(THREADS_ENV)
        if env is None or not env.strip():
            return 1
        try:
            threads = int(env)
        except ValueError:
            raise ConfigurationError('%s: malformed thread count %r' % (THREADS_ENV, env))
    threads = int(threads)
    if threads < 1:
        raise ConfigurationError('threads must be at least 1, got %d' % threads)
    return threads


def summarize(record):
    """
    One-line summary of a sweep point.
    """
    return '%-36s %-8s %s=%-8g %.6e +/- %.2e (%d trials)' % (
        record.experiment, record.scheme, record.sweep_name, record.sweep_value,
        record.metric, record.stderr, record.trials)


def run(config_path, experiment, out_path=None, seed=None, threads=None):
    """
    Run one experiment and write its records as CSV.

    Parameters
    ----------
    config_path: str or None
        Experiment configuration file. None uses the default configuration.
    experiment: str
        One of 'ber-vs-snr', 'mse-vs-w', 'convergence'.
    out_path: str, optional
        Output CSV. Default: '<experiment>.csv'.
    seed: int, optional
        Overrides the configured master seed.
    threads: int, optional
        Worker threads; falls back to MIMO_SIM_THREADS, then 1.

    Returns
    -------
    status: int
        0 on success, 1 when the experiment itself fails (numerically singular
        systems or inconsistent dimensions), 2 for configuration errors, 3 for I/O
        errors. Nothing is written unless the experiment completes.
    """
    if experiment not in EXPERIMENTS:
        print('Unknown experiment %r (choose from %s)' % (experiment, ', '.join(EXPERIMENTS)),
              file=sys.stderr)
        return EXIT_CONFIG

    # Load and validate the configuration
    try:
        if config_path is None:
            config = parse_config('', experiment)
        else:
            config = load_config(config_path, experiment)
        if seed is not None:
            config = config.replace(seed=int(seed))
        nthreads = resolve_threads(threads)
    except ConfigurationError as err:
        print('Configuration error: %s' % err, file=sys.stderr)
        return EXIT_CONFIG
    except OSError as err:
        print('Cannot read configuration %s: %s' % (config_path, err), file=sys.stderr)
        return EXIT_IO

    try:
        records = EXPERIMENTS[experiment](config, threads=nthreads)
    except (ValueError, ArithmeticError, np.linalg.LinAlgError) as err:
        print('Experiment %s failed: %s' % (experiment, err), file=sys.stderr)
        return EXIT_FAILURE

    for record in records:
        print(summarize(record))

    out_path = out_path or '%s.csv' % experiment
    try:
        write_records(records, out_path)
    except OSError as err:
        print('Cannot write %s: %s' % (out_path, err), file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


# end of file
