#-*- coding: utf-8 -*-

"""
Monte Carlo experiments comparing the robust and baseline designs.

Every trial draws its own channel means, design initialization, channel
realizations and symbols from counter-based streams keyed by (seed, trial,
purpose). The keys do not involve the sweep point or the scheme, so both schemes
and all SNR points of a trial see the same random numbers.
"""

import numpy as np

from ..channel import (ChannelStatsRaw, exp_correlation, to_equivalent, sample_channel,
                       draw_channel_mean)
from ..transceiver import SolverSettings, select
from ..utilities import noise_variance, mean_and_stderr, stream
from .link import run_trial, merge_results
from .parallel import dispatch

# Stream purposes within a trial
MEAN_STREAM = 0
DESIGN_STREAM = 1
CHANNEL_STREAM = 2
SYMBOL_STREAM = 3


class ExperimentRecord:
    """
    One output row of an experiment.
    """

    fields = ('experiment', 'scheme', 'sweep_name', 'sweep_value', 'metric', 'stderr',
              'trials', 'seed')

    def __init__(self, experiment, scheme, sweep_name, sweep_value, metric, stderr, trials,
                 seed):
        if stderr < 0.0:
            raise ValueError('Standard error must be nonnegative, got %r' % stderr)
        self.experiment = str(experiment)
        self.scheme = str(scheme)
        self.sweep_name = str(sweep_name)
        self.sweep_value = float(sweep_value)
        self.metric = float(metric)
        self.stderr = float(stderr)
        self.trials = int(trials)
        self.seed = int(seed)
        return

    def as_dict(self):
        return {name: getattr(self, name) for name in self.fields}

    def __eq__(self, other):
        if not isinstance(other, ExperimentRecord):
            return NotImplemented
        return self.as_dict() == other.as_dict()

    def __repr__(self):
        return ('ExperimentRecord(%s, %s, %s=%g, metric=%g +/- %g, trials=%d)'
                % (self.experiment, self.scheme, self.sweep_name, self.sweep_value,
                   self.metric, self.stderr, self.trials))


def _fmt(value):
    return '%g' % value


def user_stats(config, n, w, trial):
    """
    Equivalent channel statistics of all users for one trial.
    """
    rng = stream(config.seed, trial, MEAN_STREAM)
    rx_corr0 = exp_correlation(n, config.rho_rx)
    tx_corr = exp_correlation(config.m, config.rho_tx)
    return [to_equivalent(ChannelStatsRaw(draw_channel_mean(n, config.m, rng), rx_corr0,
                                          tx_corr, w))
            for _ in range(config.k)]


def solver_settings(config, snr_db):
    return SolverSettings(power=config.power, noise_var=noise_variance(snr_db, config.power),
                          epsilon=config.epsilon, max_iterations=config.max_iterations,
                          bisection_tol=config.bisection_tol, streams=config.l)


def design_trial(config, n, w, snr_db, scheme, trial):
    """
    Channel statistics and the scheme's design for one trial.
    """
    stats = user_stats(config, n, w, trial)
    solver = select(scheme, solver_settings(config, snr_db))
    return stats, solver.design(stats, stream(config.seed, trial, DESIGN_STREAM))


def link_trial(config, n, w, snr_db, scheme, trial):
    """
    Design once, then simulate n_real channel realizations of n_sym slots each.
    """
    stats, design = design_trial(config, n, w, snr_db, scheme, trial)
    noise_var = noise_variance(snr_db, config.power)
    channel_rng = stream(config.seed, trial, CHANNEL_STREAM)
    symbol_rng = stream(config.seed, trial, SYMBOL_STREAM)
    results = []
    for _ in range(config.n_real):
        realizations = [sample_channel(st, channel_rng) for st in stats]
        results.append(run_trial(design, realizations, noise_var, config.n_sym, symbol_rng))
    return merge_results(results)


def _point_units(points, config):
    # Unit order: sweep point, then scheme, then trial
    return [point + (scheme, trial) for point in points for scheme in config.schemes
            for trial in range(config.n_trials)]


def _summarize(units, results, config, tag, sweep_name, sweep_index, metric):
    """
    Reduce per-trial results into one record per (point, scheme), in unit order.
    """
    grouped = {}
    order = []
    for unit, result in zip(units, results):
        key = unit[:-1]
        if key not in grouped:
            grouped[key] = []
            order.append(key)
        grouped[key].append(metric(result))

    records = []
    for key in order:
        mean, stderr = mean_and_stderr(grouped[key])
        records.append(ExperimentRecord(tag(key), key[-1], sweep_name, key[sweep_index],
                                        mean, stderr, len(grouped[key]), config.seed))
    return records


def experiment_ber_vs_snr(config, threads=1):
    """
    Average BER versus SNR for every receive-antenna count in n_list and every W.

    Returns
    -------
    records: list of ExperimentRecord
        One record per (N, W, scheme, SNR).
    """
    points = [(n, w, snr) for n in config.n_list for w in config.w_list
              for snr in config.snr_db_list]
    units = _point_units(points, config)
    results = dispatch(lambda unit: link_trial(config, *unit), units, threads=threads)
    tag = lambda key: 'ber-vs-snr:n=%d;w=%s' % (key[0], _fmt(key[1]))
    return _summarize(units, results, config, tag, 'snr_db', 2, lambda r: r.ber)


def experiment_mse_vs_w(config, threads=1):
    """
    Simulated average total squared error versus W at a fixed SNR.
    """
    snr = config.mse_snr_db
    points = [(config.n, w, snr) for w in config.w_list]
    units = _point_units(points, config)
    results = dispatch(lambda unit: link_trial(config, *unit), units, threads=threads)
    tag = lambda key: 'mse-vs-w:n=%d;snr_db=%s' % (key[0], _fmt(key[2]))
    return _summarize(units, results, config, tag, 'w', 1, lambda r: r.mse)


def convergence_trace(config, n, w, snr_db, scheme, trial):
    """
    Design objective at the initial point and after every iteration.
    """
    design = design_trial(config, n, w, snr_db, scheme, trial)[1]
    return [design.initial_tmse] + list(design.tmse_trace)


def experiment_convergence(config, threads=1):
    """
    Design objective per iteration averaged over trials, for every W and SNR. Traces
    that stop early are padded with their final value.
    """
    points = [(config.n, w, snr) for w in config.w_list for snr in config.snr_db_list]
    units = _point_units(points, config)
    traces = dispatch(lambda unit: convergence_trace(config, *unit), units, threads=threads)

    grouped = {}
    order = []
    for unit, trace in zip(units, traces):
        key = unit[:-1]
        if key not in grouped:
            grouped[key] = []
            order.append(key)
        grouped[key].append(trace)

    records = []
    for key in order:
        n, w, snr, scheme = key
        length = max(len(trace) for trace in grouped[key])
        padded = np.array([trace + [trace[-1]] * (length - len(trace))
                           for trace in grouped[key]])
        tag = 'convergence:n=%d;w=%s;snr_db=%s' % (n, _fmt(w), _fmt(snr))
        for iteration in range(length):
            mean, stderr = mean_and_stderr(padded[:,iteration])
            records.append(ExperimentRecord(tag, scheme, 'iteration', iteration, mean, stderr,
                                            padded.shape[0], config.seed))
    return records


# Experiment registry keyed by CLI name
EXPERIMENTS = {
    'ber-vs-snr': experiment_ber_vs_snr,
    'mse-vs-w': experiment_mse_vs_w,
    'convergence': experiment_convergence,
}


# end of file
