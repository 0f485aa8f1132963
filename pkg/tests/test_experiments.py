#-*- coding: utf-8 -*-

import numpy as np
import pytest

from mimosim.configuration import SimConfig
from mimosim.sim import (experiment_ber_vs_snr, experiment_mse_vs_w, experiment_convergence,
                         ExperimentRecord, EXPERIMENTS)
from mimosim.sim.experiments import link_trial, design_trial


def by_key(records):
    return {(r.experiment, r.scheme, r.sweep_value): r for r in records}


def test_ber_vs_snr_layout(small_config):
    config = small_config.replace(n_list=[1, 2], n=1)
    records = experiment_ber_vs_snr(config)
    assert len(records) == 2 * 1 * 2 * 2
    assert {r.experiment for r in records} == {'ber-vs-snr:n=1;w=10', 'ber-vs-snr:n=2;w=10'}
    for record in records:
        assert record.sweep_name == 'snr_db'
        assert record.scheme in ('robust', 'baseline')
        assert 0.0 <= record.metric <= 1.0
        assert record.stderr >= 0.0
        assert record.trials == config.n_trials
        assert record.seed == config.seed


def test_thread_count_does_not_change_results(small_config):
    serial = experiment_ber_vs_snr(small_config, threads=1)
    threaded = experiment_ber_vs_snr(small_config, threads=3)
    assert serial == threaded


def test_seed_changes_results(small_config):
    first = experiment_mse_vs_w(small_config)
    second = experiment_mse_vs_w(small_config.replace(seed=1))
    assert [r.metric for r in first] != [r.metric for r in second]


def test_seed_isolation(small_config):
    fewer = small_config
    more = small_config.replace(n_trials=small_config.n_trials + 1)
    for trial in range(fewer.n_trials):
        for scheme in ('robust', 'baseline'):
            assert link_trial(fewer, 1, 10.0, 5.0, scheme, trial) == \
                   link_trial(more, 1, 10.0, 5.0, scheme, trial)


def test_schemes_share_random_numbers(small_config):
    robust = design_trial(small_config, 1, np.inf, 10.0, 'robust', 0)
    baseline = design_trial(small_config, 1, np.inf, 10.0, 'baseline', 0)
    assert robust[1].distance(baseline[1]) < 1.0e-20


def test_mse_vs_w_mean_only_channel(small_config):
    records = experiment_mse_vs_w(small_config.replace(w_list=[10.0, np.inf]))
    assert [r.sweep_name for r in records] == ['w'] * 4
    assert records[0].experiment == 'mse-vs-w:n=1;snr_db=10'
    table = by_key(records)
    tag = 'mse-vs-w:n=1;snr_db=10'
    assert table[(tag, 'robust', np.inf)].metric == \
           pytest.approx(table[(tag, 'baseline', np.inf)].metric, rel=1.0e-9)


def test_convergence_records(small_config):
    config = small_config.replace(snr_db_list=[5.0])
    records = experiment_convergence(config)
    assert all(r.sweep_name == 'iteration' for r in records)
    for scheme in config.schemes:
        rows = [r for r in records if r.scheme == scheme]
        assert rows[0].experiment == 'convergence:n=1;w=10;snr_db=5'
        assert [r.sweep_value for r in rows] == list(range(len(rows)))
        metrics = [r.metric for r in rows]
        for before, after in zip(metrics[:-1], metrics[1:]):
            assert after <= before + 1.0e-9


def test_registry():
    assert set(EXPERIMENTS) == {'ber-vs-snr', 'mse-vs-w', 'convergence'}


def test_record_contract():
    with pytest.raises(ValueError):
        ExperimentRecord('x', 'robust', 'w', 1.0, 0.1, -1.0, 3, 0)
    record = ExperimentRecord('x', 'robust', 'w', 1, 0.1, 0.0, 3, 2**64 - 1)
    assert record.as_dict()['seed'] == 2**64 - 1
    assert record.sweep_value == 1.0


# Figure-level behavior on the four-antenna, two-user setup

@pytest.mark.slow
def test_ber_error_floor():
    config = SimConfig(w_list=[10.0], snr_db_list=[20.0, 25.0, 30.0], n_trials=30, n_real=10)
    table = by_key(experiment_ber_vs_snr(config, threads=4))
    tag = 'ber-vs-snr:n=2;w=10'
    robust = {snr: table[(tag, 'robust', snr)] for snr in (20.0, 25.0, 30.0)}
    baseline = {snr: table[(tag, 'baseline', snr)] for snr in (20.0, 25.0, 30.0)}
    assert baseline[30.0].metric > 0.5 * baseline[20.0].metric
    for snr in (25.0, 30.0):
        gap = baseline[snr].metric - robust[snr].metric
        assert gap > 3.0 * np.hypot(baseline[snr].stderr, robust[snr].stderr)


@pytest.mark.slow
def test_mse_gap_shrinks_with_w():
    config = SimConfig(w_list=[10.0, 50.0, 200.0, 1000.0], n_trials=30, n_real=10)
    records = experiment_mse_vs_w(config, threads=4)
    table = by_key(records)
    tag = 'mse-vs-w:n=2;snr_db=20'
    gaps = {}
    for w in config.w_list:
        robust = table[(tag, 'robust', w)]
        baseline = table[(tag, 'baseline', w)]
        gaps[w] = baseline.metric - robust.metric
        assert robust.metric <= baseline.metric + 3.0 * np.hypot(robust.stderr, baseline.stderr)
    robust, baseline = table[(tag, 'robust', 10.0)], table[(tag, 'baseline', 10.0)]
    assert gaps[10.0] > 3.0 * np.hypot(robust.stderr, baseline.stderr)
    assert gaps[1000.0] < gaps[10.0]


@pytest.mark.slow
def test_robust_ber_falls_with_snr():
    snrs = [0.0, 5.0, 10.0, 15.0, 20.0, 25.0]
    config = SimConfig(w_list=[50.0], snr_db_list=snrs, n_trials=30, n_real=10,
                       schemes=['robust'])
    table = by_key(experiment_ber_vs_snr(config, threads=4))
    points = [table[('ber-vs-snr:n=2;w=50', 'robust', snr)] for snr in snrs]
    inversions = 0
    for low, high in zip(points[:-1], points[1:]):
        if high.metric > low.metric:
            inversions += 1
            assert high.metric - low.metric < 2.0 * np.hypot(low.stderr, high.stderr)
    assert inversions <= 1
    assert points[-1].metric < points[0].metric


@pytest.mark.slow
def test_schemes_agree_near_perfect_knowledge():
    config = SimConfig(w_list=[1000.0], snr_db_list=[10.0], n_trials=30, n_real=10)
    table = by_key(experiment_ber_vs_snr(config, threads=4))
    robust = table[('ber-vs-snr:n=2;w=1000', 'robust', 10.0)].metric
    baseline = table[('ber-vs-snr:n=2;w=1000', 'baseline', 10.0)].metric
    assert robust > 0.0 and baseline > 0.0
    assert 1.0 / 1.5 <= robust / baseline <= 1.5


@pytest.mark.slow
def test_receive_diversity_ordering():
    config = SimConfig(n_list=[2, 3, 4], w_list=[50.0], snr_db_list=[20.0], n_trials=100,
                       schemes=['robust'])
    table = by_key(experiment_ber_vs_snr(config, threads=4))
    points = [table[('ber-vs-snr:n=%d;w=50' % n, 'robust', 20.0)] for n in (2, 3, 4)]
    for fewer, more in zip(points[:-1], points[1:]):
        assert fewer.metric - more.metric > 2.0 * np.hypot(fewer.stderr, more.stderr)


@pytest.mark.slow
def test_higher_snr_needs_more_iterations():
    config = SimConfig(w_list=[100.0], n_trials=100)
    counts = {}
    for snr in (5.0, 25.0):
        counts[snr] = np.mean([design_trial(config, 2, 100.0, snr, 'robust', trial)[1].iterations
                               for trial in range(config.n_trials)])
    assert counts[25.0] >= counts[5.0]

# end of file
