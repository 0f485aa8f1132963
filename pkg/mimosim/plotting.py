#-*- coding: utf-8 -*-

import os
import re

import numpy as np
from matplotlib.figure import Figure

LABELS = {'snr_db': 'SNR (dB)', 'w': 'Rician factor W', 'iteration': 'Iteration'}
METRICS = {'ber-vs-snr': 'Average BER', 'mse-vs-w': 'Average MSE', 'convergence': 'TMSE'}


def figure_name(tag):
    """
    File-system friendly name for an experiment tag.
    """
    return re.sub(r'[^A-Za-z0-9.+-]+', '_', tag).strip('_')


def plot_records(records, output_dir, figsize=(8, 6)):
    """
    Save one PNG per experiment tag with one curve per scheme and standard-error bars.
    BER is drawn on a logarithmic axis, as is W. Points at W = inf are skipped.

    Returns
    -------
    paths: list of str
        Saved figure files in tag order.
    """
    tags = []
    for record in records:
        if record.experiment not in tags:
            tags.append(record.experiment)

    if tags and not os.path.isdir(output_dir):
        os.makedirs(output_dir)

    paths = []
    for tag in tags:
        subset = [r for r in records if r.experiment == tag and np.isfinite(r.sweep_value)]
        kind = tag.split(':')[0]
        fig = Figure(figsize=figsize)
        ax = fig.add_subplot(111)
        schemes = []
        for record in subset:
            if record.scheme not in schemes:
                schemes.append(record.scheme)
        for scheme in schemes:
            rows = sorted((r for r in subset if r.scheme == scheme), key=lambda r: r.sweep_value)
            x = [r.sweep_value for r in rows]
            y = [r.metric for r in rows]
            err = [r.stderr for r in rows]
            ax.errorbar(x, y, yerr=err, marker='o', capsize=3, label=scheme)
        if kind == 'ber-vs-snr':
            ax.set_yscale('log')
        if subset and subset[0].sweep_name == 'w':
            ax.set_xscale('log')
        if subset:
            ax.set_xlabel(LABELS.get(subset[0].sweep_name, subset[0].sweep_name))
        ax.set_ylabel(METRICS.get(kind, 'metric'))
        ax.set_title(tag)
        ax.grid(True, which='both', alpha=0.3)
        if schemes:
            ax.legend()

        path = os.path.join(output_dir, figure_name(tag) + '.png')
        fig.savefig(path, dpi=200, bbox_inches='tight')
        paths.append(path)

    return paths


# end of file
