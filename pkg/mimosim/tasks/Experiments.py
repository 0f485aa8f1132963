#-*- coding: utf-8 -*-

import pyre
from ..components import task
from .. import runner


class Experiment(task):
    """
    Shared options of the experiment commands.
    """

    # Name in the experiment registry
    experiment = None

    input = pyre.properties.str(default=None)
    input.doc = 'Experiment configuration file (INI or JSON; default: built-in defaults)'

    out = pyre.properties.str(default=None)
    out.doc = 'Output CSV file (default: <experiment>.csv)'

    seed = pyre.properties.int(default=None)
    seed.doc = 'Master seed overriding the configuration'

    threads = pyre.properties.int(default=None)
    threads.doc = 'Worker threads (default: MIMO_SIM_THREADS or 1)'

    @pyre.export
    def main(self, plexus, argv):
        """
        Main entrypoint into this application.
        """
        self.report('running %s (config: %s)' % (self.experiment, self.input or 'defaults'))
        status = runner.run(self.input, self.experiment, out_path=self.out, seed=self.seed,
                            threads=self.threads)
        if status == runner.EXIT_OK:
            self.report('wrote %s' % (self.out or '%s.csv' % self.experiment))
        return status


class BerVsSnr(Experiment, family='mimosim.ber_vs_snr'):
    """
    Average BER versus SNR for the robust and baseline designs.
    """
    experiment = 'ber-vs-snr'


class MseVsW(Experiment, family='mimosim.mse_vs_w'):
    """
    Simulated average squared error versus the Rician factor at a fixed SNR.
    """
    experiment = 'mse-vs-w'


class Convergence(Experiment, family='mimosim.convergence'):
    """
    Design objective per iteration of the alternating algorithm.
    """
    experiment = 'convergence'


# end of file
