#-*- coding: utf-8 -*-

from .modem import ModemSymbolBlock, qpsk_modulate, qpsk_demodulate, random_block
from .link import TrialResult, merge_results, run_trial
from .parallel import partition, dispatch
from .experiments import (ExperimentRecord, experiment_ber_vs_snr, experiment_mse_vs_w,
                          experiment_convergence, EXPERIMENTS)

# end of file
