#-*- coding: utf-8 -*-

import pyre
from ..components import action

@pyre.foundry(implements=action, tip='Average BER versus SNR for both designs')
def ber_vs_snr():
    from .Experiments import BerVsSnr
    return BerVsSnr

@pyre.foundry(implements=action, tip='Average squared error versus the Rician factor W')
def mse_vs_w():
    from .Experiments import MseVsW
    return MseVsW

@pyre.foundry(implements=action, tip='Design objective versus iteration number')
def convergence():
    from .Experiments import Convergence
    return Convergence

@pyre.foundry(implements=action, tip='Plot experiment results from a CSV file')
def plot():
    from .Plot import Plot
    return Plot

# end of file
