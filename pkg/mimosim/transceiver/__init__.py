#-*- coding: utf-8 -*-

from . import solvers
from .Design import TransceiverDesign, SolverSettings
from .mse import tmse, per_user_mse, lagrangian
from .lagrange import (transmit_gram, lambda_brackets, transmit_power, solve_lambda,
                       solve_multiplier)
from .solvers import (receiver_update, precoder_update, design, design_baseline,
                      TMMSE, RobustTMMSE, SingularSystemError, select)

# end of file
