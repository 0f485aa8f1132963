#-*- coding: utf-8 -*-

import pyre
from .Dashboard import Dashboard

class Action(pyre.action, Dashboard, family='mimosim.tasks'):
    """
    Protocol for mimosim commands: the three experiments and the plot command.
    """

# end of file
