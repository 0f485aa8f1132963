#-*- coding: utf-8 -*-

import pyre
from .Dashboard import Dashboard

class Task(pyre.panel(), Dashboard):
    """
    Base class for mimosim commands. Commands report progress through Dashboard.report.
    """

# end of file
