#-*- coding: utf-8 -*-

from .Action import Action as action
from .Task import Task as task
from .Dashboard import Dashboard as dashboard
from .MimoSim import MimoSim as mimosim

# end of file
