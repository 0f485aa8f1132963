#-*- coding: utf-8 -*-

from .correlation import CorrelationMatrix, exp_correlation, psd_sqrt
from .ChannelStats import (ChannelStatsRaw, ChannelStats, ChannelRealization,
                           to_equivalent, sample_channel, draw_channel_mean,
                           average_channel_power)

# end of file
