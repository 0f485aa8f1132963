#-*- coding: utf-8 -*-

import pyre

class MimoSim(pyre.plexus, family='mimosim.global'):
    """
    The mimosim executive and application wrapper.
    """

    pyre_namespace = 'mimosim'
    from .Action import Action as pyre_action

    def help(self, **kwargs):
        """
        Embellish the pyre.plexus help by printing out the banner first.
        """
        from .. import meta
        # Get a channel
        channel = self.info
        # Make some space
        channel.line()
        # Print header
        channel.line(meta.header)
        # Call plexus help
        super().help(**kwargs)


# end of file
