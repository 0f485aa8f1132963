#-*- coding: utf-8 -*-

class Dashboard:
    """
    Resting place for the mimosim singletons.
    """
    # public data
    mimosim = None

    def report(self, msg):
        """
        Log a progress line on the plexus info channel; print it when no plexus is attached.
        """
        if self.mimosim is None:
            print(msg)
        else:
            self.mimosim.info.log(msg)
        return

# end of file
