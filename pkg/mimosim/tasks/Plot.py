#-*- coding: utf-8 -*-

import pyre
from ..components import task
from ..records import read_records
from ..plotting import plot_records


class Plot(task, family='mimosim.plot'):
    """
    Plot experiment results.
    """

    input = pyre.properties.str(default='ber-vs-snr.csv')
    input.doc = 'Result CSV written by an experiment command'

    output_dir = pyre.properties.str(default='figures')
    output_dir.doc = 'Directory for saving figures'

    figwidth = pyre.properties.int(default=8)
    figwidth.doc = 'Figure width'

    figheight = pyre.properties.int(default=6)
    figheight.doc = 'Figure height'

    @pyre.export
    def main(self, plexus, argv):
        """
        Main entrypoint into this application.
        """
        records = read_records(self.input)
        paths = plot_records(records, self.output_dir, figsize=(self.figwidth, self.figheight))
        for path in paths:
            self.report('saved %s' % path)
        return 0


# end of file
