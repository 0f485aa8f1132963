#-*- coding: utf-8 -*-

# The submodules
from . import channel
from . import transceiver
from . import sim
from . import configuration
from . import records
from . import runner
from . import utilities

# Common entry points
from .configuration import SimConfig, ConfigurationError, parse_config, load_config
from .transceiver import design, design_baseline
from .runner import run

# Experiment commands and the options they take as '--name value' pairs
EXPERIMENT_COMMANDS = ('ber_vs_snr', 'mse_vs_w', 'convergence')
VALUE_OPTIONS = ('input', 'out', 'seed', 'threads')

def command_line(argv):
    """
    Rewrite a command line into the form pyre reads.

    The command name may use hyphens (ber-vs-snr) or underscores (ber_vs_snr). For the
    experiment commands, '--config <path>' and '--config=<path>' name the experiment
    configuration and become '--input=<path>'; a '.pfg' path is left to pyre. Options
    given as '--name value' are joined into '--name=value'.

    Parameters
    ----------
    argv: list of str
        Program name followed by the arguments.

    Returns
    -------
    argv: list of str
    """
    argv = list(argv)
    if len(argv) < 2 or argv[1].startswith('-'):
        return argv
    command = argv[1].replace('-', '_')
    result = argv[:1] + [command]
    if command not in EXPERIMENT_COMMANDS:
        return result + argv[2:]

    args = argv[2:]
    index = 0
    while index < len(args):
        arg = args[index]
        name, sep, value = arg[2:].partition('=')
        if not arg.startswith('--') or name not in ('config',) + VALUE_OPTIONS:
            result.append(arg)
            index += 1
            continue
        if not sep and index + 1 < len(args) and not args[index + 1].startswith('--'):
            value = args[index + 1]
            sep = '='
            index += 1
        index += 1
        if name == 'config' and sep and not value.endswith('.pfg'):
            name = 'input'
        result.append('--%s%s%s' % (name, sep, value))
    return result

def main():
    """
    The main entrypoint to mimosim using the plexus.
    """
    import sys
    # The command line must be settled before pyre reads it
    sys.argv[:] = command_line(sys.argv)
    plexus = boot()
    return plexus.run()

def boot():
    """
    Internal function to create the plexus and initialize the dashboard. The plexus is
    built on demand, so the numerical library imports without pyre.
    """
    # Access the plexus factory
    from .components import mimosim
    # Build one
    plexus = mimosim(name='mimosim.plexus')

    # Get the dashboard
    from .components import dashboard
    # Attach the singletons
    import weakref
    dashboard.mimosim = weakref.proxy(plexus)

    return plexus

# Meta information
from . import meta

# end of file
