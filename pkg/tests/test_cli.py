#-*- coding: utf-8 -*-

import pytest

from mimosim import command_line


@pytest.mark.parametrize('argv,expected', [
    (['mimosim', 'ber-vs-snr', '--config', 'exp.cfg'],
     ['mimosim', 'ber_vs_snr', '--input=exp.cfg']),
    (['mimosim', 'mse-vs-w', '--config=exp.json', '--out=mse.csv'],
     ['mimosim', 'mse_vs_w', '--input=exp.json', '--out=mse.csv']),
    (['mimosim', 'convergence', '--config', 'exp.cfg', '--seed', '7', '--out', 'c.csv',
      '--threads', '4'],
     ['mimosim', 'convergence', '--input=exp.cfg', '--seed=7', '--out=c.csv',
      '--threads=4']),
    (['mimosim', 'ber_vs_snr', '--input=exp.cfg', '--seed=7'],
     ['mimosim', 'ber_vs_snr', '--input=exp.cfg', '--seed=7']),
])
def test_experiment_command_line(argv, expected):
    assert command_line(argv) == expected


def test_pyre_configuration_files_pass_through():
    argv = ['mimosim', 'ber-vs-snr', '--config=site.pfg', '--config', 'exp.cfg']
    assert command_line(argv) == ['mimosim', 'ber_vs_snr', '--config=site.pfg',
                                  '--input=exp.cfg']


def test_other_commands_untouched():
    assert command_line(['mimosim']) == ['mimosim']
    assert command_line(['mimosim', '--help']) == ['mimosim', '--help']
    argv = ['mimosim', 'plot', '--input=ber.csv', '--output_dir=figures']
    assert command_line(argv) == argv
    original = ['mimosim', 'mse-vs-w', '--config', 'exp.cfg']
    command_line(original)
    assert original == ['mimosim', 'mse-vs-w', '--config', 'exp.cfg']

# end of file
