#-*- coding: utf-8 -*-

import os
from setuptools import setup, find_packages

# Read version from the meta module without importing the package
src_path = os.path.dirname(os.path.abspath(__file__))
meta = {}
with open(os.path.join(src_path, 'mimosim', 'meta.py')) as fid:
    exec(fid.read(), meta)

setup(
    name='mimosim',
    version='%d.%d.%d' % meta['version'],
    description='Robust TMMSE transceiver design and link simulation for multiuser MIMO',
    packages=find_packages(include=['mimosim', 'mimosim.*']),
    scripts=['bin/mimosim'],
    python_requires='>=3.8',
    install_requires=[
        'numpy>=1.17',
        'scipy',
        'pandas>=1.5',
        'matplotlib',
    ],
    extras_require={
        'cli': ['pyre'],
        'test': ['pytest'],
    },
)

# end of file
