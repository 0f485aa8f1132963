#-*- coding: utf-8 -*-

# The version info
major = 0
minor = 1
revision = 0
version = (major, minor, revision)

# Copyright
copyright = 'copyright (c) 2026 all rights reserved'

# Banner
banner = """
    mimosim {major}.{minor}.{revision}
    {copyright}
""".format(major=major, minor=minor, revision=revision, copyright=copyright)

# Header
header = banner + """
Robust total-MMSE transceiver design and link simulation for
downlink multiuser MIMO with statistical channel knowledge."""

# end of file
