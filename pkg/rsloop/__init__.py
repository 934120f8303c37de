# -*- coding: utf-8 -*-
""":mod:`rsloop` package

:copyright: Copyright (c) 2021-2026 RadiaSoft LLC.  All Rights Reserved.
:license: http://www.apache.org/licenses/LICENSE-2.0.html
"""
import pkg_resources

try:
    # We only have a version once the package is installed.
    __version__ = pkg_resources.get_distribution("rsloop").version
except pkg_resources.DistributionNotFound:
    pass
