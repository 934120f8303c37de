# -*- coding: utf-8 -*-
"""rsloop setup script

:copyright: Copyright (c) 2021-2026 RadiaSoft LLC.  All Rights Reserved.
:license: http://www.apache.org/licenses/LICENSE-2.0.html
"""
from pykern import pksetup

pksetup.setup(
    name="rsloop",
    author="RadiaSoft LLC",
    author_email="pip@radiasoft.net",
    description="Closed-loop three- and four-level quantum dynamics: dark states and population phase symmetry",
    install_requires=[
        "hypothesis",
        "numpy",
        "pykern",
        "scipy",
    ],
    license="http://www.apache.org/licenses/LICENSE-2.0.html",
    url="https://github.com/radiasoft/rsloop",
    classifiers=[
        "Development Status :: 2 - Pre-Alpha",
        "Environment :: Console",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: Apache Software License",
        "Natural Language :: English",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python",
        "Topic :: Scientific/Engineering :: Physics",
    ],
    include_package_data=True,
)
