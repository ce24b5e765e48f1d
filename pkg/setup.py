#!/usr/bin/env python

import setuptools
import setuptools_scm

setuptools.setup(
    # https://github.com/pypa/setuptools_scm/#setuppy-usage-deprecated
    version=setuptools_scm.get_version(fallback_version="0.0.0.dev0"),
    use_scm_version=True,
    setup_requires=["setuptools_scm"],
    # confirm the version from command line:
    # python -m setuptools_scm
    # python setup.py --version
)

# -----------------------------------------------------------------------------
# :copyright: (c) 2024-2026, qhvar developers
#
# Distributed under the terms of the license in the file LICENSE.txt,
# distributed with this software.
# -----------------------------------------------------------------------------
