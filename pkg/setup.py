"""Builds the optional compiled scan kernel.

The package is fully functional without it (a pure-Python fallback is
selected at import time); set FFSUBSUM_PURE=1 to skip the extension
entirely.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("FFSUBSUM_PURE") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "ffsubsum._kernels._distscan",
                    ["src/ffsubsum/_kernels/_distscan.pyx"],
                )
            ],
            language_level=3,
        )
    except ImportError:
        pass

setup(ext_modules=ext_modules)
