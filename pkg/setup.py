"""Builds the optional compiled polynomial kernels; the package works without them."""

import os

from setuptools import setup

ext_modules = []
if os.environ.get("MOULDCALC_PURE", "") not in ("1", "true", "yes"):
    try:
        from Cython.Build import cythonize
    except ImportError:
        pass
    else:
        ext_modules = cythonize(
            ["src/mouldcalc/exactalg/_kernels.pyx"],
            compiler_directives={"language_level": "3"},
            quiet=True,
        )

setup(ext_modules=ext_modules)
