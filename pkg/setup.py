"""Build script: compiles the enumeration hot kernel if Cython + a C compiler
are available.  The package works without it (a pure-Python kernel with the
same interface is selected at import time)."""

import os

from setuptools import Extension, setup

ext_modules = []
_pyx = os.path.join(os.path.dirname(__file__), "src", "pglat", "_enumcore.pyx")
try:
    from Cython.Build import cythonize

    if os.path.exists(_pyx):
        ext_modules = cythonize(
            [
                Extension(
                    "pglat._enumcore",
                    ["src/pglat/_enumcore.pyx"],
                    extra_compile_args=["-O3"],
                    optional=True,
                )
            ],
            language_level=3,
        )
except ImportError:
    pass

setup(ext_modules=ext_modules)
