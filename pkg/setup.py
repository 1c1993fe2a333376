"""Build script: compiles the optional Cython speedup module.

The package is fully functional without the extension; every compiled
kernel has a pure-Python twin in ``exact2rel._speedups_py``.  If Cython
or a C compiler is unavailable the build proceeds without the extension
and the package falls back at import time.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [Extension("exact2rel._speedups", ["src/exact2rel/_speedups.pyx"])],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    extensions = []

setup(ext_modules=extensions)
