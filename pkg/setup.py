"""Build script for the optional compiled betweenness kernels.

The package works without the extension (a pure-Python fallback is selected
at import time), so a failed Cython build degrades gracefully instead of
blocking installation.
"""

from setuptools import setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        "src/qagraph/_kernels/_cext.pyx",
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
