"""Build script: compiles the optional Cython kernel extension.

If Cython (or a C compiler) is unavailable the package still installs;
the pure numpy/Python kernels are used instead.
"""

import sys

from setuptools import Extension, setup


def _extensions():
    try:
        from Cython.Build import cythonize
    except ImportError:
        print("maxminfilter: Cython not found, building without the fast extension",
              file=sys.stderr)
        return []
    ext = Extension(
        "maxminfilter._fast_cy",
        ["src/maxminfilter/_fast_cy.pyx"],
        extra_compile_args=["-O3"],
    )
    return cythonize([ext], language_level=3)


setup(ext_modules=_extensions())
