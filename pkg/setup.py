"""Build script: compiles the enumeration kernel when Cython is available.

The package works without the extension (a pure-Python kernel is selected
at import time), it is just much slower on the exhaustive sweeps.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

ext_modules = []
if cythonize is not None:
    ext_modules = cythonize(
        [
            Extension(
                "rainbowtri._kernel._ckernel",
                sources=["src/rainbowtri/_kernel/_ckernel.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        language_level=3,
    )

setup(ext_modules=ext_modules)
