"""Build script: compiles the optional arithmetic kernel extension.

The package works without the extension (a pure-Python fallback is
selected at import time), so a failed compile is tolerated rather than
fatal.  `benchmarks/bench_kernels.py` compares the two backends.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("salemnum._kernels", ["src/salemnum/_kernels.pyx"])],
        language_level=3,
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
