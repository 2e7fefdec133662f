"""Build script: compiles the optional quadrature extension when Cython is
available.  The package works without it (pure-Python fallback kernels)."""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "shearlift._kernels._gk",
                ["src/shearlift/_kernels/_gk.pyx"],
            )
        ],
        language_level="3",
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
