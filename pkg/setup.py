"""Build script: compiles the optional C kernel extension when Cython is available.

The package is fully functional without the extension; ``trigspec._kernels``
falls back to the NumPy implementations at import time.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "trigspec._kernels._fast",
                sources=["src/trigspec/_kernels/_fast.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        language_level=3,
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
