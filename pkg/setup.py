"""Build script for the optional compiled multiplication kernel.

The package is pure Python plus one Cython extension for the inner loop of
truncated polynomial multiplication.  The extension is marked optional: if no
compiler (or no Cython) is available the install still succeeds and the pure
Python kernel is used at runtime.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "schubres._mulcore",
                ["src/schubres/_mulcore.pyx"],
                optional=True,
            )
        ],
        language_level="3",
    )

setup(ext_modules=ext_modules)
