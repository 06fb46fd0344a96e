"""Build script for the optional compiled scan kernels.

The package is pure Python except for causabound._kernels, a small Cython
module holding the grid-scan inner loops.  Building it needs Cython and a C
compiler; when either is missing the extension is skipped and the package
falls back to the pure-Python twin at import time.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    extensions = [
        Extension(
            "causabound._kernels",
            ["src/causabound/_kernels.pyx"],
            optional=True,
        )
    ]
    # no -ffast-math and no arch flags: the pure twin must reproduce the
    # compiled results bit for bit
    ext_modules = cythonize(
        extensions,
        compiler_directives={
            "language_level": "3",
            "boundscheck": False,
            "wraparound": False,
        },
    )

setup(ext_modules=ext_modules)
