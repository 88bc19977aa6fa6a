"""Build script: compiles the optional closure kernel extension.

The package works without the extension (a pure-Python kernel is selected at
import time), so any failure to cythonize or compile downgrades to a pure
build instead of aborting the install.
"""

from setuptools import Extension, setup


def extensions():
    try:
        from Cython.Build import cythonize
    except ImportError:
        return []
    ext = Extension(
        "parity_forge._closure_core",
        sources=["src/parity_forge/_closure_core.pyx"],
        extra_compile_args=["-O3"],
    )
    return cythonize(
        [ext],
        compiler_directives={
            "language_level": 3,
            "boundscheck": False,
            "wraparound": False,
            "initializedcheck": False,
            "cdivision": True,
        },
    )


setup(ext_modules=extensions())
