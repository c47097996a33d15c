"""Build hook for the optional compiled arithmetic kernel.

The package is pure Python by default; ``python setup.py build_ext --inplace``
compiles ``bicyclic._core`` when Cython and a C compiler are available, and
the kernel selector picks it up automatically at import.
"""

from setuptools import setup

try:
    from Cython.Build import cythonize

    extensions = cythonize(
        ["src/bicyclic/_core.pyx"],
        language_level=3,
    )
except ImportError:
    extensions = []

setup(ext_modules=extensions)
