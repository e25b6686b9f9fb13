import os

from setuptools import setup

ext_modules = []
if not os.environ.get("ANYONGAS_NO_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            ["src/anyongas/_ckernels.pyx"], language_level=3
        )
    except ImportError:
        # no Cython: install the pure-Python fallback only
        ext_modules = []

setup(ext_modules=ext_modules)
