import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("LATMAT_PURE") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "latmat._ordersearch",
                    ["src/latmat/_ordersearch.pyx"],
                    optional=True,
                )
            ],
            language_level=3,
        )
    except ImportError:
        # No Cython at build time: install the pure-Python fallback only.
        pass

setup(ext_modules=ext_modules)
