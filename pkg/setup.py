import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("SALEMTORI_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "salemtori._kernels.ckernels",
                    sources=["src/salemtori/_kernels/ckernels.pyx"],
                )
            ],
            language_level="3",
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
