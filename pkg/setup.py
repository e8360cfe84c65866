import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("DCDECOMP_NO_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("dcdecomp._dd_cy", ["src/dcdecomp/_dd_cy.pyx"])],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
