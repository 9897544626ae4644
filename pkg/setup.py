import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("REVLIN_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("revlin._kernel_cy", ["src/revlin/_kernel_cy.pyx"])],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        # pure-Python kernel is a full fallback; the extension is optional
        ext_modules = []

setup(ext_modules=ext_modules)
