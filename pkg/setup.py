import sys

from setuptools import setup

ext_modules = []
if "--pure-python" not in sys.argv:
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            ["src/cometric/_kernel/_echelon_c.pyx"], language_level=3
        )
    except ImportError:
        pass
else:
    sys.argv.remove("--pure-python")

setup(ext_modules=ext_modules)
