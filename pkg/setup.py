import os

from setuptools import Extension, setup

# The compiled kernel is an optional accelerator: greedybench falls back to a
# pure-Python implementation of the same routines when the extension is
# missing.  Set GREEDYBENCH_NO_EXTENSION=1 to skip the build entirely.
ext_modules = []
if not os.environ.get("GREEDYBENCH_NO_EXTENSION"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("greedybench._kernel", ["src/greedybench/_kernel.pyx"])],
            language_level=3,
        )
    except ImportError:
        pass

setup(ext_modules=ext_modules)
