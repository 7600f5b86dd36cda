"""Build script: compiles the optional elimination kernel extension.

The package works without the extension (a pure-Python backend is selected
at import time); the build therefore treats compilation failures as
non-fatal.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "pelp._kern",
                ["src/pelp/_kern.pyx"],
                extra_compile_args=["-O3"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
