"""Build script: compiles the sweep kernel extension when a toolchain exists.

The package works without the extension (a pure-Python kernel is selected at
import time), but the exhaustive corpus sweeps are ~100x slower that way, so
the build tries hard to compile and only then falls back.
"""

import sys

from setuptools import Extension, setup


def extensions():
    try:
        import numpy
        from Cython.Build import cythonize
    except ImportError as exc:
        print(f"steinerdiam: Cython/numpy unavailable ({exc}); "
              "building without the compiled kernel", file=sys.stderr)
        return []
    ext = Extension(
        "steinerdiam._ckern",
        ["src/steinerdiam/_ckern.pyx"],
        include_dirs=[numpy.get_include()],
        define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
        extra_compile_args=["-O3"],
    )
    return cythonize([ext], compiler_directives={"language_level": "3"})


setup(ext_modules=extensions())
