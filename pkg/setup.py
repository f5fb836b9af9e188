"""Build script: compiles the optional interval branch-and-bound extension.

The package is fully functional without the extension (a pure-Python kernel
with identical semantics is selected at import time); the extension only
makes the certification hot loop ~two orders of magnitude faster.
"""
import os
import sys

from setuptools import setup

ext_modules = []
if os.environ.get("ISOPERIM_PURE_PYTHON") != "1":
    try:
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [
                Extension(
                    "isoperim._kernel",
                    ["src/isoperim/_kernel.pyx"],
                    # strict IEEE: no fp contraction, no fast-math -- the
                    # error-free transformations rely on exact rounding
                    extra_compile_args=["-O2", "-ffp-contract=off", "-fno-fast-math"],
                )
            ],
            language_level=3,
        )
    except Exception as exc:  # no Cython / no compiler: fall back silently
        sys.stderr.write(f"isoperim: building without compiled kernel ({exc})\n")

setup(ext_modules=ext_modules)
