"""Build hook: compile the Cython kernel when a toolchain is available.

The package works without the extension (resum._backend falls back to the
pure-Python kernel), so a failed build is downgraded to a warning.
"""

import warnings

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "resum._kernel",
                ["src/resum/_kernel.pyx"],
                libraries=["quadmath"],
            )
        ],
        language_level=3,
    )
except Exception as exc:  # pragma: no cover
    warnings.warn("building without compiled kernel: %s" % exc)

setup(ext_modules=ext_modules)
