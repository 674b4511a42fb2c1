"""Build script: compiles the optional Cython stepping kernel.

The package works without the extension (a numpy fallback is selected at
import time), so a failed compile downgrades to a warning instead of
aborting the install.
"""

import warnings

import numpy as np
from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:  # pragma: no cover - depends on toolchain
            warnings.warn(f"skipping Cython kernel build ({exc}); "
                          "pure-Python backend will be used")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:  # pragma: no cover - depends on toolchain
            warnings.warn(f"skipping {ext.name} ({exc})")


try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [
            Extension(
                "skymem.eit._mb_cython",
                sources=["src/skymem/eit/_mb_cython.pyx"],
                include_dirs=[np.get_include()],
                define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
            )
        ],
        language_level=3,
    )
except ImportError:  # pragma: no cover - cython missing entirely
    extensions = []

setup(ext_modules=extensions, cmdclass={"build_ext": OptionalBuildExt})
