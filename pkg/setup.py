"""Build script for the optional compiled kernel extension.

The package works without the extension: when it is missing or fails to
compile, the pure-Python kernels in ``mecdsa._kernels.pure`` are selected
at import time.  Build in place with ``python setup.py build_ext --inplace``.
"""

import warnings

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    """Let installation succeed even when C compilation is impossible."""

    def run(self):
        try:
            super().run()
        except Exception as exc:
            _warn_skipped(exc)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            _warn_skipped(exc)


def _warn_skipped(exc):
    warnings.warn(
        "compiled kernels were not built (%s); the pure-Python backend "
        "will be used instead" % exc
    )


def extensions():
    try:
        from Cython.Build import cythonize
    except ImportError:
        return []
    return cythonize(
        [
            Extension(
                "mecdsa._kernels._native",
                sources=["src/mecdsa/_kernels/_native.pyx"],
            )
        ],
        language_level=3,
    )


setup(ext_modules=extensions(), cmdclass={"build_ext": optional_build_ext})
