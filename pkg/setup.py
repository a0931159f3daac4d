"""Optional compiled-kernel build.

The package is pure Python by default; if Cython and a C compiler are
available, the hot enumeration kernels are compiled for a large speedup.
A failed extension build never blocks installation: the import-time
selector in coxlen._kernels falls back to the pure implementation.
"""

import sys

from setuptools import setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    """Build the extension if possible, warn and continue otherwise."""

    def run(self):
        try:
            super().run()
        except Exception as exc:
            self._warn(exc)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            self._warn(exc)

    @staticmethod
    def _warn(exc):
        print(
            f"warning: compiled kernels skipped ({exc}); "
            "falling back to the pure-Python implementation",
            file=sys.stderr,
        )


ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        "src/coxlen/_kernels_cy.pyx",
        language_level=3,
        compiler_directives={"boundscheck": False, "wraparound": False},
    )
except ImportError:
    pass

setup(ext_modules=ext_modules, cmdclass={"build_ext": optional_build_ext})
