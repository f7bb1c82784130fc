"""Build script: compiles the accelerator extension when possible.

The package works without the extension; ``opencatalog._kernels`` falls
back to the pure-Python implementation at import time. Set
``OC_PURE_KERNELS=1`` to skip the compile entirely.
"""

import os
import sys

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    """Degrade to a pure-Python install if the extension fails to build."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # missing compiler, broken toolchain
            print(f"warning: skipping accelerator build: {exc}", file=sys.stderr)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"warning: failed to build {ext.name}: {exc}", file=sys.stderr)


ext_modules = []
if not os.environ.get("OC_PURE_KERNELS"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "opencatalog._kernels._speedups",
                    ["src/opencatalog/_kernels/_speedups.pyx"],
                    # -ffp-contract=off keeps double math bit-identical to
                    # the pure-Python backend (no FMA contraction).
                    extra_compile_args=["-O2", "-ffp-contract=off"],
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        pass

setup(ext_modules=ext_modules, cmdclass={"build_ext": OptionalBuildExt})
