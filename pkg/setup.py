"""Build script: compiles the optional C kernel, falling back to pure Python.

The extension accelerates free-group word rewriting (the inner loop of the
braid word-problem oracle). If no C compiler is available the install still
succeeds and chaingroup.kernel selects the pure-Python backend at import.
Set CHAINGROUP_NO_EXT=1 to skip the compilation attempt entirely.
"""

import os

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext
from setuptools.errors import CCompilerError, ExecError, PlatformError


class optional_build_ext(build_ext):
    def run(self):
        try:
            super().run()
        except (PlatformError, FileNotFoundError) as exc:
            print(f"warning: C kernel skipped ({exc}); using pure-Python backend")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except (CCompilerError, ExecError, PlatformError, FileNotFoundError) as exc:
            print(f"warning: C kernel skipped ({exc}); using pure-Python backend")


if os.environ.get("CHAINGROUP_NO_EXT"):
    extensions = []
else:
    extensions = [
        Extension(
            "chaingroup._speedups",
            ["src/chaingroup/_speedups.c"],
            optional=True,
        )
    ]

setup(ext_modules=extensions, cmdclass={"build_ext": optional_build_ext})
