import os
import pathlib
import warnings

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    """Build the accelerator if possible; fall back to pure Python
    silently otherwise (the package selects the implementation at
    import time)."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # missing compiler, broken toolchain
            warnings.warn(f"skipping compiled kernels: {exc}")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            warnings.warn(f"skipping {ext.name}: {exc}")


def extension_modules():
    if os.environ.get("ODDWHEEL_NO_EXT") == "1":
        return []
    pyx = pathlib.Path("src/oddwheel/_kernels.pyx")
    c_src = pyx.with_suffix(".c")
    try:
        from Cython.Build import cythonize

        return cythonize(
            [
                Extension(
                    "oddwheel._kernels",
                    [str(pyx)],
                    extra_compile_args=["-O3"],
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        if c_src.exists():
            return [
                Extension(
                    "oddwheel._kernels",
                    [str(c_src)],
                    extra_compile_args=["-O3"],
                )
            ]
        return []


setup(ext_modules=extension_modules(), cmdclass={"build_ext": OptionalBuildExt})
