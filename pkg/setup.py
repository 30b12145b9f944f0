"""Build script: compiles the optional speedup extension.

The package works without the extension (a pure-Python fallback is selected
at import time), so any build failure here is non-fatal.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "matlevel._kernels._speedups",
                ["src/matlevel/_kernels/_speedups.pyx"],
            )
        ],
        language_level=3,
    )
except Exception as exc:  # pragma: no cover - build environment dependent
    print(f"warning: building without compiled kernels ({exc})")

setup(ext_modules=ext_modules)
