import os

from setuptools import Extension, setup

# HERMTRIPLE_SKIP_EXT=1 installs the pure-Python package only; the kernels
# fall back to the numpy implementation at import time.
ext_modules = []
if os.environ.get("HERMTRIPLE_SKIP_EXT") != "1":
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "hermtriple._kernels_cy",
                ["src/hermtriple/_kernels_cy.pyx"],
                # -ffp-contract=off keeps the compiled arithmetic close to the
                # numpy fallback (no FMA contraction surprises).
                extra_compile_args=["-O3", "-ffp-contract=off"],
            )
        ],
        language_level=3,
    )

setup(ext_modules=ext_modules)
