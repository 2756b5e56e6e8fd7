# Builds the optional Cython kernel. If Cython or a C compiler is missing the
# package still installs and runs on the pure-Python kernel.
from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "resonances._kernels._ckernels",
                ["src/resonances/_kernels/_ckernels.pyx"],
                extra_compile_args=["-O3"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
