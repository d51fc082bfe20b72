"""Build script.

The compiled convolution kernel is optional: if Cython or a C compiler is
missing the install proceeds with the pure Python fallback.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "vvmf._kernel._convolve",
                ["src/vvmf/_kernel/_convolve.pyx"],
                extra_compile_args=["-O2"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
