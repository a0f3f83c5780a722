import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("SATTHERMO_NO_EXT"):
    import numpy
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "satthermo._forest_kernel",
                ["src/satthermo/_forest_kernel.pyx"],
                include_dirs=[numpy.get_include()],
                extra_compile_args=["-O3"],
            )
        ],
        language_level=3,
    )

setup(ext_modules=ext_modules)
