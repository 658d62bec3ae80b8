"""Build hook for the optional compiled kernel.

Build in place with: python3 setup.py build_ext --inplace
Without Cython the package installs pure Python and uses the fallback scan.
"""
import numpy as np
from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "diskstab._scan",
                ["src/diskstab/_scan.pyx"],
                include_dirs=[np.get_include()],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
