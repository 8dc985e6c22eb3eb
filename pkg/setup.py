"""Build script: the Cython kernels are optional.

If Cython or a C compiler is missing the package installs without the
extension and ``twovcss.kernels`` falls back to pure Python.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize
    from setuptools import Extension

    ext_modules = cythonize(
        [Extension("twovcss._ckernels", ["src/twovcss/_ckernels.pyx"], extra_compile_args=["-O3"])],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
