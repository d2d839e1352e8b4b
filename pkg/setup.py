from setuptools import setup

try:
    from Cython.Build import cythonize
except ImportError:  # pure-Python install; the kernels fall back at import
    ext_modules = []
else:
    ext_modules = cythonize(
        ["src/fcrweyl/_kernels/_signed.pyx"],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
