from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    # no Cython: the package runs on the pure-Python kernel
    ext_modules = []
else:
    ext_modules = cythonize(
        [Extension("ellmoments._census_c", ["src/ellmoments/_census_c.pyx"],
                   extra_compile_args=["-O3"])],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
