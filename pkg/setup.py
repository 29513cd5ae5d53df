from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

# The compiled kernels are optional: if Cython or a C compiler is missing the
# package installs anyway and falls back to the pure numpy implementation.
extensions = [
    Extension(
        "qubit_bundle._kernels_cy",
        ["src/qubit_bundle/_kernels_cy.pyx"],
        extra_compile_args=["-O3"],
        optional=True,
    )
]

setup(
    ext_modules=cythonize(extensions, compiler_directives={"language_level": "3"})
    if cythonize is not None
    else [],
)
