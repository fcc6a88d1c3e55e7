"""Build script: compiles the optional Cython scan kernels.

The package is fully functional without the compiled extension; the
numpy fallback in ``nccgeo._kernels_py`` is selected at import time when
``nccgeo._kernels`` is unavailable.
"""

from setuptools import setup

kwargs = {}
try:
    import numpy as np
    from Cython.Build import cythonize

    kwargs["ext_modules"] = cythonize(
        ["src/nccgeo/_kernels.pyx"],
        language_level=3,
        compiler_directives={"boundscheck": False, "wraparound": False},
    )
    kwargs["include_dirs"] = [np.get_include()]
except ImportError:
    pass

setup(**kwargs)
