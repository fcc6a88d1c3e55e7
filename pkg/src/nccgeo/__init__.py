"""nccgeo: numerical geometry of non-compactly causal symmetric spaces.

Euler elements and 3-gradings of the classical matrix families, the
invariant cones and tube domains they generate, the Jordan triple /
Bergman machinery on the open Bruhat cell, modular flows and their
wedge domains, and the fully explicit de Sitter model with its causal
order, crown and KMS tests.
"""

from .backend import USING_COMPILED
from .numerics import DEFAULT_TOLS, Tolerances

__version__ = "0.1.0"

__all__ = ["Tolerances", "DEFAULT_TOLS", "USING_COMPILED", "__version__"]
