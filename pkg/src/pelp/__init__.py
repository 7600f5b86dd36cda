"""Decoding with error locating pairs, beyond half the minimum distance.

Subpackages: gf (exact finite fields), linalg (dense exact linear
algebra), codes (star-product code algebra), rs / hermitian / cyclic
(code families and their pair constructions), decoders (the four
decoding algorithms and radius formulas), bench (seeded Monte Carlo
harness), cli (command-line front end).
"""

from .backend import backend_name, has_compiled, set_backend
from .gf import GF, Field, FieldElem

__version__ = "0.1.0"

__all__ = ["GF", "Field", "FieldElem", "backend_name", "has_compiled",
           "set_backend", "__version__"]
