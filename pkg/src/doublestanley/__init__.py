"""Double Stanley symmetric polynomials, primed insertion and bicrystals."""

from .coxeter import SignedPermutation, Word, evaluate, length, reduced_words
from .errors import DomainError, DoubleStanleyError, ParseError, ResourceCapError, TruncationError
from .stanley import f_a, f_c, f_d
from .symfunc import MultiPoly, SchurExpansion, expand_in_schur

__version__ = "0.1.0"
__all__ = ["SignedPermutation", "Word", "evaluate", "length", "reduced_words", "DomainError", "DoubleStanleyError", "ParseError", "ResourceCapError", "TruncationError", "f_a", "f_c", "f_d", "MultiPoly", "SchurExpansion", "expand_in_schur"]
