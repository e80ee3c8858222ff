"""Winding and coloring invariants for free metabelian groups of prime-power exponent."""

from .laurent import LaurentPoly, TorusPiece, reduce_mod_torus
from .winding import NotInDerivedSubgroup, winding_invariant, winding_oracle
from .word import Word, WordSyntaxError, format_word, parse_word

__version__ = "0.1.0"
