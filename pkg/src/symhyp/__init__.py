"""Rational points on complete symmetric hypersurfaces over finite fields.

Exact F_q arithmetic, complete symmetric polynomial point counts,
generalized Vandermonde determinants, Reed-Solomon deep-hole
classification, and exhaustive small-field verification drivers.
"""

__version__ = "0.1.0"
