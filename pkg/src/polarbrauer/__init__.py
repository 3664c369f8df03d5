"""Exact diagram algebra for Brauer categories with a pole and their quotients.

Subpackages cover the plain Brauer category, the chord-relation checker, the
pole-decorated (affine) category with its normal forms, the affine
Temperley-Lieb quotient, exact orthosymplectic super linear algebra, the
enveloping superalgebra with PBW normal form, the representation functors
that tie everything together, and a command-line front end for the
verification suites.
"""

__version__ = "0.1.0"
