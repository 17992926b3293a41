"""Two monads on finite simple graphs.

The pendant-edge functor T hangs a new leaf on every vertex; its algebras
are exactly the perfect matchings. The triangle functor S grows a triangle
over every edge; its algebras are exactly the partial Steiner triple
systems. This package exposes the graph core, homomorphism tooling, both
monads, the structure/algebra bijections and the product constructions.
"""

from graphmonads._core import *  # noqa: F401,F403
from graphmonads._core import __version__  # noqa: F401
