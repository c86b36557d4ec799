"""linkpoly: exact link-diagram invariants and verification suites.

Kauffman bracket and Jones polynomial by state sum, HOMFLY and Alexander by
skein resolution, Seifert/Murasugi machinery, even-valence graphs with
matrix-tree arborescence counts, and suites checking the coefficient and
fiberedness theorems for positive and almost positive diagrams against
brute-force oracles.
"""

from .laurent import (Laurent, Laurent2, homfly_to_alexander, homfly_to_jones,
                      substitute_homfly_to_alexander, substitute_homfly_to_jones)
from .diagram import (BraidWord, Diagram, DiagramError, GenerationError,
                      NonReducedError, braid_closure, parse_braid, parse_pd,
                      pretzel_diagram, prime_factor_count,
                      random_almost_positive_diagram, random_positive_diagram,
                      torus_closure)
from .seifert import (MurasugiDecomposition, SeifertData, SeifertGraph,
                      bennequin, betti1, canonical_euler, is_special,
                      is_special_alternating, positivity_class,
                      reduced_seifert_graph, rudolph_bennequin, seifert,
                      seifert_graph, separating_circles, special_summands)

__version__ = "0.1.0"
