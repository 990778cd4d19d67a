"""Recurrent sandpile configurations on Ferrers graphs, classified through
0/1 tableaux, decorated permutations and intransitive trees.

The bipartite graph of a Ferrers shape has a vertex per row and column,
labeled along the border, with the top row as sink. Recurrent chip
configurations on it decompose uniquely into a minimal recurrent part (an
EW-tableau, equivalently a permutation) and a bounded surplus (the
decoration); the decorated permutations in turn match labeled intransitive
trees. Every encoding here is executable in both directions, and the
oracles module cross-checks them all against brute force on small shapes.
"""

from .errors import FormatError, DomainError, BudgetError
from .diagrams import FerrersDiagram, enumerate_diagrams
from . import sandpile
from . import tableaux
from . import permutations
from . import trees
from . import oracles
from . import serialize
from .tableaux import EWTableau

__version__ = "0.1.0"

__all__ = [
    "FormatError",
    "DomainError",
    "BudgetError",
    "FerrersDiagram",
    "EWTableau",
    "enumerate_diagrams",
    "sandpile",
    "tableaux",
    "permutations",
    "trees",
    "oracles",
    "serialize",
    "__version__",
]
