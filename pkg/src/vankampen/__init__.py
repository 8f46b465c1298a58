"""Almost r-embeddability of simplicial complexes via the deleted product criterion."""

from .complex import (
    SimplicialComplex, closure, complete_bipartite, complete_graph, parse, serialize, simplex,
    simplex_skeleton, skeleton, tverberg_complex,
)
from .delprod import DeletedProduct, build_deleted_product
from .genmaps import PLMap, assemble_cocycle, sample_map
from .obstruction import class_vanishes
from .verdict import Outcome, Regime, check_metastable, decide, regime

__version__ = "0.1.0"
