"""Combinatorial workbench for omnioriented toric manifolds.

Simple polytopes carrying integer dicharacteristic matrices, plus the
surgery operations and graded face rings built on top of them.
"""

from .dichar import (
    CharacteristicPair,
    Dicharacteristic,
    LatticeMap,
    flip,
    kernel_basis,
    normalize_at_vertex,
    pairs_equivalent,
    restrict_to_face,
    translate,
    validate,
)
from .errors import ToricError
from .facering import betti_check, graded_rank, presentation, total_chern
from .families import FamilySpec, Summand, bij, bn, build, cpn, parse_spec, product_pair, representative
from .polytope import (
    SimplePolytope,
    count_vectors,
    face_lattice,
    is_equivalent,
    make_cube,
    make_simplex,
    product,
)
from .surgery import ConnSumSpec, connected_sum, dichar_connected_sum, prune, pruning_sequence_for

__version__ = "0.1.0"
