"""Tree-decompositions that display the separable k-blocks of a graph."""

from .errors import (
    BlockCollision,
    BlockRefineError,
    BoundExceeded,
    IncompleteSystem,
    InputError,
    InvariantViolation,
    NoGluingLeaf,
    ParseError,
    PreconditionViolation,
)
from .graph import Graph, automorphisms, components, neighbourhood
from .initial import NestedSystem, distinguishing_system, initial_decomposition, tree_from_nested
from .profiles import (
    Block,
    Profile,
    efficiently_distinguishes,
    enumerate_profiles,
    find_k_blocks,
    induced_profile,
    is_robust,
    is_separable_block,
    min_separator_size,
)
from .refine import block_star, refine_td, star_decomposition
from .separations import OrientedSeparation, Separation
from .treedec import TreeDecomposition, check_canonical, validate

__version__ = "0.1.0"
