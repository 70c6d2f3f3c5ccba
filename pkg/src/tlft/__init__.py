"""State-sum invariants of triangulated manifolds in dimensions 2, 3 and 4."""
from .cocycles import (CocycleError, CocycleSystem, DW3Cocycle, check_conditions, check_dw3,
                       check_symmetries, search_systems, trivial_dw3, trivial_system)
from .cyclotomic import CycScalar, root
from .dw3 import partition_dw3
from .flat import BudgetExceeded
from .groups import DoubleLabel, FiniteGroup, GroupError, group_from_spec
from .pachner import MoveSite, apply_move, find_moves, random_walk
from .simplicial import Triangulation, TriangulationError, parse_triangulation
from .statesum2d import AlgebraData, group_algebra, partition_2d
from .tlft4 import PartitionConfig, partition_4d

__version__ = "0.1.0"

__all__ = [
    "AlgebraData", "BudgetExceeded", "CocycleError", "CocycleSystem", "CycScalar", "DW3Cocycle",
    "DoubleLabel", "FiniteGroup", "GroupError", "MoveSite", "PartitionConfig", "Triangulation",
    "TriangulationError", "apply_move", "check_conditions", "check_dw3", "check_symmetries",
    "find_moves", "group_algebra", "group_from_spec", "parse_triangulation", "partition_2d",
    "partition_4d", "partition_dw3", "random_walk", "root", "search_systems", "trivial_dw3",
    "trivial_system",
]
