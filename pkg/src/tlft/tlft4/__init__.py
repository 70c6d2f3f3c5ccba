"""Four-dimensional state sum on triangulated 4-manifolds."""
from .dual import DualSkeleton, ThreeFaceTriangulation, build_dual, triangulate_dual
from .model import StateSumModel
from .partition import PartitionConfig, PartitionResult, partition_4d
from .states import State, check_state, enumerate_states
from .weights import WeightEvaluator, weight_edge, weight_face, weight_tet

__all__ = [
    "DualSkeleton", "ThreeFaceTriangulation", "build_dual", "triangulate_dual",
    "StateSumModel", "PartitionConfig", "PartitionResult", "partition_4d",
    "State", "check_state", "enumerate_states",
    "WeightEvaluator", "weight_edge", "weight_face", "weight_tet",
]
