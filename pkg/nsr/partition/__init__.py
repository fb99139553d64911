from .partition import EMPTY, Partition, enumerate_partitions, partition_count
from .patterns import (
    DominantWeight,
    count_gt_patterns,
    gt_counts,
    gt_patterns,
    is_gt_pattern,
)
from .tuples import (
    DegreeVector,
    PartitionTuple,
    cylindric_chains_hold,
    cylindric_degree,
    degree_vector,
    enumerate_tuples,
    enumerate_tuples_of_size,
    from_cylindric,
    is_uniform,
    m_from_degree,
    m_vector,
    rotate_key,
    to_cylindric,
    tuples_by_degree,
)

__all__ = [
    "EMPTY",
    "Partition",
    "PartitionTuple",
    "DegreeVector",
    "DominantWeight",
    "enumerate_partitions",
    "partition_count",
    "enumerate_tuples",
    "enumerate_tuples_of_size",
    "tuples_by_degree",
    "degree_vector",
    "m_vector",
    "m_from_degree",
    "is_uniform",
    "rotate_key",
    "to_cylindric",
    "from_cylindric",
    "cylindric_chains_hold",
    "cylindric_degree",
    "is_gt_pattern",
    "gt_patterns",
    "count_gt_patterns",
    "gt_counts",
]
