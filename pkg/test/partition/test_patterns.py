import pytest

import nsr
from nsr.partition import (
    DominantWeight,
    Partition,
    PartitionTuple,
    count_gt_patterns,
    gt_counts,
    is_gt_pattern,
    partition_count,
)

logger = nsr._logger.getLogger("nsr")

pytestmark = [pytest.mark.unit]


def test_weight_validation():
    with pytest.raises(ValueError):
        DominantWeight(2, -1)
    with pytest.raises(ValueError):
        DominantWeight(2, 0, Partition((1,)))
    with pytest.raises(ValueError):
        DominantWeight(2, 3, Partition((1, 1, 1)))
    assert DominantWeight(2, 1, Partition((1,))).bounds() == (0, 1)


@pytest.mark.parametrize("n", [2, 3])
def test_level_zero_counts_are_partition_numbers(n):
    counts = gt_counts(DominantWeight(n, 0), 2 * n)
    for d, c in counts.items():
        assert len(set(d)) == 1
        assert c == partition_count(d[0])


def test_interlacing():
    w = DominantWeight(2, 1)
    assert is_gt_pattern(PartitionTuple.of((), (1,)), w)
    assert not is_gt_pattern(PartitionTuple.of((1,), ()), w)
    assert not is_gt_pattern(PartitionTuple.of((), (2,)), w)


def test_level_one_counts():
    w = DominantWeight(2, 1)
    assert count_gt_patterns(w, (0, 0)) == 1
    assert count_gt_patterns(w, (0, 1)) == 1
    assert count_gt_patterns(w, (1, 0)) == 0
