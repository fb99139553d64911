import pytest

import nsr
from nsr.partition import EMPTY, Partition, enumerate_partitions, partition_count

logger = nsr._logger.getLogger("nsr")

pytestmark = [pytest.mark.unit]


@pytest.mark.parametrize("n, count", [(0, 1), (1, 1), (2, 2), (3, 3), (4, 5), (5, 7), (8, 22)])
def test_partition_count(n, count):
    assert partition_count(n) == count


def test_enumeration_order_and_sizes():
    parts = enumerate_partitions(4)
    assert parts[0] == Partition((4,))
    assert parts[-1] == Partition((1, 1, 1, 1))
    assert all(p.size == 4 for p in parts)
    assert len(set(parts)) == len(parts)


def test_normalization_and_validation():
    assert Partition((3, 1, 0, 0)) == Partition((3, 1))
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        enumerate_partitions(-1)


def test_parse():
    assert Partition.parse("") == EMPTY
    assert Partition.parse("(2,1)") == Partition((2, 1))
    assert str(Partition((3, 3, 1))) == "(3,3,1)"


def test_conjugate_and_boxes():
    p = Partition((3, 1))
    assert p.conjugate() == Partition((2, 1, 1))
    assert p.conjugate().conjugate() == p
    assert list(p.boxes()) == [(1, 1), (1, 2), (1, 3), (2, 1)]
    assert p.part(5) == 0


def test_contains_with_shift():
    assert Partition((3, 2)).contains(Partition((2, 2)))
    assert not Partition((2, 1)).contains(Partition((2, 2)))
    assert Partition((2,)).contains(Partition((5, 2)), shift=1)
