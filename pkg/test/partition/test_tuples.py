import pytest

import nsr
from nsr import config
from nsr.exceptions import ResourceCapError
from nsr.partition import (
    PartitionTuple,
    cylindric_degree,
    degree_vector,
    enumerate_tuples,
    enumerate_tuples_of_size,
    from_cylindric,
    m_vector,
    rotate_key,
    to_cylindric,
)

logger = nsr._logger.getLogger("nsr")

pytestmark = [pytest.mark.unit]


def test_degree_vector_rows_cycle_through_indices():
    assert degree_vector(PartitionTuple.of((2, 1), ())) == (2, 1)
    assert degree_vector(PartitionTuple.of((), (1,))) == (0, 1)
    assert degree_vector(PartitionTuple.of((1, 1, 1), (), ())) == (1, 1, 1)


def test_m_vector_is_cyclic_difference():
    T = PartitionTuple.of((2,), ())
    assert m_vector(T) == (0 - 2, 2 - 0)
    assert sum(m_vector(T)) == 0


def test_parse_and_str():
    T = PartitionTuple.parse("2,1|-|1")
    assert T == PartitionTuple.of((2, 1), (), (1,))
    assert str(T) == "2,1|-|1"
    assert T.component(4) == T.component(1)


@pytest.mark.parametrize("n, size, count", [(2, 0, 1), (2, 1, 2), (2, 2, 5), (3, 2, 9)])
def test_tuple_counts(n, size, count):
    assert len(enumerate_tuples_of_size(n, size)) == count


def test_enumerate_by_degree_partitions_the_size_class():
    n, size = 2, 4
    total = 0
    for d0 in range(size + 1):
        tuples = enumerate_tuples(n, (d0, size - d0))
        assert all(T.degree_vector() == (d0, size - d0) for T in tuples)
        total += len(tuples)
    assert total == len(enumerate_tuples_of_size(n, size))


def test_enumerate_rejects_bad_vectors():
    with pytest.raises(ValueError):
        enumerate_tuples(2, (1, -1))
    with pytest.raises(ValueError):
        enumerate_tuples(2, (1, 1, 1))


def test_rotation_shifts_the_degree_vector():
    for T in enumerate_tuples_of_size(3, 3):
        assert T.rotate().degree_vector() == rotate_key(T.degree_vector())


@pytest.mark.parametrize("n", [2, 3])
def test_cylindric_round_trip(n):
    for size in range(5):
        for T in enumerate_tuples_of_size(n, size):
            collection, _ = to_cylindric(T)
            assert from_cylindric(collection, n) == T
            assert cylindric_degree(collection, n) == T.degree_vector()


def test_empty_tuple_is_cylindric():
    _, valid = to_cylindric(PartitionTuple.empty(2))
    assert valid


def test_resource_cap():
    cap = config.get("partition.max-total-size")
    with pytest.raises(ResourceCapError):
        enumerate_tuples_of_size(2, cap + 1)
