import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from timegp.errors import ConfigurationError, UsageError
from timegp.grouping import group_of, partition_by_time
from timegp.timing import EvalRecord


def records_from(durations):
    return [EvalRecord(i, d, 0, 1) for i, d in enumerate(durations)]


def test_ten_into_three():
    part = partition_by_time(records_from(range(10)), 3)
    assert [len(g) for g in part.groups] == [4, 3, 3]


def test_single_group_is_whole_sorted_population():
    durs = [5, 1, 4, 2, 8, 3, 7, 6]
    part = partition_by_time(records_from(durs), 1)
    assert len(part.groups) == 1
    assert part.groups[0] == sorted(range(8), key=lambda i: durs[i])


def test_singleton_groups():
    durs = [9, 2, 7, 1, 5]
    part = partition_by_time(records_from(durs), 5)
    assert all(len(g) == 1 for g in part.groups)
    flat = [g[0] for g in part.groups]
    assert flat == sorted(range(5), key=lambda i: durs[i])


@pytest.mark.parametrize("bad_g", [0, -1, 11])
def test_invalid_group_count(bad_g):
    with pytest.raises(ConfigurationError):
        partition_by_time(records_from(range(10)), bad_g)


def test_empty_records_rejected():
    with pytest.raises(ConfigurationError):
        partition_by_time([], 1)


def test_group_of_extremes():
    durs = [3, 9, 1, 7, 5, 2, 8, 4, 6, 0]
    part = partition_by_time(records_from(durs), 3)
    slowest = durs.index(max(durs))
    fastest = durs.index(min(durs))
    assert group_of(part, slowest) == 2
    assert group_of(part, fastest) == 0


def test_group_of_consistent_with_membership():
    part = partition_by_time(records_from([4, 4, 1, 1, 3, 2, 2]), 3)
    for g, members in enumerate(part.groups):
        for i in members:
            assert group_of(part, i) == g


def test_group_of_unknown_index():
    part = partition_by_time(records_from([1, 2]), 2)
    with pytest.raises(UsageError):
        group_of(part, 5)


@settings(max_examples=300, deadline=None)
@given(st.data())
def test_partition_properties(data):
    n = data.draw(st.integers(1, 400))
    g = data.draw(st.integers(1, n))
    # small duration range forces heavy ties
    durs = data.draw(st.lists(st.integers(0, 5), min_size=n, max_size=n))
    records = records_from(durs)
    part = partition_by_time(records, g)

    flat = [i for grp in part.groups for i in grp]
    # disjoint cover
    assert sorted(flat) == list(range(n))
    # concatenation is non-decreasing in duration
    assert all(durs[a] <= durs[b] for a, b in zip(flat, flat[1:]))
    # stable: within equal durations, original order preserved
    assert all(a < b for a, b in zip(flat, flat[1:]) if durs[a] == durs[b])
    # cardinality spread <= 1, larger groups first
    sizes = [len(grp) for grp in part.groups]
    assert max(sizes) - min(sizes) <= 1
    assert sizes == sorted(sizes, reverse=True)
    # cross-group ordering
    for ga, gb in zip(part.groups, part.groups[1:]):
        assert max(durs[i] for i in ga) <= min(durs[i] for i in gb)
