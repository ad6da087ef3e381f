"""Partition a time-annotated population into near-equal duration groups.

The population is stably sorted by evaluation duration (ties keep original
order) and cut into G contiguous slices.  When N = qG + r with r > 0 the
first r groups receive q + 1 members, so all larger groups come first.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import ConfigurationError, UsageError
from .timing import EvalRecord


@dataclass
class GroupPartition:
    """Ordered index groups; concatenation follows non-decreasing duration."""

    groups: list[list[int]]
    _index_to_group: dict[int, int] = field(default_factory=dict, repr=False)

    def __post_init__(self):
        if not self._index_to_group:
            for g, members in enumerate(self.groups):
                for i in members:
                    self._index_to_group[i] = g

    @property
    def num_groups(self) -> int:
        return len(self.groups)


def partition_by_time(records: list[EvalRecord], num_groups: int) -> GroupPartition:
    """Split records into ``num_groups`` contiguous duration-sorted groups."""
    n = len(records)
    if n == 0:
        raise ConfigurationError("cannot partition an empty record list")
    if not (1 <= num_groups <= n):
        raise ConfigurationError(
            f"group count must be in [1, {n}], got {num_groups}")
    order = sorted(range(n), key=lambda i: (records[i].duration, i))
    q, r = divmod(n, num_groups)
    groups = []
    pos = 0
    for g in range(num_groups):
        width = q + 1 if g < r else q
        groups.append(order[pos:pos + width])
        pos += width
    return GroupPartition(groups)


def group_of(partition: GroupPartition, individual_index: int) -> int:
    """Group containing the given population index."""
    try:
        return partition._index_to_group[individual_index]
    except KeyError:
        raise UsageError(f"index {individual_index} not in partition") from None
