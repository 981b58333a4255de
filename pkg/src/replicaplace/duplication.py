"""Threshold-gated file duplication with caching and fetching strategies.

A trigger is a (consumer zone, file) pair whose home zone is farther than
``A`` from the consumer and whose demand from that zone exceeds ``Y``.
Caching puts the replica in the consumer's zone. Fetching walks the file's
zones by descending demand and puts the replica in the first one the consumer
can reach within ``A``.
"""

from __future__ import annotations

import enum
import logging
from collections.abc import Iterable, Sequence
from dataclasses import asdict, dataclass

from .model import Cost, CostMatrix, DemandMatrix, Placement, Thresholds

log = logging.getLogger(__name__)


class Strategy(str, enum.Enum):
    CACHING = "caching"
    FETCHING = "fetching"


PLACED = "placed"
NO_OP = "no_op"
SKIPPED = "skipped"


@dataclass(frozen=True)
class TraceEvent:
    zone: int
    file: int
    action: str
    target: int | None = None
    reason: str | None = None

    def to_dict(self) -> dict:
        return {k: v for k, v in asdict(self).items() if v is not None}


class DuplicationTrace(tuple):
    """Events in scan order."""

    def placed(self) -> list[TraceEvent]:
        return [e for e in self if e.action == PLACED]

    def skipped(self) -> list[TraceEvent]:
        return [e for e in self if e.action == SKIPPED]


def triggers(
    placement: Placement, demand: DemandMatrix, costs: CostMatrix, thresholds: Thresholds
) -> list[tuple[int, int]]:
    """All (consumer zone, file) pairs authorizing a duplicate.

    Only home zones are tested; replicas never trigger or block anything
    here. Ordered by consumer zone, then home zone, then file id.
    """
    A, Y = thresholds.A, thresholds.Y
    found = []
    for f, hosts in placement.items():
        j = hosts.home
        for i in costs.zones:
            if costs[i, j] > A and demand.hits(f, i) > Y:
                found.append((i, j, f))
    found.sort()
    return [(i, f) for i, _, f in found]


def duplicate_caching(
    placement: Placement, trigger_list: Iterable[tuple[int, int]]
) -> tuple[Placement, DuplicationTrace]:
    events = []
    for i, f in trigger_list:
        if i in placement[f]:
            events.append(TraceEvent(i, f, NO_OP, target=i))
            continue
        placement = placement.with_replica(f, i)
        events.append(TraceEvent(i, f, PLACED, target=i))
    return placement, DuplicationTrace(events)


def demand_ranking(f: int, demand: DemandMatrix, exclude: int) -> list[int]:
    """Zones other than ``exclude`` by descending hits on ``f``, lower index first on ties."""
    row = demand[f]
    zones = [z for z in range(1, len(row) + 1) if z != exclude]
    return sorted(zones, key=lambda z: (-row[z - 1], z))


def retrieve(
    f: int, i: int, placement: Placement, demand: DemandMatrix, costs: CostMatrix, A: Cost
) -> int | None:
    """First zone in the demand ranking of ``f`` that zone ``i`` reaches within ``A``.

    The file's home is excluded from the ranking. Returns ``None`` when no
    zone qualifies.
    """
    for k in demand_ranking(f, demand, exclude=placement[f].home):
        if costs[i, k] <= A:
            return k
    return None


def duplicate_fetching(
    placement: Placement,
    trigger_list: Sequence[tuple[int, int]],
    demand: DemandMatrix,
    costs: CostMatrix,
    A: Cost,
) -> tuple[Placement, DuplicationTrace]:
    events = []
    for i, f in trigger_list:
        k = retrieve(f, i, placement, demand, costs, A)
        if k is None:
            log.warning("no zone serves file %d to zone %d within A=%s", f, i, A)
            events.append(TraceEvent(i, f, SKIPPED, reason=f"no zone within A={A}"))
        elif k in placement[f]:
            events.append(TraceEvent(i, f, NO_OP, target=k))
        else:
            placement = placement.with_replica(f, k)
            events.append(TraceEvent(i, f, PLACED, target=k))
    return placement, DuplicationTrace(events)


def duplicate(
    placement: Placement,
    demand: DemandMatrix,
    costs: CostMatrix,
    thresholds: Thresholds,
    strategy: Strategy | str,
) -> tuple[Placement, DuplicationTrace]:
    """Run one full duplication pass with the given strategy."""
    strategy = Strategy(strategy)
    trig = triggers(placement, demand, costs, thresholds)
    if strategy is Strategy.CACHING:
        return duplicate_caching(placement, trig)
    return duplicate_fetching(placement, trig, demand, costs, thresholds.A)
