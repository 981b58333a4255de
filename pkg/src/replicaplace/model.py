"""Value types shared across the package.

Zones and files are identified by 1-based integers everywhere in the public
API. Costs and hits are kept as exact numbers (``int``, or ``Fraction`` for
non-integral costs) so that argmin and gain computations never depend on
floating point rounding.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Mapping, Sequence
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from types import MappingProxyType
from typing import Union

Cost = Union[int, Fraction]


class NetworkError(ValueError):
    """Raised when network inputs violate a model invariant."""


class InvariantError(AssertionError):
    """Raised when an algorithm detects a broken internal invariant."""


def exact(value: object, what: str) -> Cost:
    """Convert a numeric value to an exact ``int`` or ``Fraction``."""
    if isinstance(value, bool):
        raise NetworkError(f"{what}: boolean is not a number")
    if isinstance(value, int):
        return value
    if isinstance(value, Rational):
        frac = Fraction(value)
    elif isinstance(value, float):
        if value != value or value in (float("inf"), float("-inf")):
            raise NetworkError(f"{what}: must be finite, got {value!r}")
        frac = Fraction(str(value))
    elif isinstance(value, str):
        try:
            frac = Fraction(value)
        except ValueError:
            raise NetworkError(f"{what}: not a number: {value!r}") from None
    else:
        raise NetworkError(f"{what}: not a number: {value!r}")
    return int(frac) if frac.denominator == 1 else frac


@dataclass(frozen=True)
class CostMatrix:
    """Symmetric zone-to-zone access costs with a zero diagonal.

    Indexing is 1-based: ``costs[i, j]``.
    """

    rows: tuple[tuple[Cost, ...], ...]

    def __post_init__(self) -> None:
        n = len(self.rows)
        for r, row in enumerate(self.rows, start=1):
            if len(row) != n:
                raise NetworkError(f"cost matrix row {r} has {len(row)} entries, expected {n}")
        for i in range(n):
            for j in range(n):
                v = self.rows[i][j]
                if v < 0:
                    raise NetworkError(f"negative cost at ({i + 1},{j + 1}): {v}")
        for i in range(n):
            if self.rows[i][i] != 0:
                raise NetworkError(f"nonzero diagonal at ({i + 1},{i + 1}): {self.rows[i][i]}")
        for i in range(n):
            for j in range(i + 1, n):
                if self.rows[i][j] != self.rows[j][i]:
                    raise NetworkError(
                        f"asymmetric costs at ({i + 1},{j + 1}): "
                        f"{self.rows[i][j]} != {self.rows[j][i]}"
                    )

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[object]]) -> CostMatrix:
        converted = []
        for i, row in enumerate(rows, start=1):
            converted.append(
                tuple(exact(v, f"cost ({i},{j})") for j, v in enumerate(row, start=1))
            )
        return cls(tuple(converted))

    @property
    def n(self) -> int:
        return len(self.rows)

    @property
    def zones(self) -> range:
        return range(1, self.n + 1)

    def __getitem__(self, key: tuple[int, int]) -> Cost:
        i, j = key
        if not (1 <= i <= self.n and 1 <= j <= self.n):
            raise KeyError(f"zone pair ({i},{j}) outside 1..{self.n}")
        return self.rows[i - 1][j - 1]


@dataclass(frozen=True)
class FileMeta:
    id: int
    home: int
    size_tb: Cost = 1

    def __post_init__(self) -> None:
        if not (self.size_tb > 0):
            raise NetworkError(f"file {self.id}: size_tb must be > 0, got {self.size_tb}")


class DemandMatrix(Mapping[int, tuple[int, ...]]):
    """Hits per (file, zone); ``demand[f]`` is the per-zone hit vector of file ``f``."""

    def __init__(self, hits: Mapping[int, Sequence[int]]):
        rows = {}
        for f, vec in hits.items():
            checked = []
            for z, h in enumerate(vec, start=1):
                if isinstance(h, bool) or not isinstance(h, int):
                    if isinstance(h, float) and h.is_integer():
                        h = int(h)
                    else:
                        raise NetworkError(f"file {f}, zone {z}: hits must be an integer, got {h!r}")
                if h < 0:
                    raise NetworkError(f"file {f}, zone {z}: negative hits {h}")
                checked.append(h)
            rows[f] = tuple(checked)
        self._rows = MappingProxyType(rows)

    def hits(self, f: int, i: int) -> int:
        try:
            vec = self._rows[f]
        except KeyError:
            raise KeyError(f"unknown file {f}") from None
        if not 1 <= i <= len(vec):
            raise KeyError(f"unknown zone {i} for file {f}")
        return vec[i - 1]

    def __getitem__(self, f: int) -> tuple[int, ...]:
        return self._rows[f]

    def __iter__(self) -> Iterator[int]:
        return iter(self._rows)

    def __len__(self) -> int:
        return len(self._rows)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, DemandMatrix):
            return dict(self._rows) == dict(other._rows)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(tuple(sorted(self._rows.items())))

    def __repr__(self) -> str:
        return f"DemandMatrix({dict(self._rows)!r})"


@dataclass(frozen=True)
class Hosts:
    """Where one file lives: its home zone plus replica zones in placement order."""

    home: int
    replicas: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.home in self.replicas:
            raise InvariantError(f"home zone {self.home} listed as a replica")
        if len(set(self.replicas)) != len(self.replicas):
            raise InvariantError(f"duplicate replica zones {self.replicas}")

    @property
    def zones(self) -> tuple[int, ...]:
        return (self.home, *self.replicas)

    def __contains__(self, zone: object) -> bool:
        return zone == self.home or zone in self.replicas


class Placement(Mapping[int, Hosts]):
    """Immutable mapping file id -> :class:`Hosts`.

    ``origins`` keeps the upload zone each file had before relocation, for
    reporting only.
    """

    def __init__(self, hosts: Mapping[int, Hosts], origins: Mapping[int, int] | None = None):
        self._hosts = MappingProxyType(dict(sorted(hosts.items())))
        self.origins = MappingProxyType(dict(origins) if origins is not None else {})

    def __getitem__(self, f: int) -> Hosts:
        return self._hosts[f]

    def __iter__(self) -> Iterator[int]:
        return iter(self._hosts)

    def __len__(self) -> int:
        return len(self._hosts)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Placement):
            return dict(self._hosts) == dict(other._hosts)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(tuple(self._hosts.items()))

    def __repr__(self) -> str:
        return f"Placement({dict(self._hosts)!r})"

    def with_replica(self, f: int, zone: int) -> Placement:
        hosts = dict(self._hosts)
        cur = hosts[f]
        hosts[f] = Hosts(cur.home, (*cur.replicas, zone))
        return Placement(hosts, self.origins)

    def homes(self) -> dict[int, int]:
        return {f: h.home for f, h in self._hosts.items()}

    def replica_count(self) -> int:
        return sum(len(h.replicas) for h in self._hosts.values())


@dataclass(frozen=True)
class Thresholds:
    A: Cost = 5
    Y: Cost = 0

    def __post_init__(self) -> None:
        if self.A < 0 or self.Y < 0:
            raise NetworkError(f"thresholds must be >= 0, got A={self.A}, Y={self.Y}")


@dataclass(frozen=True)
class Tariff:
    """Money conversion constants.

    Monetized access cost is ``hits * cost * hit_cost * cost_scale``; hosting
    is charged per TB of every duplicated file set.
    """

    hit_cost: float = 0.01
    cost_scale: float = 1
    per_tb_cost: float = 20

    def __post_init__(self) -> None:
        for name in ("hit_cost", "cost_scale", "per_tb_cost"):
            if getattr(self, name) < 0:
                raise NetworkError(f"tariff {name} must be >= 0")


MIN_COST = "min-cost"
MAX_DEMAND = "max-demand"
RELOCATION_RULES = (MIN_COST, MAX_DEMAND)


@dataclass(frozen=True)
class Network:
    """A validated network: costs, demand and catalog that agree with each other."""

    costs: CostMatrix
    demand: DemandMatrix
    catalog: tuple[FileMeta, ...]
    relocation: str = MIN_COST

    @property
    def n(self) -> int:
        return self.costs.n

    @property
    def file_ids(self) -> tuple[int, ...]:
        return tuple(m.id for m in self.catalog)

    def meta(self, f: int) -> FileMeta:
        for m in self.catalog:
            if m.id == f:
                return m
        raise KeyError(f"unknown file {f}")


def validate_network(
    costs: CostMatrix | Sequence[Sequence[object]],
    demand: DemandMatrix | Mapping[int, Sequence[int]],
    catalog: Iterable[FileMeta],
    relocation: str = MIN_COST,
) -> Network:
    """Assemble a :class:`Network`, raising :class:`NetworkError` on the first violation.

    Already-validated pieces pass through unchanged, so validating a
    network's own parts again yields an equal network.
    """
    if not isinstance(costs, CostMatrix):
        costs = CostMatrix.from_rows(costs)
    if not isinstance(demand, DemandMatrix):
        demand = DemandMatrix(demand)
    catalog = tuple(catalog)
    n = costs.n
    if n < 1:
        raise NetworkError("network needs at least one zone")
    if relocation not in RELOCATION_RULES:
        raise NetworkError(f"unknown relocation rule {relocation!r}; expected one of {RELOCATION_RULES}")

    seen = set()
    for m in catalog:
        if isinstance(m.id, bool) or not isinstance(m.id, int) or m.id < 1:
            raise NetworkError(f"file id must be a positive integer, got {m.id!r}")
        if m.id in seen:
            raise NetworkError(f"duplicate file id {m.id}")
        seen.add(m.id)
        if not 1 <= m.home <= n:
            raise NetworkError(f"file {m.id}: home zone {m.home} outside 1..{n}")
        if m.id not in demand:
            raise NetworkError(f"file {m.id}: no demand row")
        if len(demand[m.id]) != n:
            raise NetworkError(f"file {m.id}: hits list has {len(demand[m.id])} entries, expected {n}")
    extra = set(demand) - seen
    if extra:
        raise NetworkError(f"demand rows for unknown files {sorted(extra)}")
    return Network(costs, demand, catalog, relocation)
