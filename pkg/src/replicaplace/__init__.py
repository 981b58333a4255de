"""Replica placement for zoned video-sharing networks.

Relocate each file to its best home zone, then duplicate popular files under
an access-cost cap ``A`` and a demand threshold ``Y`` with either the caching
or the fetching strategy, and account the resulting gain and hosting cost.
"""

from .accounting import (
    access_gain,
    break_even,
    effective_cost,
    hosting_cost,
    net_gain,
    run,
    sweep,
    total_access_cost,
)
from .duplication import DuplicationTrace, Strategy, duplicate, duplicate_caching, duplicate_fetching, retrieve, triggers
from .io import load_config
from .model import (
    CostMatrix,
    DemandMatrix,
    FileMeta,
    Hosts,
    InvariantError,
    Network,
    NetworkError,
    Placement,
    Tariff,
    Thresholds,
    validate_network,
)
from .placement import best_location, location_cost, relocate_all
from .topology import Arc, canonical_matrix, costs_from_arcs

__all__ = [
    "Arc",
    "CostMatrix",
    "DemandMatrix",
    "DuplicationTrace",
    "FileMeta",
    "Hosts",
    "InvariantError",
    "Network",
    "NetworkError",
    "Placement",
    "Strategy",
    "Tariff",
    "Thresholds",
    "access_gain",
    "best_location",
    "break_even",
    "canonical_matrix",
    "costs_from_arcs",
    "duplicate",
    "duplicate_caching",
    "duplicate_fetching",
    "effective_cost",
    "hosting_cost",
    "load_config",
    "location_cost",
    "net_gain",
    "relocate_all",
    "retrieve",
    "run",
    "sweep",
    "total_access_cost",
    "triggers",
    "validate_network",
]
