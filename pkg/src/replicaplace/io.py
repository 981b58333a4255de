"""Config ingestion and report emission (placement grids, CSV, JSONL traces)."""

from __future__ import annotations

import csv
import io
import json
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from .accounting import RunResult, SweepRow
from .duplication import DuplicationTrace
from .model import (
    MIN_COST,
    FileMeta,
    Hosts,
    Network,
    NetworkError,
    Placement,
    Tariff,
    Thresholds,
    exact,
    validate_network,
)
from .topology import costs_from_arcs


class ConfigError(NetworkError):
    """Malformed or incomplete configuration."""


@dataclass(frozen=True)
class Config:
    network: Network
    thresholds: Thresholds = Thresholds()
    tariff: Tariff = Tariff()
    zone_names: tuple[str, ...] = ()
    reference: Mapping = field(default_factory=dict)
    source: str = "<memory>"


CANONICAL = "canonical.json"


def canonical_config_path() -> Path:
    return Path(str(resources.files("replicaplace") / "data" / CANONICAL))


def load_config(path: str | Path | None = None) -> Config:
    """Read and validate a JSON network config; ``None`` loads the bundled canonical dataset."""
    path = Path(path) if path is not None else canonical_config_path()
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError(f"{path}: cannot read config: {exc.strerror}") from None
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"{path}:{exc.lineno}:{exc.colno}: {exc.msg}") from None
    try:
        return parse_config(raw, source=str(path))
    except ConfigError:
        raise
    except NetworkError as exc:
        raise ConfigError(f"{path}: {exc}") from None


def parse_config(raw: object, source: str = "<memory>") -> Config:
    if not isinstance(raw, dict):
        raise ConfigError(f"{source}: top level must be an object")

    zones = raw.get("zones")
    if zones is None:
        raise ConfigError(f"{source}: missing required 'zones'")
    if isinstance(zones, list):
        names = tuple(str(z) for z in zones)
        n = len(names)
    elif isinstance(zones, int) and not isinstance(zones, bool):
        names = ()
        n = zones
    else:
        raise ConfigError(f"{source}: 'zones' must be a count or a list of names")
    if n < 1:
        raise ConfigError(f"{source}: need at least one zone")

    has_matrix, has_arcs = "matrix" in raw, "arcs" in raw
    if has_matrix == has_arcs:
        raise ConfigError(f"{source}: exactly one of 'matrix' or 'arcs' is required")
    if has_matrix:
        matrix = raw["matrix"]
        if not isinstance(matrix, list) or len(matrix) != n or any(
            not isinstance(r, list) or len(r) != n for r in matrix
        ):
            raise ConfigError(f"{source}: 'matrix' must be {n}x{n}")
        costs = matrix
    else:
        arcs = raw["arcs"]
        if not isinstance(arcs, list) or any(not isinstance(a, list) or len(a) != 3 for a in arcs):
            raise ConfigError(f"{source}: 'arcs' must be a list of [a, b, weight]")
        costs = costs_from_arcs(n, arcs)

    files = raw.get("files")
    if not isinstance(files, list):
        raise ConfigError(f"{source}: missing required 'files' list")
    catalog, hits = [], {}
    for pos, entry in enumerate(files, start=1):
        if not isinstance(entry, dict):
            raise ConfigError(f"{source}: files[{pos}] must be an object")
        for key in ("id", "home", "hits"):
            if key not in entry:
                raise ConfigError(f"{source}: files[{pos}] missing '{key}'")
        fid = entry["id"]
        vec = entry["hits"]
        if not isinstance(vec, list) or len(vec) != n:
            got = len(vec) if isinstance(vec, list) else type(vec).__name__
            raise ConfigError(f"{source}: file {fid}: hits list has {got} entries, expected {n}")
        size = exact(entry.get("size_tb", 1), f"file {fid} size_tb")
        catalog.append(FileMeta(fid, entry["home"], size))
        hits[fid] = vec

    network = validate_network(costs, hits, catalog, raw.get("relocation", MIN_COST))

    th = raw.get("thresholds", {})
    thresholds = Thresholds(exact(th.get("A", 5), "threshold A"), exact(th.get("Y", 0), "threshold Y"))
    tariff = Tariff(**raw.get("tariff", {}))
    return Config(network, thresholds, tariff, names, raw.get("reference", {}), source)


# placement grids -----------------------------------------------------------

HOME, REPLICA, ABSENT = "o", "x", "."


def format_grid(placement: Placement, n: int) -> str:
    """Files as rows, zones as columns; 'o' home, 'x' replica, '.' absent."""
    width = max(len(f"Zone {n}"), 6)
    label = max([len(f"File {f}") for f in placement] + [4])
    lines = [" " * label + "".join(f"  {('Zone ' + str(z)):<{width}}" for z in range(1, n + 1)).rstrip()]
    for f, hosts in placement.items():
        cells = []
        for z in range(1, n + 1):
            mark = HOME if z == hosts.home else REPLICA if z in hosts.replicas else ABSENT
            cells.append(f"  {mark:<{width}}")
        lines.append(f"{('File ' + str(f)):<{label}}" + "".join(cells).rstrip())
    return "\n".join(lines) + "\n"


def parse_grid(text: str) -> Placement:
    """Inverse of :func:`format_grid`; replicas come back in zone order."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty grid")
    n = len(lines[0].split()) // 2
    hosts = {}
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != n + 2 or parts[0] != "File":
            raise ValueError(f"malformed grid row: {ln!r}")
        f = int(parts[1])
        marks = parts[2:]
        homes = [z for z, m in enumerate(marks, start=1) if m == HOME]
        if len(homes) != 1:
            raise ValueError(f"file {f}: expected exactly one home mark")
        replicas = tuple(z for z, m in enumerate(marks, start=1) if m == REPLICA)
        hosts[f] = Hosts(homes[0], replicas)
    return Placement(hosts)


# CSV ---------------------------------------------------------------------


def _csv(header: Sequence[str], rows: Iterable[Sequence]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _num(x) -> str:
    if isinstance(x, int):
        return str(x)
    f = float(x)
    return str(int(f)) if f.is_integer() else repr(f)


def _money(x: float) -> str:
    return f"{x:.2f}"


def relocation_csv(placement: Placement) -> str:
    rows = []
    for f, hosts in placement.items():
        origin = placement.origins.get(f, hosts.home)
        rows.append((f, origin, hosts.home, "yes" if origin != hosts.home else "no"))
    return _csv(("file", "upload_zone", "best_zone", "moved"), rows)


def sweep_csv(rows: Sequence[SweepRow]) -> str:
    return _csv(
        ("Y", "duplicates", "gain", "gain [m.u.]", "hosting_cost [m.u.]", "net_gain [m.u.]"),
        [
            (_num(r.Y), r.duplicates, _num(r.gain), _money(r.gain_money), _money(r.hosting), _money(r.net_gain))
            for r in rows
        ],
    )


def per_file_csv(rows: Sequence[SweepRow]) -> str:
    out = []
    for r in rows:
        res = r.result
        gains = res.gain.by_file()
        for f, hosts in res.after.items():
            before = sum(v for (ff, _), v in res.cells_before.items() if ff == f)
            out.append((_num(r.Y), f, len(hosts.replicas), _num(before), _num(before - gains[f]), _num(gains[f])))
    return _csv(("Y", "file", "replicas", "cost_before", "cost_after", "gain"), out)


def per_zone_csv(rows: Sequence[SweepRow]) -> str:
    out = []
    for r in rows:
        res = r.result
        gains = res.gain.by_zone()
        cells = res.cells_before
        for z, g in gains.items():
            before = sum(v for (_, zz), v in cells.items() if zz == z)
            out.append((_num(r.Y), z, _num(before), _num(before - g), _num(g)))
    return _csv(("Y", "zone", "cost_before", "cost_after", "gain"), out)


def cells_csv(result: RunResult) -> str:
    """Per (file, consumer zone) access cost before and after duplication."""
    before = result.cells_before
    out = []
    for (f, i), g in result.gain.cells.items():
        out.append((f, i, _num(before[f, i]), _num(before[f, i] - g), _num(g)))
    return _csv(("file", "zone", "cost_before", "cost_after", "gain"), out)


def replica_gains_csv(credits: Mapping[tuple[int, int], Mapping[int, object]]) -> str:
    out = []
    for (f, k), by_zone in sorted(credits.items()):
        for i, g in by_zone.items():
            out.append((f, k, i, _num(g)))
    return _csv(("file", "replica_zone", "consumer_zone", "gain"), out)


def trace_jsonl(trace: DuplicationTrace) -> str:
    return "".join(json.dumps(e.to_dict(), sort_keys=True) + "\n" for e in trace)


# reference comparison -------------------------------------------------------


def relocation_notes(placement: Placement, reference: Mapping) -> list[str]:
    ref = reference.get("relocations") or {}
    notes = []
    for key, zone in sorted(ref.items(), key=lambda kv: int(kv[0])):
        f = int(key)
        if f in placement and placement[f].home != zone:
            notes.append(
                f"divergence: file {f} relocated to zone {placement[f].home}, published zone {zone}"
            )
    return notes


def duplicate_count_notes(strategy: str, rows: Sequence[SweepRow], reference: Mapping) -> list[str]:
    ref = (reference.get("duplicates") or {}).get(strategy) or {}
    notes = []
    for r in rows:
        published = ref.get(_num(r.Y))
        if published is not None and published != r.duplicates:
            notes.append(
                f"divergence: {strategy} Y={_num(r.Y)}: derived {r.duplicates} duplicates, published {published}"
            )
    return notes
