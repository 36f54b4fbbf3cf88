"""Scenario documents: JSON parsing, serialization, seeded generation.

A scenario bundles everything one mission needs: the network, the source
node, the drone, the hanging rig and the packages. Parsing collects every
violation it can find and reports them together, each with a path-like
locator such as ``packages[2].mass``.
"""
from __future__ import annotations

import csv
import io
import json
import math
import random
from dataclasses import dataclass

from .errors import InvalidParams, ScenarioSyntaxError, SkywayError, ValidationError
from .graph import SkywayNetwork, build_network
from .planner import DroneConfig, Package
from .simulator import MissionReport, StringRig, TelemetryLog

_TOP_KEYS = {"label", "source", "nodes", "segments", "drone", "rig", "packages"}
_NODE_KEYS = {"id", "x", "y", "rooftop_height"}
_SEGMENT_KEYS = {"a", "b"}
_DRONE_FIELDS = ("frame_mass", "max_payload", "battery_capacity", "cruise_speed",
                 "vertical_speed", "base_rate", "payload_rate")
_DRONE_KEYS = set(_DRONE_FIELDS)
_RIG_KEYS = {"levels", "clearance"}
_PACKAGE_KEYS = {"id", "mass", "destination"}

_MISSING = object()


@dataclass(frozen=True)
class Scenario:
    network: SkywayNetwork
    source: str
    drone: DroneConfig
    rig: StringRig
    packages: tuple[Package, ...]
    label: str | None = None


def _take_number(obj: dict, key: str, locator: str, problems: list[str],
                 default=_MISSING) -> float | None:
    if key not in obj:
        if default is _MISSING:
            problems.append(f"{locator}.{key}: missing")
            return None
        return default
    value = obj[key]
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        problems.append(f"{locator}.{key}: expected a number, got {type(value).__name__}")
        return None
    value = float(value)
    if not math.isfinite(value):
        problems.append(f"{locator}.{key}: must be finite")
        return None
    return value


def _take_string(obj: dict, key: str, locator: str, problems: list[str]) -> str | None:
    if key not in obj:
        problems.append(f"{locator}.{key}: missing")
        return None
    value = obj[key]
    if not isinstance(value, str) or not value:
        problems.append(f"{locator}.{key}: expected a non-empty string")
        return None
    return value


def _reject_unknown(obj: dict, allowed: set[str], locator: str, problems: list[str]) -> None:
    for key in obj:
        if key not in allowed:
            problems.append(f"{locator}.{key}: unknown key")


def parse_scenario(text: str) -> Scenario:
    """Parse and fully validate a scenario JSON document.

    Raises ScenarioSyntaxError for malformed JSON and ValidationError (with
    one locator-bearing entry per problem) for anything schema-level.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ScenarioSyntaxError(f"invalid JSON: {exc}") from exc

    problems: list[str] = []
    if not isinstance(doc, dict):
        raise ValidationError(["document: expected a JSON object at the top level"])
    _reject_unknown(doc, _TOP_KEYS, "document", problems)

    label = doc.get("label")
    if label is not None and not isinstance(label, str):
        problems.append("label: expected a string")
        label = None

    source = _take_string(doc, "source", "document", problems)

    # -- nodes ---------------------------------------------------------------
    node_specs: list[tuple[str, float, float, float]] = []
    node_ids: set[str] = set()
    raw_nodes = doc.get("nodes")
    if not isinstance(raw_nodes, list) or not raw_nodes:
        problems.append("nodes: expected a non-empty list")
        raw_nodes = []
    for i, raw in enumerate(raw_nodes):
        locator = f"nodes[{i}]"
        if not isinstance(raw, dict):
            problems.append(f"{locator}: expected an object")
            continue
        _reject_unknown(raw, _NODE_KEYS, locator, problems)
        node_id = _take_string(raw, "id", locator, problems)
        x = _take_number(raw, "x", locator, problems)
        y = _take_number(raw, "y", locator, problems)
        height = _take_number(raw, "rooftop_height", locator, problems, default=0.0)
        if height is not None and height < 0:
            problems.append(f"{locator}.rooftop_height: must be >= 0 (got {height})")
            height = None
        if node_id is not None:
            if node_id in node_ids:
                problems.append(f"{locator}.id: duplicate node id {node_id!r}")
            node_ids.add(node_id)
        if None not in (node_id, x, y, height):
            node_specs.append((node_id, x, y, height))

    # -- segments ------------------------------------------------------------
    segment_specs: list[tuple[str, str]] = []
    seen_pairs: set[tuple[str, str]] = set()
    raw_segments = doc.get("segments", [])
    if not isinstance(raw_segments, list):
        problems.append("segments: expected a list")
        raw_segments = []
    for i, raw in enumerate(raw_segments):
        locator = f"segments[{i}]"
        if not isinstance(raw, dict):
            problems.append(f"{locator}: expected an object")
            continue
        _reject_unknown(raw, _SEGMENT_KEYS, locator, problems)
        a = _take_string(raw, "a", locator, problems)
        b = _take_string(raw, "b", locator, problems)
        if a is None or b is None:
            continue
        for end_key, endpoint in (("a", a), ("b", b)):
            if endpoint not in node_ids:
                problems.append(f"{locator}.{end_key}: unknown node {endpoint!r}")
        if a == b:
            problems.append(f"{locator}: self-loop at {a!r}")
            continue
        pair = (a, b) if a < b else (b, a)
        if pair in seen_pairs:
            problems.append(f"{locator}: duplicate segment {pair[0]!r}-{pair[1]!r}")
            continue
        seen_pairs.add(pair)
        if a in node_ids and b in node_ids:
            segment_specs.append((a, b))

    # -- drone ---------------------------------------------------------------
    raw_drone = doc.get("drone", {})
    if not isinstance(raw_drone, dict):
        problems.append("drone: expected an object")
        raw_drone = {}
    _reject_unknown(raw_drone, _DRONE_KEYS, "drone", problems)
    defaults = DroneConfig()
    drone_fields: dict[str, float] = {}
    for name in _DRONE_FIELDS:
        value = _take_number(raw_drone, name, "drone", problems,
                             default=getattr(defaults, name))
        if value is None:
            continue
        minimum_ok = value >= 0 if name == "frame_mass" else value > 0
        if not minimum_ok:
            bound = ">= 0" if name == "frame_mass" else "> 0"
            problems.append(f"drone.{name}: must be {bound} (got {value})")
            continue
        drone_fields[name] = value
    drone = DroneConfig(**drone_fields) if len(drone_fields) == len(_DRONE_FIELDS) else None

    # -- rig -----------------------------------------------------------------
    raw_rig = doc.get("rig", {})
    if not isinstance(raw_rig, dict):
        problems.append("rig: expected an object")
        raw_rig = {}
    _reject_unknown(raw_rig, _RIG_KEYS, "rig", problems)
    default_rig = StringRig()
    clearance = _take_number(raw_rig, "clearance", "rig", problems,
                             default=default_rig.clearance)
    if clearance is not None and not clearance > 0:
        problems.append(f"rig.clearance: must be > 0 (got {clearance})")
        clearance = None
    levels: list[float] | None
    if "levels" in raw_rig:
        raw_levels = raw_rig["levels"]
        levels = []
        if not isinstance(raw_levels, list):
            problems.append("rig.levels: expected a list of hang lengths")
            levels = None
        else:
            for i, hang in enumerate(raw_levels):
                if isinstance(hang, bool) or not isinstance(hang, (int, float)) \
                        or not math.isfinite(float(hang)) or not float(hang) > 0:
                    problems.append(f"rig.levels[{i}]: expected a positive number")
                    levels = None
                    break
                levels.append(float(hang))
        if levels is not None:
            for i in range(1, len(levels)):
                if not levels[i - 1] > levels[i]:
                    problems.append(
                        f"rig.levels[{i}]: hang lengths must strictly decrease "
                        f"from level 1 up")
                    levels = None
                    break
    else:
        levels = list(default_rig.levels)
    rig = StringRig(tuple(levels), clearance) \
        if levels is not None and clearance is not None else None

    # -- packages ------------------------------------------------------------
    packages: list[Package] = []
    package_ids: set[str] = set()
    raw_packages = doc.get("packages", [])
    if not isinstance(raw_packages, list):
        problems.append("packages: expected a list")
        raw_packages = []
    for i, raw in enumerate(raw_packages):
        locator = f"packages[{i}]"
        if not isinstance(raw, dict):
            problems.append(f"{locator}: expected an object")
            continue
        _reject_unknown(raw, _PACKAGE_KEYS, locator, problems)
        package_id = _take_string(raw, "id", locator, problems)
        mass = _take_number(raw, "mass", locator, problems)
        destination = _take_string(raw, "destination", locator, problems)
        if mass is not None and not mass > 0:
            problems.append(f"{locator}.mass: must be > 0 (got {mass})")
            mass = None
        if package_id is not None:
            if package_id in package_ids:
                problems.append(f"{locator}.id: duplicate package id {package_id!r}")
            package_ids.add(package_id)
        if destination is not None:
            if destination not in node_ids:
                problems.append(f"{locator}.destination: unknown node {destination!r}")
            elif source is not None and destination == source:
                problems.append(f"{locator}.destination: must differ from the source")
        if None not in (package_id, mass, destination):
            packages.append(Package(package_id, mass, destination))

    if source is not None and node_ids and source not in node_ids:
        problems.append(f"source: unknown node {source!r}")
    if rig is not None and len(raw_packages) > rig.level_count:
        problems.append(
            f"packages: {len(raw_packages)} packages exceed the rig's "
            f"{rig.level_count} hanging levels")

    network = None
    if not problems and node_specs:
        try:
            network = build_network(node_specs, segment_specs)
        except SkywayError as exc:
            # Whole-network faults without a single field to point at, e.g.
            # a disconnected graph or coincident node positions.
            problems.append(f"network: {exc}")

    if problems:
        raise ValidationError(problems)
    assert network is not None and source is not None
    assert drone is not None and rig is not None
    return Scenario(network=network, source=source, drone=drone, rig=rig,
                    packages=tuple(packages), label=label)


def serialize_scenario(scenario: Scenario) -> str:
    """Render a scenario back to its JSON document form (stable ordering)."""
    doc: dict = {}
    if scenario.label is not None:
        doc["label"] = scenario.label
    doc["source"] = scenario.source
    doc["nodes"] = [
        {"id": node.id, "x": node.x, "y": node.y, "rooftop_height": node.rooftop_height}
        for node in sorted(scenario.network.nodes.values(), key=lambda n: n.id)
    ]
    doc["segments"] = [{"a": seg.a, "b": seg.b} for seg in scenario.network.segments]
    doc["drone"] = {
        "frame_mass": scenario.drone.frame_mass,
        "max_payload": scenario.drone.max_payload,
        "battery_capacity": scenario.drone.battery_capacity,
        "cruise_speed": scenario.drone.cruise_speed,
        "vertical_speed": scenario.drone.vertical_speed,
        "base_rate": scenario.drone.base_rate,
        "payload_rate": scenario.drone.payload_rate,
    }
    doc["rig"] = {"levels": list(scenario.rig.levels), "clearance": scenario.rig.clearance}
    doc["packages"] = [
        {"id": p.id, "mass": p.mass, "destination": p.destination}
        for p in scenario.packages
    ]
    return json.dumps(doc, indent=2) + "\n"


def generate_scenario(node_count: int, package_count: int, seed: int,
                      area: tuple[float, float] = (500.0, 500.0)) -> Scenario:
    """Build a random connected scenario; the same seed gives the same bytes.

    Nodes land on distinct rounded positions inside ``area`` with rooftops in
    [5, 60] m; a random spanning tree keeps the network connected and a few
    extra segments add route choices. Destinations are distinct non-source
    nodes and package masses stay inside the drone's single-item band.
    """
    if node_count < 2:
        raise InvalidParams(f"node_count must be >= 2, got {node_count}")
    if package_count < 0:
        raise InvalidParams(f"package_count must be >= 0, got {package_count}")
    if package_count > node_count - 1:
        raise InvalidParams(
            f"package_count {package_count} needs {package_count} distinct "
            f"destinations but only {node_count - 1} non-source nodes exist")
    width, height = area
    if not width > 0 or not height > 0:
        raise InvalidParams(f"area must be positive, got {area}")

    rng = random.Random(seed)
    pad = len(str(node_count))
    ids = [f"n{i + 1:0{pad}d}" for i in range(node_count)]

    used_positions: set[tuple[float, float]] = set()
    node_specs: list[tuple[str, float, float, float]] = []
    for node_id in ids:
        while True:
            position = (round(rng.uniform(0.0, width), 2),
                        round(rng.uniform(0.0, height), 2))
            if position not in used_positions:
                break
        used_positions.add(position)
        rooftop = round(rng.uniform(5.0, 60.0), 2)
        node_specs.append((node_id, position[0], position[1], rooftop))

    pairs: set[tuple[str, str]] = set()
    segment_specs: list[tuple[str, str]] = []
    for i in range(1, node_count):
        j = rng.randrange(i)
        pair = (ids[j], ids[i]) if ids[j] < ids[i] else (ids[i], ids[j])
        pairs.add(pair)
        segment_specs.append(pair)
    for _ in range(rng.randint(0, node_count)):
        i, j = rng.sample(range(node_count), 2)
        pair = (ids[i], ids[j]) if ids[i] < ids[j] else (ids[j], ids[i])
        if pair in pairs:
            continue
        pairs.add(pair)
        segment_specs.append(pair)

    destinations = rng.sample(ids[1:], package_count)
    packages = tuple(
        Package(f"p{i + 1}", round(rng.uniform(0.11, 2.27), 3), destination)
        for i, destination in enumerate(destinations)
    )

    level_count = max(3, package_count)
    levels = tuple(1.0 + 0.5 * (level_count - i) for i in range(1, level_count + 1))
    rig = StringRig(levels, 1.0)

    network = build_network(node_specs, segment_specs)
    label = f"gen-n{node_count}-p{package_count}-s{seed}"
    return Scenario(network=network, source=ids[0], drone=DroneConfig(),
                    rig=rig, packages=packages, label=label)


def export_telemetry(log: TelemetryLog) -> str:
    """Render telemetry as CSV; floats carry six decimals, samples a blank event."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["t", "x", "y", "z", "payload_mass", "battery_remaining", "event"])
    for rec in log:
        writer.writerow([
            f"{rec.t:.6f}", f"{rec.x:.6f}", f"{rec.y:.6f}", f"{rec.z:.6f}",
            f"{rec.payload_mass:.6f}", f"{rec.battery_remaining:.6f}", rec.event,
        ])
    return buffer.getvalue()


def serialize_report(report: MissionReport) -> str:
    """Render a mission report as a stable JSON document."""
    doc = {
        "completed": report.completed,
        "releases": [
            {"package": package_id, "node": node_id, "t": t}
            for package_id, node_id, t in report.releases
        ],
        "total_distance_3d": report.total_distance_3d,
        "energy": {
            "legs": [
                {
                    "distance_3d": leg.distance_3d,
                    "payload_mass": leg.payload_mass,
                    "rate": leg.rate,
                    "energy": leg.energy,
                }
                for leg in report.energy.legs
            ],
            "total": report.energy.total,
        },
        "end_position": list(report.end_position),
        "abort_reason": report.abort_reason,
    }
    return json.dumps(doc, indent=2) + "\n"
