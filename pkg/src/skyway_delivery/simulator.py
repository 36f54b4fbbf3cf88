"""Kinematic mission execution: take-off, cruise, descend-release, return.

Motion is sequential (vertical then horizontal) at piecewise-constant speed
with instantaneous turns. Energy is charged per metre of 3D travel; hovering
during the release dwell is free.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .energy import BatteryState, EnergyBreakdown, LegEnergy, consumption_rate, drain, leg_energy
from .errors import BatteryDepleted, InconsistentAssignment, InvalidLevel
from .graph import Path, SkywayNetwork
from .planner import DroneConfig, HangingAssignment, MissionPlan, Package

DEFAULT_RELEASE_DWELL = 2.0   # seconds of rebound pause before a package drops free
DEFAULT_TELEMETRY_STEP = 0.1  # seconds between interval samples
_BOUNDARY_EPS = 1e-9          # samples this close to a phase edge are dropped


@dataclass(frozen=True)
class StringRig:
    """Hanging string taped at fixed levels; level 1 hangs lowest.

    ``levels[i]`` is how far level i+1 hangs below the drone, so the tuple is
    strictly decreasing and positive.
    """

    levels: tuple[float, ...] = (3.0, 2.0, 1.0)
    clearance: float = 1.0

    def __post_init__(self):
        object.__setattr__(self, "levels", tuple(self.levels))
        for hang in self.levels:
            if not hang > 0:
                raise ValueError("every hang length must be > 0")
        for below, above in zip(self.levels, self.levels[1:]):
            if not below > above:
                raise ValueError("hang lengths must strictly decrease from level 1 up")
        if not self.clearance > 0:
            raise ValueError("clearance must be > 0")

    @property
    def level_count(self) -> int:
        return len(self.levels)

    def hang(self, level: int) -> float:
        if not 1 <= level <= len(self.levels):
            raise InvalidLevel(f"level {level} outside 1..{len(self.levels)}")
        return self.levels[level - 1]


@dataclass
class DroneState:
    x: float
    y: float
    z: float
    loaded: set[str]
    battery: BatteryState
    clock: float = 0.0


@dataclass(frozen=True)
class TelemetryRecord:
    t: float
    x: float
    y: float
    z: float
    payload_mass: float
    battery_remaining: float
    event: str = ""


TelemetryLog = list[TelemetryRecord]


@dataclass(frozen=True)
class MissionReport:
    completed: bool
    releases: tuple[tuple[str, str, float], ...]
    total_distance_3d: float
    energy: EnergyBreakdown
    end_position: tuple[float, float, float]
    abort_reason: str | None = None


def cruise_altitude(network: SkywayNetwork, leg_path: Path, rig: StringRig,
                    loaded_levels: set[int]) -> float:
    """Altitude that keeps the lowest hanging package clear of every rooftop
    under the leg, plus the rig's safety clearance."""
    highest = max(network.node(nid).rooftop_height for nid in leg_path.nodes)
    hang = rig.hang(min(loaded_levels)) if loaded_levels else 0.0
    return highest + hang + rig.clearance


def release_altitude(node, rig: StringRig, level: int) -> float:
    """Altitude at which the package hanging at ``level`` touches the rooftop."""
    return node.rooftop_height + rig.hang(level)


class _Flight:
    """Mutable flight bookkeeping: motion, sampling, battery, telemetry."""

    def __init__(self, state: DroneState, drone: DroneConfig, payload_mass: float,
                 telemetry_step: float):
        self.state = state
        self.drone = drone
        self.payload_mass = payload_mass
        self.step = telemetry_step
        self.records: TelemetryLog = []
        self.total_distance = 0.0
        self.leg_distance = 0.0
        self._samples = 0

    def emit(self, event: str) -> None:
        s = self.state
        self.records.append(TelemetryRecord(
            s.clock, s.x, s.y, s.z, self.payload_mass, s.battery.remaining, event))

    def travel(self, x: float, y: float, z: float, speed: float) -> bool:
        """Fly straight to (x, y, z); returns False when the battery dies en route."""
        s = self.state
        dist = math.dist((s.x, s.y, s.z), (x, y, z))
        if dist == 0.0:
            return True
        rate = consumption_rate(self.drone, self.payload_mass)
        try:
            after = drain(s.battery, leg_energy(self.drone, self.payload_mass, dist))
        except BatteryDepleted:
            reachable = s.battery.remaining / (rate * dist)
            self._advance(x, y, z, dist, speed, rate, reachable)
            s.battery = BatteryState(s.battery.capacity, 0.0)
            self.emit("ABORT")
            return False
        self._advance(x, y, z, dist, speed, rate, 1.0)
        s.x, s.y, s.z = x, y, z  # land exactly on the target point
        s.battery = after
        return True

    def _advance(self, x: float, y: float, z: float, dist: float, speed: float,
                 rate: float, fraction: float) -> None:
        s = self.state
        x0, y0, z0, t0 = s.x, s.y, s.z, s.clock
        battery0 = s.battery.remaining
        t1 = t0 + dist * fraction / speed
        while True:
            ts = (self._samples + 1) * self.step
            if ts >= t1 - _BOUNDARY_EPS:
                break
            self._samples += 1
            if ts <= t0 + _BOUNDARY_EPS:
                continue
            f = (ts - t0) * speed / dist
            self.records.append(TelemetryRecord(
                ts,
                x0 + (x - x0) * f,
                y0 + (y - y0) * f,
                z0 + (z - z0) * f,
                self.payload_mass,
                battery0 - rate * speed * (ts - t0),
                "",
            ))
        s.x = x0 + (x - x0) * fraction
        s.y = y0 + (y - y0) * fraction
        s.z = z0 + (z - z0) * fraction
        s.clock = t1
        moved = dist * fraction
        self.total_distance += moved
        self.leg_distance += moved

    def hold(self, duration: float) -> None:
        """Hover in place; time passes, nothing is spent."""
        s = self.state
        t1 = s.clock + duration
        while True:
            ts = (self._samples + 1) * self.step
            if ts >= t1 - _BOUNDARY_EPS:
                break
            self._samples += 1
            if ts <= s.clock + _BOUNDARY_EPS:
                continue
            self.records.append(TelemetryRecord(
                ts, s.x, s.y, s.z, self.payload_mass, s.battery.remaining, ""))
        s.clock = t1

    def release(self, package_id: str, remaining_payload: float) -> None:
        self.state.loaded.discard(package_id)
        self.payload_mass = remaining_payload
        self.emit(f"RELEASE({package_id})")


def _check_consistency(order: tuple[str, ...], assignment: HangingAssignment,
                       mass_of: dict[str, float], rig: StringRig) -> None:
    if set(assignment.level_of) != set(order) or assignment.level_count != len(order):
        raise InconsistentAssignment(
            "assignment does not cover exactly the packages the plan releases")
    for position, package_id in enumerate(order, start=1):
        if assignment.level_of[package_id] != position:
            raise InconsistentAssignment(
                f"package {package_id!r} is release #{position} but hangs at "
                f"level {assignment.level_of[package_id]}")
        if package_id not in mass_of:
            raise InconsistentAssignment(f"released package {package_id!r} has no mass entry")
    if assignment.level_count > rig.level_count:
        raise InvalidLevel(
            f"{assignment.level_count} packages exceed the rig's {rig.level_count} levels")


def simulate_mission(network: SkywayNetwork, plan: MissionPlan,
                     assignment: HangingAssignment, drone: DroneConfig,
                     rig: StringRig, packages: Sequence[Package],
                     *, release_dwell: float = DEFAULT_RELEASE_DWELL,
                     telemetry_step: float = DEFAULT_TELEMETRY_STEP
                     ) -> tuple[TelemetryLog, MissionReport]:
    """Fly ``plan`` and return (telemetry, report).

    Per leg: adjust to the leg's cruise altitude, traverse its path, then for
    delivery legs descend until the hanging package touches the rooftop, pause
    for the release dwell, and let it go. The final leg lands back at the
    source. A dead battery cuts the flight short with an ABORT record.
    """
    if not telemetry_step > 0:
        raise ValueError("telemetry_step must be > 0")
    if release_dwell < 0:
        raise ValueError("release_dwell must be >= 0")
    mass_of = {p.id: p.mass for p in packages}
    order = plan.release_order
    _check_consistency(order, assignment, mass_of, rig)

    source = network.node(plan.source)
    state = DroneState(
        x=source.x, y=source.y, z=source.rooftop_height,
        loaded=set(order),
        battery=BatteryState(drone.battery_capacity, drone.battery_capacity),
    )
    # Payload after k releases, built as suffix sums so the sequence is
    # non-negative throughout and ends at exactly 0.0.
    payload_after = [0.0] * (len(order) + 1)
    for k in range(len(order) - 1, -1, -1):
        payload_after[k] = mass_of[order[k]] + payload_after[k + 1]
    flight = _Flight(state, drone, payload_after[0], telemetry_step)
    flight.emit("TAKEOFF")

    loaded_levels = {assignment.level_of[pid] for pid in order}
    releases: list[tuple[str, str, float]] = []
    leg_energies: list[LegEnergy] = []
    abort_reason: str | None = None

    for leg_index, leg in enumerate(plan.legs):
        leg_payload = flight.payload_mass
        leg_rate = consumption_rate(drone, leg_payload)
        flight.leg_distance = 0.0

        if leg.release is None and leg.path.total_length == 0.0:
            # Package-free mission: the drone never leaves the rooftop.
            leg_energies.append(LegEnergy(0.0, leg_payload, leg_rate, 0.0))
            flight.emit("LAND")
            break
        if leg.release is None and order:
            flight.emit("RETURN_LEG")

        altitude = cruise_altitude(network, leg.path, rig, loaded_levels)
        ok = True
        dz = altitude - state.z
        if dz != 0.0:
            flight.emit("ASCEND" if dz > 0 else "DESCEND")
            ok = flight.travel(state.x, state.y, altitude, drone.vertical_speed)
        if ok:
            for next_id in leg.path.nodes[1:]:
                target = network.node(next_id)
                flight.emit("CRUISE")
                if not flight.travel(target.x, target.y, altitude, drone.cruise_speed):
                    ok = False
                    break
        if ok:
            end_node = network.node(leg.path.nodes[-1])
            flight.emit("ARRIVE")
            flight.emit("DESCEND")
            if leg.release is not None:
                level = assignment.level_of[leg.release]
                ok = flight.travel(state.x, state.y,
                                   release_altitude(end_node, rig, level),
                                   drone.vertical_speed)
                if ok:
                    flight.hold(release_dwell)
                    flight.release(leg.release, payload_after[len(releases) + 1])
                    releases.append((leg.release, end_node.id, state.clock))
                    loaded_levels.discard(level)
            else:
                ok = flight.travel(state.x, state.y, end_node.rooftop_height,
                                   drone.vertical_speed)
                if ok:
                    flight.emit("LAND")

        leg_energies.append(LegEnergy(
            flight.leg_distance, leg_payload, leg_rate,
            leg_rate * flight.leg_distance))
        if not ok:
            abort_reason = f"battery depleted on leg {leg_index + 1}"
            break

    breakdown = EnergyBreakdown(tuple(leg_energies),
                                sum(rec.energy for rec in leg_energies))
    report = MissionReport(
        completed=abort_reason is None,
        releases=tuple(releases),
        total_distance_3d=flight.total_distance,
        energy=breakdown,
        end_position=(state.x, state.y, state.z),
        abort_reason=abort_reason,
    )
    return flight.records, report
