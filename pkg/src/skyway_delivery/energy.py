"""Payload-linear energy model: joules are charged per metre of 3D travel."""
from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING

from .errors import BatteryDepleted, NegativeDistance, NegativePayload

if TYPE_CHECKING:
    from .planner import DroneConfig


@dataclass(frozen=True)
class BatteryState:
    """Remaining charge in joules; never outside [0, capacity]."""

    capacity: float
    remaining: float

    def __post_init__(self):
        if self.capacity < 0:
            raise ValueError("battery capacity must be >= 0")
        if not 0 <= self.remaining <= self.capacity:
            raise ValueError(
                f"remaining charge {self.remaining} outside [0, {self.capacity}]"
            )


@dataclass(frozen=True)
class LegEnergy:
    """Energy spent on one plan leg flown at a constant payload."""

    distance_3d: float
    payload_mass: float
    rate: float
    energy: float


@dataclass(frozen=True)
class EnergyBreakdown:
    legs: tuple[LegEnergy, ...]
    total: float


def consumption_rate(drone: "DroneConfig", payload_mass: float) -> float:
    """Joules per metre while carrying ``payload_mass`` kg of packages.

    The airframe's own mass is a constant load and is already folded into
    the drone's base rate.
    """
    if payload_mass < 0:
        raise NegativePayload(f"payload mass must be >= 0, got {payload_mass}")
    return drone.base_rate + drone.payload_rate * payload_mass


def leg_energy(drone: "DroneConfig", payload_mass: float, distance_3d: float) -> float:
    """Energy for flying ``distance_3d`` metres at a constant payload."""
    if distance_3d < 0:
        raise NegativeDistance(f"distance must be >= 0, got {distance_3d}")
    return consumption_rate(drone, payload_mass) * distance_3d


def drain(battery: BatteryState, energy: float) -> BatteryState:
    """Subtract ``energy`` joules; exact exhaustion is legal, overdraw is not."""
    if energy < 0:
        raise ValueError(f"drained energy must be >= 0, got {energy}")
    if energy > battery.remaining:
        raise BatteryDepleted(
            f"need {energy} J but only {battery.remaining} J remaining"
        )
    return BatteryState(battery.capacity, battery.remaining - energy)
