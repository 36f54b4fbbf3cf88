from __future__ import annotations

import math

import pytest
from hypothesis import given, strategies as st

from skyway_delivery import BatteryState, DroneConfig, consumption_rate, drain, leg_energy
from skyway_delivery.errors import BatteryDepleted, NegativeDistance, NegativePayload

masses = st.floats(min_value=0.0, max_value=20.0, allow_nan=False)


def test_rate_grows_linearly_with_payload():
    drone = DroneConfig()
    assert consumption_rate(drone, 0.0) == pytest.approx(2.0)
    assert consumption_rate(drone, 1.2) == pytest.approx(3.2)
    assert consumption_rate(drone, 6.0) == pytest.approx(8.0)


def test_rate_rejects_negative_payload():
    with pytest.raises(NegativePayload):
        consumption_rate(DroneConfig(), -0.001)


def test_leg_energy_example():
    assert leg_energy(DroneConfig(), 1.2, 50.0) == pytest.approx(160.0)


def test_leg_energy_zero_distance_is_free():
    assert leg_energy(DroneConfig(), 5.0, 0.0) == 0.0


def test_leg_energy_rejects_negative_distance():
    with pytest.raises(NegativeDistance):
        leg_energy(DroneConfig(), 1.0, -1.0)


def test_drain_subtracts():
    battery = drain(BatteryState(1000.0, 1000.0), 160.0)
    assert battery.remaining == pytest.approx(840.0)
    assert battery.capacity == 1000.0


def test_drain_to_exactly_zero_is_legal():
    battery = drain(BatteryState(100.0, 100.0), 100.0)
    assert battery.remaining == 0.0


def test_drain_overdraw_raises():
    with pytest.raises(BatteryDepleted):
        drain(BatteryState(100.0, 100.0), 100.001)


def test_drain_rejects_negative_energy():
    with pytest.raises(ValueError):
        drain(BatteryState(100.0, 100.0), -1.0)


def test_battery_state_bounds():
    with pytest.raises(ValueError):
        BatteryState(100.0, 101.0)
    with pytest.raises(ValueError):
        BatteryState(100.0, -1.0)
    with pytest.raises(ValueError):
        BatteryState(-5.0, 0.0)


@given(masses, masses)
def test_rate_is_affine_in_payload(m1, m2):
    drone = DroneConfig()
    combined = consumption_rate(drone, m1) + consumption_rate(drone, m2)
    assert math.isclose(
        combined - consumption_rate(drone, 0.0),
        consumption_rate(drone, m1 + m2),
        rel_tol=1e-9, abs_tol=1e-9)


@given(masses, masses, st.floats(min_value=0.0, max_value=1e4, allow_nan=False))
def test_energy_difference_scales_with_mass_gap(m1, m2, distance):
    drone = DroneConfig()
    gap = leg_energy(drone, m2, distance) - leg_energy(drone, m1, distance)
    assert math.isclose(
        gap, drone.payload_rate * distance * (m2 - m1), rel_tol=1e-9, abs_tol=1e-6)
