"""
fixtures and setup for testing the monitors subpackage

"""

import pytest

from plancheck.model import Plan


@pytest.fixture
def fairness_cfg(path_taxi_data):
    from plancheck.monitors import load_fairness_config

    return load_fairness_config(path_taxi_data / "fairness.json")


@pytest.fixture
def trip(action):
    """A passenger trip driven by the given taxi"""

    def make(taxi):
        return action("drive_passenger", taxi, "person1", "loc1", "loc2")

    return make


@pytest.fixture
def skewed_plan(trip):
    """
    30 trips split 11/10/9 between male/female/other drivers, then one
    more trip by the male driver
    """
    trips = ["taxi1"] * 11 + ["taxi2"] * 10 + ["taxi3"] * 9 + ["taxi1"]
    return Plan(tuple(trip(t) for t in trips))
