"""
tests for the fairness module

"""

########################################################################
#                                                                      #
# This test was written by the PlanCheck developers in 2024.           #
#                                                                      #
# Copyright 2024 PlanCheck developers                                  #
#                                                                      #
# Licensed under the Apache License, Version 2.0 (the "License");      #
# you may not use this file except in compliance with the License.     #
# You may obtain a copy of the License at                              #
#                                                                      #
#    http://www.apache.org/licenses/LICENSE-2.0                        #
#                                                                      #
# Unless required by applicable law or agreed to in writing, software  #
# distributed under the License is distributed on an "AS IS" BASIS,    #
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or      #
# implied.                                                             #
# See the License for the specific language governing permissions and  #
# limitations under the License.                                       #
#                                                                      #
########################################################################

import dataclasses
import itertools
import json

import pytest

from plancheck.exceptions import ConfigError, GenderBiasError
from plancheck.model import ObjectRef, Plan, Problem
from plancheck.monitors import (
    FairnessRefutation,
    Gender,
    Justification,
    TripCount,
    action_preserves_fairness,
    canonical_handler,
    execute_monitored,
    fairness_monitor,
    gender_assignment_pct,
    gender_driver_count,
    gender_pct,
    is_fair,
    load_fairness_config,
    lower_bound_pct,
    total_drivers,
    total_trips_taken,
    trip_agnostic,
    under_minimum_trip_threshold,
    update_trip_count,
)


def _oracle(counts, margin, factor=10, drivers=3):
    """Decision for one driver per gender, written out with plain ints"""
    total = counts[0] + counts[1] + counts[2]
    if total < drivers * factor:
        return "underThreshold"
    share = 100 // drivers
    bound = max(share - (share // margin if margin else 0), 0)
    for name, count in zip(("male", "female", "other"), counts):
        assigned = count * 100 // total
        if assigned < bound:
            return (name, assigned, bound)
    return "fairForAll"


class TestTripCount(object):
    def test_increment(self):
        tc = TripCount().increment(Gender.FEMALE).increment(Gender.FEMALE)
        assert tc == TripCount(female=2)
        assert tc[Gender.FEMALE] == 2
        assert total_trips_taken(tc) == 2
        assert tc.as_dict() == {"male": 0, "female": 2, "other": 0}

    def test_natural(self):
        with pytest.raises(ValueError):
            TripCount(male=-1)


class TestConfig(object):
    def test_load(self, fairness_cfg, taxi_domain, taxi_problem):
        assert fairness_cfg.driver_type == "taxi"
        assert fairness_cfg.margin == 10
        assert fairness_cfg.min_trip_factor == 10
        assert fairness_cfg.trip_actions == {"drive_passenger": 0}
        assert fairness_cfg.driver_gender["taxi3"] is Gender.OTHER
        fairness_cfg.check(taxi_domain, taxi_problem)

    def test_default_factor(self):
        cfg = load_fairness_config(
            {"driver_type": "taxi", "margin": 0, "trip_actions": {}, "genders": {}}
        )
        assert cfg.min_trip_factor == 10

    def test_unknown_key(self, path_test_data):
        with pytest.raises(ConfigError) as excinfo:
            load_fairness_config(path_test_data / "fairness-unknown-key.json")
        assert "quota" in str(excinfo.value)

    def test_missing_file(self, tmp_path):
        with pytest.raises(ConfigError):
            load_fairness_config(tmp_path / "nope.json")

    def test_not_json(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text("{driver_type: taxi")
        with pytest.raises(ConfigError):
            load_fairness_config(path)

    @pytest.mark.parametrize(
        "change",
        [
            {"margin": -1},
            {"margin": "10"},
            {"min_trip_factor": 1.5},
            {"driver_type": 3},
            {"genders": {"taxi1": "unknown"}},
            {"trip_actions": {"drive_passenger": {"driver_param": -1}}},
            {"trip_actions": {"drive_passenger": {"driver": 0}}},
            {"trip_actions": ["drive_passenger"]},
        ],
    )
    def test_bad_values(self, path_taxi_data, change):
        raw = json.loads((path_taxi_data / "fairness.json").read_text())
        raw.update(change)
        with pytest.raises(ConfigError):
            load_fairness_config(raw)

    def test_missing_key(self, path_taxi_data):
        raw = json.loads((path_taxi_data / "fairness.json").read_text())
        del raw["genders"]
        with pytest.raises(ConfigError):
            load_fairness_config(raw)

    def test_wrong_driver_param(self, path_test_data, taxi_domain, taxi_problem):
        cfg = load_fairness_config(path_test_data / "fairness-wrong-param.json")
        with pytest.raises(ConfigError) as excinfo:
            cfg.check(taxi_domain, taxi_problem)
        assert "person" in str(excinfo.value)

    @pytest.mark.parametrize(
        "change",
        [
            {"trip_actions": {"fly": 0}},
            {"trip_actions": {"drive": 3}},
            {"driver_type": "car"},
            {"driver_gender": {"taxi1": Gender.MALE, "taxi2": Gender.FEMALE}},
            {
                "driver_gender": {
                    "taxi1": Gender.MALE,
                    "taxi2": Gender.FEMALE,
                    "taxi3": Gender.OTHER,
                    "person1": Gender.OTHER,
                }
            },
        ],
    )
    def test_inconsistent(self, fairness_cfg, taxi_domain, taxi_problem, change):
        cfg = dataclasses.replace(fairness_cfg, **change)
        with pytest.raises(ConfigError):
            cfg.check(taxi_domain, taxi_problem)


class TestArithmetic(object):
    def test_taxi_numbers(self, fairness_cfg, taxi_problem):
        assert total_drivers(fairness_cfg, taxi_problem) == 3
        for g in Gender:
            assert gender_driver_count(g, fairness_cfg, taxi_problem) == 1
            assert gender_pct(g, fairness_cfg, taxi_problem) == 33
            assert lower_bound_pct(g, fairness_cfg, taxi_problem) == 30

    def test_skewed_counts(self, fairness_cfg, taxi_problem):
        tc = TripCount(12, 10, 9)
        assert gender_assignment_pct(Gender.MALE, tc) == 38
        assert gender_assignment_pct(Gender.FEMALE, tc) == 32
        assert gender_assignment_pct(Gender.OTHER, tc) == 29
        check = is_fair(Gender.OTHER, tc, fairness_cfg, taxi_problem)
        assert not check
        assert (check.assignment_pct, check.lower_bound_pct) == (29, 30)
        assert is_fair(Gender.FEMALE, tc, fairness_cfg, taxi_problem)

    def test_no_trips(self):
        assert gender_assignment_pct(Gender.MALE, TripCount()) == 0

    def test_threshold(self, fairness_cfg, taxi_problem):
        assert under_minimum_trip_threshold(TripCount(10, 10, 9), fairness_cfg, taxi_problem)
        assert not under_minimum_trip_threshold(
            TripCount(10, 10, 10), fairness_cfg, taxi_problem
        )

    @pytest.mark.parametrize("margin,expected", [(0, 33), (1, 0), (5, 27), (10, 30)])
    def test_lower_bound_margins(self, fairness_cfg, taxi_problem, margin, expected):
        cfg = dataclasses.replace(fairness_cfg, margin=margin)
        for g in Gender:
            assert lower_bound_pct(g, cfg, taxi_problem) == expected
        if margin == 0:
            assert all(
                lower_bound_pct(g, cfg, taxi_problem) == gender_pct(g, cfg, taxi_problem)
                for g in Gender
            )

    def test_shares_partition(self, fairness_cfg):
        for split in itertools.product(range(5), repeat=3):
            if not any(split):
                continue
            genders = [g for g, n in zip(Gender, split) for _ in range(n)]
            drivers = tuple(ObjectRef("taxi{}".format(i), "taxi") for i in range(len(genders)))
            p = Problem("split", "taxi", drivers)
            cfg = dataclasses.replace(
                fairness_cfg,
                driver_gender={o.name: g for o, g in zip(drivers, genders)},
            )
            assert total_drivers(cfg, p) == len(drivers)
            assert 98 <= sum(gender_pct(g, cfg, p) for g in Gender) <= 100, split

    @pytest.mark.parametrize("margin", [1, 5, 10])
    def test_against_oracle(self, fairness_cfg, taxi_problem, trip, margin):
        cfg = dataclasses.replace(fairness_cfg, margin=margin)
        a = trip("taxi1")
        for male in range(41):
            for female in range(41 - male):
                for other in range(41 - male - female):
                    tc = TripCount(male, female, other)
                    got = action_preserves_fairness(a, tc, cfg, taxi_problem)
                    want = _oracle((male, female, other), margin)
                    if isinstance(got, FairnessRefutation):
                        assert got.trip_count == tc
                        got = (got.gender.value, got.assignment_pct, got.lower_bound_pct)
                    else:
                        got = got.value
                    assert got == want, tc


class TestDecision(object):
    def test_agnostic(self, fairness_cfg, taxi_problem, action):
        a = action("drive", "taxi1", "loc1", "loc2")
        assert trip_agnostic(a, fairness_cfg)
        tc = TripCount(40, 0, 0)
        assert action_preserves_fairness(a, tc, fairness_cfg, taxi_problem) is Justification.AGNOSTIC
        assert update_trip_count(a, tc, fairness_cfg) == tc

    def test_update(self, fairness_cfg, trip):
        tc = update_trip_count(trip("taxi2"), TripCount(), fairness_cfg)
        assert tc == TripCount(female=1)

    def test_update_wrong_driver_type(self, fairness_cfg, trip):
        cfg = dataclasses.replace(fairness_cfg, trip_actions={"drive_passenger": 1})
        with pytest.raises(ConfigError):
            update_trip_count(trip("taxi1"), TripCount(), cfg)

    def test_refutation_dict(self, fairness_cfg, taxi_problem, trip):
        r = action_preserves_fairness(trip("taxi1"), TripCount(12, 10, 9), fairness_cfg,
                                      taxi_problem)
        assert r.to_dict() == {
            "action": {
                "name": "drive_passenger",
                "args": ["taxi1", "person1", "loc1", "loc2"],
            },
            "trip_count": {"male": 12, "female": 10, "other": 9},
            "gender": "other",
            "assignment_pct": 29,
            "lower_bound_pct": 30,
        }


class TestMonitor(object):
    def test_taxi_plan_under_threshold(self, fairness_cfg, taxi_domain, taxi_problem,
                                       taxi_plan, final_world_order):
        outcome = execute_monitored(
            taxi_plan,
            canonical_handler(taxi_domain),
            fairness_monitor(fairness_cfg, taxi_problem),
            taxi_problem.initial_world,
        )
        assert outcome.final_world == final_world_order
        assert outcome.monitor_state == TripCount(other=2)

    def test_skewed_plan(self, fairness_cfg, taxi_domain, taxi_problem, skewed_plan):
        outcome = execute_monitored(
            skewed_plan,
            canonical_handler(taxi_domain, taxi_problem),
            fairness_monitor(fairness_cfg, taxi_problem),
            taxi_problem.initial_world,
        )
        e = outcome.error
        assert isinstance(e, GenderBiasError)
        assert e.step == 30
        assert e.refutation.gender is Gender.OTHER
        assert e.refutation.trip_count == TripCount(12, 10, 9)
        assert (e.refutation.assignment_pct, e.refutation.lower_bound_pct) == (29, 30)
        assert outcome.monitor_state == TripCount(11, 10, 9)
        d = e.to_dict()
        assert d["kind"] == "gender-bias"
        assert d["step"] == 30
        assert d["gender"] == "other"

    def test_fair_plan_passes(self, fairness_cfg, taxi_domain, taxi_problem, trip):
        plan = Plan(tuple(trip(t) for t in ["taxi1", "taxi2", "taxi3"] * 11))
        outcome = execute_monitored(
            plan,
            canonical_handler(taxi_domain),
            fairness_monitor(fairness_cfg, taxi_problem),
            taxi_problem.initial_world,
        )
        assert outcome.ok
        assert outcome.monitor_state == TripCount(11, 11, 11)

    def test_missing_gender(self, fairness_cfg, taxi_problem):
        cfg = dataclasses.replace(fairness_cfg, driver_gender={"taxi1": Gender.MALE})
        with pytest.raises(ConfigError):
            fairness_monitor(cfg, taxi_problem)
