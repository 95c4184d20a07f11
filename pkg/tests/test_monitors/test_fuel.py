"""
tests for the fuel module

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

import pytest

from plancheck.exceptions import OutOfFuelError
from plancheck.monitors import FuelState, canonical_handler, execute_monitored, fuel_monitor


def _run(taxi_domain, taxi_problem, plan, fuel):
    return execute_monitored(
        plan, canonical_handler(taxi_domain), fuel_monitor(fuel), taxi_problem.initial_world
    )


class TestFuel(object):
    def test_enough(self, taxi_domain, taxi_problem, taxi_plan, final_world_order):
        outcome = _run(taxi_domain, taxi_problem, taxi_plan, 3)
        assert outcome.ok
        assert outcome.final_world == final_world_order
        assert outcome.monitor_state == FuelState(0)
        assert outcome.steps == 3

    def test_none(self, taxi_domain, taxi_problem, taxi_plan):
        outcome = _run(taxi_domain, taxi_problem, taxi_plan, 0)
        assert isinstance(outcome.error, OutOfFuelError)
        assert outcome.error.step == 0
        assert outcome.error.action == taxi_plan[0]
        assert outcome.error.world == taxi_problem.initial_world

    def test_runs_out(self, taxi_domain, taxi_problem, taxi_plan, action):
        outcome = _run(taxi_domain, taxi_problem, taxi_plan, 2)
        e = outcome.error
        assert e.kind == "out-of-fuel"
        assert e.step == 2
        assert e.action == action("drive_passenger", "taxi3", "person1", "loc1", "loc3")
        assert len(e.world) == 6
        assert outcome.monitor_state == FuelState(0)

    @pytest.mark.parametrize("fuel", [3, 4, 10])
    def test_surplus(self, taxi_domain, taxi_problem, taxi_plan, fuel):
        outcome = _run(taxi_domain, taxi_problem, taxi_plan, fuel)
        assert outcome.monitor_state.remaining == fuel - 3

    @pytest.mark.parametrize("bad", [-1, 2.5, True])
    def test_bad_fuel(self, bad):
        with pytest.raises(ValueError):
            fuel_monitor(bad)
