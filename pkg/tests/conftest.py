"""This contains a set of fixtures and such for tests"""

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

import pathlib

import pytest

import plancheck


@pytest.fixture
def path_test_data():
    return pathlib.Path(__file__).parent / "test-data"


@pytest.fixture
def path_taxi_data():
    return pathlib.Path(plancheck.__file__).parent / "data" / "taxi"


@pytest.fixture
def taxi_domain(path_taxi_data):
    from plancheck import parse_domain

    return parse_domain((path_taxi_data / "domain.pddl").read_text())


@pytest.fixture
def taxi_problem(path_taxi_data, taxi_domain):
    from plancheck import parse_problem

    return parse_problem((path_taxi_data / "problem.pddl").read_text(), taxi_domain)


@pytest.fixture
def taxi_plan(path_taxi_data, taxi_domain, taxi_problem):
    from plancheck import parse_plan

    return parse_plan(
        (path_taxi_data / "plan.txt").read_text(), taxi_domain, taxi_problem
    )


@pytest.fixture
def taxi_plan_alternate(path_taxi_data, taxi_domain, taxi_problem):
    from plancheck import parse_plan

    return parse_plan(
        (path_taxi_data / "plan-alternate.txt").read_text(), taxi_domain, taxi_problem
    )


@pytest.fixture
def obj(taxi_problem):
    """Look up a taxi object by name"""
    return taxi_problem.object


@pytest.fixture
def atom(obj):
    """Build a ground atom from a predicate and object names"""
    from plancheck.model import GroundAtom

    def make(pred, *names):
        return GroundAtom(pred, tuple(obj(n) for n in names))

    return make


@pytest.fixture
def action(obj):
    """Build a ground action from a name and object names"""
    from plancheck.model import GroundAction

    def make(name, *names):
        return GroundAction(name, tuple(obj(n) for n in names))

    return make


@pytest.fixture
def final_world_order(atom):
    """World after the three taxi trips, in the order execution produces"""
    from plancheck.model import World

    return World(
        (
            atom("taxiIn", "taxi3", "loc3"),
            atom("personIn", "person1", "loc3"),
            atom("personIn", "person3", "loc1"),
            atom("taxiIn", "taxi1", "loc2"),
            atom("taxiIn", "taxi2", "loc2"),
            atom("personIn", "person2", "loc2"),
        )
    )
