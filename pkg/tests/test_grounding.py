"""This contains a set of tests for plancheck.grounding"""

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

from plancheck.exceptions import GroundingError
from plancheck.grounding import ground_action, make_binding
from plancheck.model import GroundAction, Literal, ObjectRef, State


class TestGroundAction(object):
    def test_drive_passenger(self, taxi_domain, action, atom):
        desc = ground_action(
            taxi_domain, action("drive_passenger", "taxi3", "person3", "loc3", "loc1")
        )
        assert desc.preconditions == State(
            (
                Literal.pos(atom("taxiIn", "taxi3", "loc3")),
                Literal.pos(atom("personIn", "person3", "loc3")),
            )
        )
        assert desc.effects == State(
            (
                Literal.neg(atom("taxiIn", "taxi3", "loc3")),
                Literal.neg(atom("personIn", "person3", "loc3")),
                Literal.pos(atom("taxiIn", "taxi3", "loc1")),
                Literal.pos(atom("personIn", "person3", "loc1")),
            )
        )

    def test_repeated_arguments(self, taxi_domain, action, atom):
        desc = ground_action(taxi_domain, action("drive", "taxi1", "loc1", "loc1"))
        assert [lit.atom for lit in desc.effects] == [atom("taxiIn", "taxi1", "loc1")] * 2
        assert not desc.effects.is_normalized()

    def test_binding(self, taxi_domain, action, obj):
        binding = make_binding(
            taxi_domain.schema("drive"), action("drive", "taxi2", "loc2", "loc3")
        )
        assert binding == {"t1": obj("taxi2"), "l1": obj("loc2"), "l2": obj("loc3")}

    def test_unknown_action(self, taxi_domain, action):
        with pytest.raises(GroundingError) as excinfo:
            ground_action(taxi_domain, action("fly", "taxi1"))
        assert excinfo.value.kind == "unknown-action"

    def test_arity(self, taxi_domain, action):
        with pytest.raises(GroundingError) as excinfo:
            ground_action(taxi_domain, action("drive", "taxi1", "loc1"))
        assert excinfo.value.kind == "arity-mismatch"

    def test_type_mismatch(self, taxi_domain, action):
        with pytest.raises(GroundingError) as excinfo:
            ground_action(taxi_domain, action("drive", "person1", "loc1", "loc2"))
        assert excinfo.value.kind == "type-mismatch"
        assert "?t1 needs taxi" in str(excinfo.value)
        assert excinfo.value.to_dict()["action"]["name"] == "drive"

    def test_unknown_object(self, taxi_domain, taxi_problem, obj):
        a = GroundAction("drive", (obj("taxi1"), ObjectRef("loc9", "location"), obj("loc2")))
        assert ground_action(taxi_domain, a).preconditions[0].atom.args[1].name == "loc9"
        with pytest.raises(GroundingError) as excinfo:
            ground_action(taxi_domain, a, taxi_problem)
        assert excinfo.value.kind == "unknown-name"


TELEPORT_DOMAIN = """
(define (domain tele)
  (:requirements :strips :typing)
  (:types taxi location)
  (:predicates (taxiIn ?t - taxi ?l - location))
  (:action teleport
    :parameters (?l - location)
    :effect (taxiIn taxi9 ?l)))
"""


def _teleport_problem(objects):
    return (
        "(define (problem tp) (:domain tele) (:objects {})"
        " (:init (taxiIn taxi1 loc1)) (:goal (and (taxiIn taxi1 loc1))))".format(objects)
    )


class TestConstants(object):
    @pytest.fixture
    def tele(self):
        from plancheck.pddl import parse_domain

        return parse_domain(TELEPORT_DOMAIN)

    def _ground(self, tele, objects):
        from plancheck.pddl import parse_problem

        p = parse_problem(_teleport_problem(objects), tele)
        a = GroundAction("teleport", (p.object("loc1"),))
        return ground_action(tele, a, p)

    def test_declared_constant(self, tele):
        desc = self._ground(tele, "loc1 - location taxi1 taxi9 - taxi")
        assert desc.effects[0].atom.args[0] == ObjectRef("taxi9", "taxi")

    def test_undeclared_constant(self, tele):
        with pytest.raises(GroundingError) as excinfo:
            self._ground(tele, "loc1 - location taxi1 - taxi")
        assert excinfo.value.kind == "unknown-name"
        assert "taxi9" in str(excinfo.value)

    def test_constant_of_wrong_type(self, tele):
        with pytest.raises(GroundingError) as excinfo:
            self._ground(tele, "loc1 taxi9 - location taxi1 - taxi")
        assert excinfo.value.kind == "type-mismatch"

    def test_without_problem(self, tele):
        a = GroundAction("teleport", (ObjectRef("loc1", "location"),))
        desc = ground_action(tele, a)
        assert desc.effects[0].atom.args[0] == ObjectRef("taxi9", "taxi")

    def test_plan_with_undeclared_constant(self, tele):
        from plancheck.exceptions import PlanValidationError
        from plancheck.model import Plan
        from plancheck.pddl import parse_problem
        from plancheck.validator import check_plan

        p = parse_problem(_teleport_problem("loc1 - location taxi1 - taxi"), tele)
        pl = Plan((GroundAction("teleport", (p.object("loc1"),)),))
        with pytest.raises(PlanValidationError) as excinfo:
            check_plan(tele, p, pl)
        assert excinfo.value.kind == "grounding-failed"
        assert excinfo.value.step == 0
