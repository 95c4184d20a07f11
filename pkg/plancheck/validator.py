"""
Plan validation by the halt/seq calculus

A plan is valid when every action's precondition holds in the world it is
applied to and the final world satisfies the goal. :func:`check_plan`
walks the plan once and records a :class:`Derivation` that certifies
this; :func:`replay` re-checks such a certificate.

"""

########################################################################
#                                                                      #
# This script was written by the PlanCheck developers in 2024.         #
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

from dataclasses import dataclass
import logging
from typing import List, Tuple

from .exceptions import GroundingError, PlanValidationError, TamperError
from .grounding import ground_action
from .model import Domain, GroundAction, GroundActionDescription, Plan, Problem, State, World
from .semantics import satisfies, update_world, world_set_eq


__all__ = ["DerivationStep", "Derivation", "check_plan", "replay"]


log = logging.getLogger(__name__)


@dataclass(frozen=True)
class DerivationStep(object):
    """One application of the sequencing rule"""

    index: int
    action: GroundAction
    world_before: World
    description: GroundActionDescription

    @property
    def world_after(self) -> World:
        return update_world(self.description.effects, self.world_before)

    def to_dict(self, trace: bool = False) -> dict:
        out = {
            "index": self.index,
            "action": self.action.to_dict(),
            "world_size_before": len(self.world_before),
        }
        if trace:
            out["world_before"] = [a.to_dict() for a in self.world_before]
            out.update(self.description.to_dict())
        return out


@dataclass(frozen=True)
class Derivation(object):
    """
    Certificate that a plan takes the initial world to the goal.

    :attr steps: one :class:`DerivationStep` per plan action
    :attr initial_world: the problem's initial world
    :attr final_world: world after the last step; satisfies ``goal``
    :attr goal: the goal the final world was checked against
    """

    steps: Tuple[DerivationStep, ...]
    initial_world: World
    final_world: World
    goal: State = State()

    def __len__(self):
        return len(self.steps)

    def worlds(self) -> List[World]:
        """The initial world, then the world after each step"""
        return [self.initial_world] + [s.world_after for s in self.steps]

    def to_dict(self, trace: bool = False) -> dict:
        return {
            "steps": [s.to_dict(trace) for s in self.steps],
            "final_world": [a.to_dict() for a in self.final_world],
        }


def check_plan(d: Domain, p: Problem, pl: Plan) -> Derivation:
    """
    Validate a plan against a problem.

    Deterministic simulation, no search: ground each action, check its
    precondition in the current world, apply its effect, and finally check
    the goal. The first failure wins.

    :param d: the domain
    :param p: the problem, well formed against ``d``
    :param pl: the plan
    :return: the :class:`Derivation` of a valid plan
    :raises PlanValidationError: precondition-unsatisfied (with the step,
        action, literal and world), goal-unsatisfied (with the literal and
        final world) or grounding-failed
    """
    world = p.initial_world
    steps = []
    for index, action in enumerate(pl):
        try:
            description = ground_action(d, action, p)
        except GroundingError as e:
            raise PlanValidationError(
                "grounding-failed",
                "step {}: {}".format(index, e),
                step=index,
                action=action,
                world=world,
                cause=e,
            )
        result = satisfies(world, description.preconditions)
        if not result:
            raise PlanValidationError(
                "precondition-unsatisfied",
                "step {}: precondition {} of {} does not hold".format(
                    index, result.literal, action
                ),
                step=index,
                action=action,
                literal=result.literal,
                world=world,
            )
        log.debug("step {}: {} applies".format(index, action))
        steps.append(DerivationStep(index, action, world, description))
        world = update_world(description.effects, world)
    result = satisfies(world, p.goal)
    if not result:
        raise PlanValidationError(
            "goal-unsatisfied",
            "goal {} does not hold after {} steps".format(result.literal, len(steps)),
            step=None,
            literal=result.literal,
            world=world,
        )
    log.info("Plan of {} steps reaches the goal".format(len(steps)))
    return Derivation(tuple(steps), p.initial_world, world, p.goal)


def replay(deriv: Derivation) -> World:
    """
    Recompute a derivation from its initial world.

    Every stored world, precondition check and the goal check are redone.

    :param deriv: the derivation to audit
    :return: the final world
    :raises TamperError: if a stored world differs (as a set) from the
        recomputed one, or a recorded check no longer holds
    """
    world = deriv.initial_world
    for pos, step in enumerate(deriv.steps):
        if step.index != pos:
            raise TamperError("step {} is stored as index {}".format(pos, step.index),
                              step=pos)
        if not world_set_eq(world, step.world_before):
            raise TamperError(
                "world before step {} differs from the recomputed one".format(pos),
                step=pos,
                expected=world,
                stored=step.world_before,
            )
        if not satisfies(world, step.description.preconditions):
            raise TamperError(
                "precondition of step {} does not hold".format(pos), step=pos
            )
        world = update_world(step.description.effects, world)
    if not world_set_eq(world, deriv.final_world):
        raise TamperError(
            "final world differs from the recomputed one",
            expected=world,
            stored=deriv.final_world,
        )
    if not satisfies(world, deriv.goal):
        raise TamperError("final world does not satisfy the goal")
    return deriv.final_world
