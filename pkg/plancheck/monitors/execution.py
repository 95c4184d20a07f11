"""
Plan execution with action handlers and monitors

A handler applies one ground action to a world. A :class:`Monitor` adds
state threaded through the execution and may refuse an action by raising
a :class:`~plancheck.exceptions.MonitorError` before it is applied.

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
import typing
from typing import Any, Callable, List, Optional, Sequence

from ..exceptions import MonitorError
from ..grounding import ground_action
from ..model import Domain, GroundAction, Plan, Problem, World
from ..semantics import update_world


__all__ = [
    "Handler",
    "Monitor",
    "ExecutionOutcome",
    "canonical_handler",
    "execute",
    "execute_traced",
    "execute_monitored",
    "compose_monitors",
]


log = logging.getLogger(__name__)


Handler = Callable[[GroundAction, World], World]
Transition = Callable[[GroundAction, World, Any], Any]


@dataclass(frozen=True)
class Monitor(object):
    """
    An execution-time check with its own state.

    :param name: name used in reports
    :param initial_state: state before the first action
    :param transition: ``transition(action, world_before, state)`` returns
        the next state or raises a
        :class:`~plancheck.exceptions.MonitorError`; it must be
        deterministic and free of side effects
    """

    name: str
    initial_state: Any
    transition: Transition


@dataclass(frozen=True)
class ExecutionOutcome(object):
    """
    Either the final world or the monitor error that stopped execution.

    :attr steps: number of actions that were applied
    :attr monitor_state: monitor state after the last accepted action
    """

    final_world: Optional[World] = None
    error: Optional[MonitorError] = None
    monitor_state: Any = None
    steps: int = 0

    def __post_init__(self):
        if (self.final_world is None) == (self.error is None):
            raise ValueError("exactly one of final_world and error must be set")

    @property
    def ok(self) -> bool:
        return self.error is None


def canonical_handler(d: Domain, problem: Optional[Problem] = None) -> Handler:
    """
    Make the handler that applies an action's effects.

    Preconditions are not looked at; the plan is assumed validated.

    :param d: the domain the actions come from
    :param problem: if given, action arguments must be its objects
    :return: ``handler(action, world) -> world``; it raises
        :class:`~plancheck.exceptions.GroundingError` for actions that do
        not ground
    """

    def handler(action: GroundAction, world: World) -> World:
        return update_world(ground_action(d, action, problem).effects, world)

    return handler


def execute(pl: Plan, h: Handler, w0: World) -> World:
    """Apply every action of ``pl`` with ``h``, starting from ``w0``"""
    world = w0
    for action in pl:
        world = h(action, world)
    return world


def execute_traced(pl: Plan, h: Handler, w0: World) -> List[World]:
    """Like :func:`execute` but return ``w0`` and every intermediate world"""
    worlds = [w0]
    for action in pl:
        worlds.append(h(action, worlds[-1]))
    return worlds


def execute_monitored(pl: Plan, h: Handler, m: Monitor, w0: World) -> ExecutionOutcome:
    """
    Execute a plan under a monitor.

    For each action the monitor sees the world before the action; if it
    accepts, the handler is applied. On the first refusal nothing more is
    applied and the error (with its 0-based ``step`` filled in) is returned.

    :param pl: the plan
    :param h: the handler, e.g. from :func:`canonical_handler`
    :param m: the monitor
    :param w0: starting world
    :return: the :class:`ExecutionOutcome`
    """
    world, state = w0, m.initial_state
    for index, action in enumerate(pl):
        try:
            state = m.transition(action, world, state)
        except MonitorError as e:
            e.step = index
            log.info("Monitor {} refused step {}: {}".format(m.name, index, e))
            return ExecutionOutcome(error=e, monitor_state=state, steps=index)
        log.debug("Monitor {} accepted step {} ({})".format(m.name, index, action))
        world = h(action, world)
    return ExecutionOutcome(final_world=world, monitor_state=state, steps=len(pl))


def compose_monitors(monitors: Sequence[Monitor]) -> Monitor:
    """
    Run several monitors side by side.

    The state is the tuple of the monitors' states; they are asked in
    order and the first refusal wins.
    """
    monitors = tuple(monitors)

    def transition(action, world, states: typing.Tuple) -> typing.Tuple:
        return tuple(
            m.transition(action, world, s) for m, s in zip(monitors, states)
        )

    return Monitor(
        name="+".join(m.name for m in monitors) or "none",
        initial_state=tuple(m.initial_state for m in monitors),
        transition=transition,
    )
