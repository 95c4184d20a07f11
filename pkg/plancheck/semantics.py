"""
Closed-world satisfaction and world update

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

from typing import Optional

from .model import GroundAtom, Literal, Problem, State, World


__all__ = [
    "Satisfaction",
    "satisfies",
    "goal_satisfied_by",
    "remove_all",
    "update_world",
    "world_set_eq",
]


class Satisfaction(object):
    """
    Result of :func:`satisfies`.

    Truthy when the world satisfies the state; otherwise :attr:`literal`
    holds the first unsatisfied literal (in state order).
    """

    __slots__ = ("literal",)

    def __init__(self, literal: Optional[Literal] = None):
        self.literal = literal

    def __bool__(self):
        return self.literal is None

    def __eq__(self, other):
        if not isinstance(other, Satisfaction):
            return NotImplemented
        return self.literal == other.literal

    def __repr__(self):
        if self:
            return "<satisfied>"
        return "<unsatisfied {}>".format(self.literal)


def satisfies(w: World, s: State) -> Satisfaction:
    """
    Check that every positive literal of ``s`` is in ``w`` and no negative
    one is.

    :param w: the world
    :param s: the state (precondition, goal, ...)
    :return: a :class:`Satisfaction`; falsy with the first unsatisfied
        literal if the check fails
    """
    present = w.as_set()
    for lit in s:
        if (lit.atom in present) != lit.positive:
            return Satisfaction(lit)
    return Satisfaction()


def goal_satisfied_by(w: World, p: Problem) -> bool:
    return bool(satisfies(w, p.goal))


def remove_all(atom: GroundAtom, w: World) -> World:
    """Drop every occurrence of ``atom`` from ``w``"""
    return World(tuple(a for a in w if a != atom))


def update_world(e: State, w: World) -> World:
    """
    Apply an effect to a world.

    The literals are folded from the end of ``e``: the last literal is
    applied first and the head literal last, so for a duplicated atom the
    earlier literal decides. Positive literals are prepended, negative ones
    remove every occurrence.

    :param e: the effect
    :param w: the world before the effect
    :return: the updated world
    """
    for lit in reversed(e.literals):
        if lit.positive:
            w = World((lit.atom,) + w.atoms)
        else:
            w = remove_all(lit.atom, w)
    return w


def world_set_eq(w1: World, w2: World) -> bool:
    return w1.set_eq(w2)
