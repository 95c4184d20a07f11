"""
Instantiate action schemas for ground actions

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

from typing import Dict, Iterable, Optional

from .exceptions import GroundingError
from .model import (
    ActionSchema,
    Domain,
    GroundAction,
    GroundActionDescription,
    GroundAtom,
    Literal,
    ObjectRef,
    Problem,
    SchemaLiteral,
    State,
    Variable,
)


__all__ = ["Binding", "make_binding", "ground_action"]


Binding = Dict[str, ObjectRef]
"""Mapping from parameter name (without ``?``) to the object bound to it"""


def make_binding(
    schema: ActionSchema, a: GroundAction, problem: Optional[Problem] = None
) -> Binding:
    """
    Bind the schema's parameters to the action's arguments by position.

    :param schema: schema named by ``a``
    :param a: the ground action
    :param problem: if given, every argument must be one of its objects
    :raises GroundingError: for a wrong number of arguments, an argument of
        the wrong type or (with ``problem``) an undeclared object
    """
    if len(a.args) != schema.arity:
        raise GroundingError(
            "arity-mismatch",
            "{} takes {} arguments, {} given".format(
                schema.name, schema.arity, len(a.args)
            ),
            a,
        )
    binding = dict()
    for param, arg in zip(schema.params, a.args):
        if problem is not None and problem.object(arg.name) != arg:
            raise GroundingError(
                "unknown-name", "unknown object {} in {}".format(arg.name, a), a
            )
        if arg.type != param.type:
            raise GroundingError(
                "type-mismatch",
                "argument type mismatch in {}: ?{} needs {}, {} is {}".format(
                    a, param.name, param.type, arg.name, arg.type
                ),
                a,
            )
        binding[param.name] = arg
    return binding


def _resolve_constant(
    const: ObjectRef, problem: Optional[Problem], a: GroundAction
) -> ObjectRef:
    if problem is None:
        return const
    declared = problem.object(const.name)
    if declared is None:
        raise GroundingError(
            "unknown-name",
            "constant {} of {} is not an object of problem {}".format(
                const.name, a.name, problem.name
            ),
            a,
        )
    if declared.type != const.type:
        raise GroundingError(
            "type-mismatch",
            "constant {} of {} is a {}, the predicate needs {}".format(
                const.name, a.name, declared.type, const.type
            ),
            a,
        )
    return declared


def _substitute(
    lits: Iterable[SchemaLiteral],
    binding: Binding,
    problem: Optional[Problem],
    a: GroundAction,
) -> State:
    return State(
        tuple(
            Literal(
                lit.polarity,
                GroundAtom(
                    lit.predicate,
                    tuple(
                        binding[arg.name]
                        if isinstance(arg, Variable)
                        else _resolve_constant(arg, problem, a)
                        for arg in lit.args
                    ),
                ),
            )
            for lit in lits
        )
    )


def ground_action(
    d: Domain, a: GroundAction, problem: Optional[Problem] = None
) -> GroundActionDescription:
    """
    Build the ground preconditions and effects of an action.

    Literal order and polarity follow the schema: the i-th ground literal
    comes from the i-th schema literal. Repeated arguments are accepted and
    can give effects that mention an atom twice.

    :param d: a well formed domain
    :param a: the action to ground
    :param problem: optional problem whose objects the arguments and the
        schema constants must be
    :return: the ground action description
    :raises GroundingError: unknown-action, unknown-name, arity-mismatch or
        type-mismatch
    """
    schema = d.schema(a.name)
    if schema is None:
        raise GroundingError("unknown-action", "unknown action {}".format(a.name), a)
    binding = make_binding(schema, a, problem)
    return GroundActionDescription(
        preconditions=_substitute(schema.preconditions, binding, problem, a),
        effects=_substitute(schema.effects, binding, problem, a),
    )
