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

# This file defines exceptions that are useful for the plancheck package.
# Every error carries its evidence as attributes so that reports can be
# built from it without re-parsing messages.

from dataclasses import dataclass
from typing import Any, Dict, Optional


class PlanCheckError(Exception):
    """Base class for all errors raised by plancheck.

    Attributes:
        kind -- short machine-readable category of the error
        msg  -- explanation of the error
    """

    kind = "error"

    def __init__(self, msg: str = ""):
        super(PlanCheckError, self).__init__(msg)
        self.msg = msg

    def to_dict(self) -> Dict[str, Any]:
        return {"kind": self.kind, "message": str(self)}

    def __str__(self):
        return self.msg


class InputError(PlanCheckError):
    """Exception raised for errors in the input.

    Attributes:
        expr -- input expression in which the error occurred
        msg  -- explanation of the error
    """

    kind = "input"

    def __init__(self, expr, msg):
        super(InputError, self).__init__(msg)
        self.expr = expr

    def to_dict(self):
        return {"kind": self.kind, "expr": str(self.expr), "message": self.msg}

    def __str__(self):
        return 'Incorrect input "{}". {}'.format(self.expr, self.msg)


class ConfigError(InputError):
    """Exception raised for a malformed or inconsistent configuration file"""

    kind = "config"


@dataclass(frozen=True)
class SourcePos(object):
    """1-based line and column of a character in a source text"""

    line: int = 1
    column: int = 1

    def __post_init__(self):
        if self.line < 1 or self.column < 1:
            raise ValueError(
                "line and column must be >= 1; given {}:{}".format(self.line, self.column)
            )

    def __str__(self):
        return "{}:{}".format(self.line, self.column)


PARSE_ERROR_KINDS = (
    "lex",
    "syntax",
    "unknown-name",
    "arity-mismatch",
    "type-mismatch",
    "unsupported-feature",
)


class ParseError(PlanCheckError):
    """
    Exception raised when a PDDL or plan text cannot be read.

    :param pos: position of the offending token
    :param kind: one of :data:`PARSE_ERROR_KINDS`
    :param msg: explanation of the error
    :param source: name of the file (or other source) being parsed
    """

    def __init__(
        self, pos: SourcePos, kind: str, msg: str, source: Optional[str] = None
    ):
        if kind not in PARSE_ERROR_KINDS:
            raise ValueError("unknown parse error kind {!r}".format(kind))
        if not msg:
            raise ValueError("ParseError needs a message")
        super(ParseError, self).__init__(msg)
        self.pos = pos
        self.kind = kind
        self.source = source

    def to_dict(self):
        return {
            "kind": self.kind,
            "message": self.msg,
            "line": self.pos.line,
            "column": self.pos.column,
            "source": self.source,
        }

    def __str__(self):
        where = str(self.pos) if self.source is None else "{}:{}".format(
            self.source, self.pos
        )
        return "{}: {} error: {}".format(where, self.kind, self.msg)


class GroundingError(PlanCheckError):
    """
    Exception raised when a ground action cannot be instantiated.

    :param kind: one of 'unknown-action', 'unknown-name', 'arity-mismatch'
        or 'type-mismatch'
    :param msg: explanation naming the offender
    :param action: the action that could not be grounded
    """

    KINDS = ("unknown-action", "unknown-name", "arity-mismatch", "type-mismatch")

    def __init__(self, kind: str, msg: str, action=None):
        if kind not in self.KINDS:
            raise ValueError("unknown grounding error kind {!r}".format(kind))
        super(GroundingError, self).__init__(msg)
        self.kind = kind
        self.action = action

    def to_dict(self):
        return {
            "kind": self.kind,
            "message": self.msg,
            "action": None if self.action is None else self.action.to_dict(),
        }


def _world_list(world):
    return None if world is None else [atom.to_dict() for atom in world]


class PlanValidationError(PlanCheckError):
    """
    Exception raised when a plan does not validate.

    precondition-unsatisfied carries step, action, literal and world;
    goal-unsatisfied carries literal and the final world;
    grounding-failed carries step, action, world and the GroundingError as
    ``cause``.
    """

    KINDS = ("precondition-unsatisfied", "goal-unsatisfied", "grounding-failed")

    def __init__(
        self,
        kind: str,
        msg: str,
        step: Optional[int] = None,
        action=None,
        literal=None,
        world=None,
        cause: Optional[GroundingError] = None,
    ):
        if kind not in self.KINDS:
            raise ValueError("unknown validation error kind {!r}".format(kind))
        if kind == "precondition-unsatisfied" and None in (
            step,
            action,
            literal,
            world,
        ):
            raise ValueError("precondition-unsatisfied needs full evidence")
        if kind == "goal-unsatisfied" and None in (literal, world):
            raise ValueError("goal-unsatisfied needs literal and world")
        super(PlanValidationError, self).__init__(msg)
        self.kind = kind
        self.step = step
        self.action = action
        self.literal = literal
        self.world = world
        self.cause = cause

    def to_dict(self):
        out = {
            "kind": self.kind,
            "message": self.msg,
            "step": self.step,
            "action": None if self.action is None else self.action.to_dict(),
            "literal": None if self.literal is None else self.literal.to_dict(),
            "world": _world_list(self.world),
        }
        if self.cause is not None:
            out["cause"] = self.cause.to_dict()
        return out


class TamperError(PlanCheckError):
    """Exception raised when a stored derivation does not replay"""

    kind = "tamper-detected"

    def __init__(self, msg: str, step: Optional[int] = None, expected=None,
                 stored=None):
        super(TamperError, self).__init__(msg)
        self.step = step
        self.expected = expected
        self.stored = stored

    def to_dict(self):
        return {
            "kind": self.kind,
            "message": self.msg,
            "step": self.step,
            "expected": _world_list(self.expected),
            "stored": _world_list(self.stored),
        }


class MonitorError(PlanCheckError):
    """
    Base for refusals raised by a monitor transition.

    :param action: the action the monitor refused
    :param world: the world before ``action`` would have been applied
    """

    kind = "monitor"

    def __init__(self, msg: str, action=None, world=None):
        super(MonitorError, self).__init__(msg)
        self.action = action
        self.world = world
        self.step = None  # filled in by the executor

    def to_dict(self):
        return {
            "kind": self.kind,
            "message": self.msg,
            "step": self.step,
            "action": None if self.action is None else self.action.to_dict(),
            "world": _world_list(self.world),
        }


class OutOfFuelError(MonitorError):
    """Raised when an action is due but no fuel remains"""

    kind = "out-of-fuel"

    def __init__(self, action, world):
        super(OutOfFuelError, self).__init__(
            "out of fuel before {}".format(action), action, world
        )


class GenderBiasError(MonitorError):
    """
    Raised when a trip would leave some gender below its fair share.

    :param refutation: the
        :class:`~plancheck.monitors.fairness.FairnessRefutation` with the
        numbers that show the action is not fair
    """

    kind = "gender-bias"

    def __init__(self, refutation, world):
        super(GenderBiasError, self).__init__(
            "{} is not fair for {}: {}% assigned, at least {}% "
            "required".format(
                refutation.action,
                refutation.gender.value,
                refutation.assignment_pct,
                refutation.lower_bound_pct,
            ),
            refutation.action,
            world,
        )
        self.refutation = refutation

    def to_dict(self):
        out = super(GenderBiasError, self).to_dict()
        out.update(self.refutation.to_dict())
        return out
