"""
Rendering of derivations, executions and errors as text or JSON

Text output prints atoms as ``pred(a,b)`` in world order; JSON output is
one document per run with the keys ``status``, ``steps``, ``final_world``
and ``error``.

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

import json
from typing import Any, Dict, List, Optional, Sequence

import pandas as pd

from .exceptions import PlanCheckError
from .model import World
from .monitors import ExecutionOutcome
from .validator import Derivation


__all__ = [
    "FORMATS",
    "STATUSES",
    "world_text",
    "steps_table",
    "document",
    "to_json",
    "derivation_text",
    "execution_text",
    "error_text",
]


FORMATS = ("text", "json")

STATUSES = ("valid", "invalid", "executed", "monitor-error")


def world_text(world: World) -> str:
    """One atom per line, in world order"""
    return "\n".join(str(atom) for atom in world)


def steps_table(deriv: Derivation) -> pd.DataFrame:
    """
    Tabulate a derivation: one row per step with the action and the number
    of atoms in the world before and after it
    """
    rows = [
        (s.index, str(s.action), len(s.world_before), len(s.world_after))
        for s in deriv.steps
    ]
    return pd.DataFrame(
        rows, columns=["step", "action", "atoms_before", "atoms_after"]
    )


def document(
    status: str,
    steps: Sequence[Dict[str, Any]] = (),
    final_world: Optional[World] = None,
    error: Optional[PlanCheckError] = None,
) -> Dict[str, Any]:
    """
    Build the JSON report; every key is always present.

    :param status: one of :data:`STATUSES`
    :param steps: step dictionaries, e.g. from :meth:`Derivation.to_dict`
    :param final_world: the final world, if one was reached
    :param error: the error that ended the run
    """
    if status not in STATUSES:
        raise ValueError("unknown status {!r}".format(status))
    return {
        "status": status,
        "steps": list(steps),
        "final_world": None
        if final_world is None
        else [atom.to_dict() for atom in final_world],
        "error": None if error is None else error.to_dict(),
    }


def to_json(doc: Dict[str, Any]) -> str:
    return json.dumps(doc, indent=2)


def derivation_text(deriv: Derivation, trace: bool = False) -> str:
    """Summary line, step table and (with ``trace``) every intermediate world"""
    parts = ["{} steps, goal satisfied".format(len(deriv))]
    if len(deriv):
        parts.append(steps_table(deriv).to_string(index=False))
    if trace:
        for i, world in enumerate(deriv.worlds()):
            parts.append("world {}:".format(i))
            parts.append(_indented(world))
    return "\n".join(parts) + "\n"


def execution_text(
    outcome: ExecutionOutcome, worlds: Optional[List[World]] = None
) -> str:
    """
    Text report of a successful execution: the final world one atom per
    line, preceded by the intermediate worlds when ``worlds`` is given
    """
    parts = []
    if worlds:
        for i, world in enumerate(worlds[:-1]):
            parts.append("world {}:".format(i))
            parts.append(_indented(world))
        parts.append("final world:")
    if outcome.final_world is not None and len(outcome.final_world):
        parts.append(world_text(outcome.final_world))
    return "\n".join(parts) + "\n" if parts else ""


def error_text(error: PlanCheckError) -> str:
    """
    Diagnostic for the error stream: the message, then the evidence the
    error carries, one field per line
    """
    lines = ["error [{}]: {}".format(error.kind, error)]
    fields = error.to_dict()
    for key in ("step", "action", "literal", "gender", "assignment_pct",
                "lower_bound_pct", "trip_count", "line", "column"):
        value = fields.get(key)
        if value is None:
            continue
        lines.append("  {}: {}".format(key, _field_text(key, value, error)))
    world = getattr(error, "world", None)
    if world is not None:
        lines.append("  world:")
        lines += ["    {}".format(atom) for atom in world]
    return "\n".join(lines) + "\n"


def _field_text(key: str, value, error) -> str:
    if key == "action":
        return str(error.action)
    if key == "literal":
        return str(error.literal)
    if key == "trip_count":
        return ", ".join("{}={}".format(g, n) for g, n in value.items())
    return str(value)


def _indented(world: World) -> str:
    if not len(world):
        return "  (empty)"
    return "\n".join("  {}".format(atom) for atom in world)
