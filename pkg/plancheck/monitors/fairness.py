"""
Gender-fairness monitor for trip assignments

Trip-counting actions (for taxis, the ones carrying a passenger) are
tallied per driver gender. Once enough trips have been made, every gender
must receive at least its share of drivers, less a margin, of all trips.
All percentages are natural numbers computed with floor division.

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

from dataclasses import dataclass, field, replace
import enum
import json
import logging
import pathlib
from typing import Any, Dict, Mapping, Union

from ..exceptions import ConfigError, GenderBiasError
from ..model import Domain, GroundAction, Problem, TypeName, World
from ..tools import check_natural, div0, monus, read_source
from .execution import Monitor


__all__ = [
    "Gender",
    "TripCount",
    "FairnessConfig",
    "load_fairness_config",
    "Justification",
    "FairnessCheck",
    "FairnessRefutation",
    "total_trips_taken",
    "gender_assignment_pct",
    "total_drivers",
    "gender_driver_count",
    "gender_pct",
    "lower_bound_pct",
    "is_fair",
    "under_minimum_trip_threshold",
    "trip_agnostic",
    "action_preserves_fairness",
    "update_trip_count",
    "fairness_monitor",
]


log = logging.getLogger(__name__)


DEFAULT_MIN_TRIP_FACTOR = 10


class Gender(enum.Enum):
    MALE = "male"
    FEMALE = "female"
    OTHER = "other"


@dataclass(frozen=True)
class TripCount(object):
    """Number of trips assigned to drivers of each gender"""

    male: int = 0
    female: int = 0
    other: int = 0

    def __post_init__(self):
        for g in Gender:
            check_natural(self[g], "trip count for {}".format(g.value))

    def __getitem__(self, g: Gender) -> int:
        return getattr(self, g.value)

    def increment(self, g: Gender) -> "TripCount":
        return replace(self, **{g.value: self[g] + 1})

    def as_dict(self) -> Dict[str, int]:
        return {g.value: self[g] for g in Gender}


@dataclass(frozen=True)
class FairnessConfig(object):
    """
    Static data for the fairness monitor.

    :param driver_type: type of the objects that are drivers
    :param margin: leeway; the lower bound of a gender is its driver
        percentage less that percentage divided by ``margin`` (0 means no
        leeway)
    :param trip_actions: action name to the 0-based position of its
        driver argument; other actions do not count as trips
    :param driver_gender: driver object name to gender
    :param min_trip_factor: fairness is only enforced once at least
        ``min_trip_factor`` trips per driver were taken
    """

    driver_type: TypeName
    margin: int
    trip_actions: Mapping[str, int] = field(default_factory=dict)
    driver_gender: Mapping[str, Gender] = field(default_factory=dict)
    min_trip_factor: int = DEFAULT_MIN_TRIP_FACTOR

    def __post_init__(self):
        check_natural(self.margin, "margin")
        check_natural(self.min_trip_factor, "min_trip_factor")
        for name, pos in self.trip_actions.items():
            check_natural(pos, "driver_param of {}".format(name))

    def check(self, d: Domain, p: Problem):
        """
        Make sure this configuration fits a domain and problem.

        :raises ConfigError: naming the first inconsistency
        """
        if not d.has_type(self.driver_type):
            raise ConfigError(self.driver_type, "driver_type is not a type of "
                              "domain {}".format(d.name))
        for name, pos in self.trip_actions.items():
            schema = d.schema(name)
            if schema is None:
                raise ConfigError(name, "trip action is not an action of the domain")
            if pos >= schema.arity:
                raise ConfigError(name, "driver_param {} but {} has only {} "
                                  "parameters".format(pos, name, schema.arity))
            if schema.params[pos].type != self.driver_type:
                raise ConfigError(name, "parameter {} is of type {}, not {}".format(
                    pos, schema.params[pos].type, self.driver_type))
        self.check_problem(p)

    def check_problem(self, p: Problem):
        drivers = {o.name for o in p.objects_of_type(self.driver_type)}
        missing = sorted(drivers - set(self.driver_gender))
        if missing:
            raise ConfigError(", ".join(missing), "drivers without a gender")
        extra = sorted(set(self.driver_gender) - drivers)
        if extra:
            raise ConfigError(", ".join(extra), "not objects of type {} in "
                              "problem {}".format(self.driver_type, p.name))


_CONFIG_KEYS = {"driver_type", "margin", "min_trip_factor", "trip_actions", "genders"}
_REQUIRED_KEYS = {"driver_type", "margin", "trip_actions", "genders"}


def load_fairness_config(source: Union[str, pathlib.Path, Mapping[str, Any]]):
    """
    Read a fairness configuration.

    The JSON document looks like::

        {"driver_type": "taxi", "margin": 10, "min_trip_factor": 10,
         "trip_actions": {"drive_passenger": {"driver_param": 0}},
         "genders": {"taxi1": "male", "taxi2": "female", "taxi3": "other"}}

    ``min_trip_factor`` is optional (default 10); unknown keys are errors.

    :param source: path to the JSON file, or the already decoded mapping
    :rtype: FairnessConfig
    :raises ConfigError: for any malformed content
    """
    if isinstance(source, Mapping):
        raw, where = source, "fairness configuration"
    else:
        where = str(source)
        try:
            raw = json.loads(read_source(source).decode("utf-8"))
        except OSError as e:
            raise ConfigError(where, e.strerror or str(e))
        except (UnicodeDecodeError, ValueError) as e:
            raise ConfigError(where, "not valid JSON: {}".format(e))
    if not isinstance(raw, Mapping):
        raise ConfigError(where, "top level must be a JSON object")
    unknown = sorted(set(raw) - _CONFIG_KEYS)
    if unknown:
        raise ConfigError(where, "unknown keys: {}".format(", ".join(unknown)))
    missing = sorted(_REQUIRED_KEYS - set(raw))
    if missing:
        raise ConfigError(where, "missing keys: {}".format(", ".join(missing)))
    if not isinstance(raw["driver_type"], str):
        raise ConfigError(where, "driver_type must be a string")
    if not isinstance(raw["trip_actions"], Mapping):
        raise ConfigError(where, "trip_actions must be an object")
    if not isinstance(raw["genders"], Mapping):
        raise ConfigError(where, "genders must be an object")
    trip_actions = dict()
    for name, spec in raw["trip_actions"].items():
        if not isinstance(spec, Mapping) or set(spec) != {"driver_param"}:
            raise ConfigError(name, 'trip action needs exactly {"driver_param": n}')
        trip_actions[name] = spec["driver_param"]
    genders = dict()
    for name, value in raw["genders"].items():
        try:
            genders[name] = Gender(value)
        except ValueError:
            raise ConfigError(name, "gender must be one of {}; given {!r}".format(
                ", ".join(g.value for g in Gender), value))
    try:
        return FairnessConfig(
            driver_type=raw["driver_type"],
            margin=raw["margin"],
            trip_actions=trip_actions,
            driver_gender=genders,
            min_trip_factor=raw.get("min_trip_factor", DEFAULT_MIN_TRIP_FACTOR),
        )
    except ValueError as e:
        raise ConfigError(where, str(e))


class Justification(enum.Enum):
    """Why an action was accepted"""

    AGNOSTIC = "agnostic"
    UNDER_THRESHOLD = "underThreshold"
    FAIR_FOR_ALL = "fairForAll"


@dataclass(frozen=True)
class FairnessCheck(object):
    gender: Gender
    fair: bool
    assignment_pct: int
    lower_bound_pct: int

    def __bool__(self):
        return self.fair


@dataclass(frozen=True)
class FairnessRefutation(object):
    """Evidence that an action leaves ``gender`` under its lower bound"""

    action: GroundAction
    trip_count: TripCount
    gender: Gender
    assignment_pct: int
    lower_bound_pct: int

    def to_dict(self) -> dict:
        return {
            "action": self.action.to_dict(),
            "trip_count": self.trip_count.as_dict(),
            "gender": self.gender.value,
            "assignment_pct": self.assignment_pct,
            "lower_bound_pct": self.lower_bound_pct,
        }


def total_trips_taken(tc: TripCount) -> int:
    return sum(tc[g] for g in Gender)


def gender_assignment_pct(g: Gender, tc: TripCount) -> int:
    """Percentage of all trips assigned to drivers of gender ``g``"""
    return div0(tc[g] * 100, total_trips_taken(tc))


def total_drivers(cfg: FairnessConfig, p: Problem) -> int:
    return len(p.objects_of_type(cfg.driver_type))


def gender_driver_count(g: Gender, cfg: FairnessConfig, p: Problem) -> int:
    return sum(
        1
        for o in p.objects_of_type(cfg.driver_type)
        if cfg.driver_gender.get(o.name) is g
    )


def gender_pct(g: Gender, cfg: FairnessConfig, p: Problem) -> int:
    """Percentage of drivers that are of gender ``g``"""
    return div0(gender_driver_count(g, cfg, p) * 100, total_drivers(cfg, p))


def lower_bound_pct(g: Gender, cfg: FairnessConfig, p: Problem) -> int:
    pct = gender_pct(g, cfg, p)
    return monus(pct, div0(pct, cfg.margin))


def is_fair(g: Gender, tc: TripCount, cfg: FairnessConfig, p: Problem) -> FairnessCheck:
    assigned = gender_assignment_pct(g, tc)
    bound = lower_bound_pct(g, cfg, p)
    return FairnessCheck(g, assigned >= bound, assigned, bound)


def under_minimum_trip_threshold(tc: TripCount, cfg: FairnessConfig, p: Problem) -> bool:
    return total_trips_taken(tc) < total_drivers(cfg, p) * cfg.min_trip_factor


def trip_agnostic(a: GroundAction, cfg: FairnessConfig) -> bool:
    return a.name not in cfg.trip_actions


def action_preserves_fairness(
    a: GroundAction, tc: TripCount, cfg: FairnessConfig, p: Problem
) -> Union[Justification, FairnessRefutation]:
    """
    Decide whether ``a`` may run given the trip count ``tc``.

    The justifications are tried in order: the action is not a trip, too
    few trips were taken to judge, every gender is fairly served.

    :return: the :class:`Justification` that accepts the action, or a
        :class:`FairnessRefutation` for the first gender (in
        :class:`Gender` order) below its lower bound
    """
    if trip_agnostic(a, cfg):
        return Justification.AGNOSTIC
    if under_minimum_trip_threshold(tc, cfg, p):
        return Justification.UNDER_THRESHOLD
    for g in Gender:
        check = is_fair(g, tc, cfg, p)
        if not check:
            return FairnessRefutation(
                a, tc, g, check.assignment_pct, check.lower_bound_pct
            )
    return Justification.FAIR_FOR_ALL


def update_trip_count(a: GroundAction, tc: TripCount, cfg: FairnessConfig) -> TripCount:
    """
    Count one trip for the gender of ``a``'s driver, if ``a`` is a trip.

    :raises ConfigError: if the driver argument is missing, not of the
        driver type or has no configured gender
    """
    if trip_agnostic(a, cfg):
        return tc
    pos = cfg.trip_actions[a.name]
    if pos >= len(a.args):
        raise ConfigError(str(a), "no argument at driver_param {}".format(pos))
    driver = a.args[pos]
    if driver.type != cfg.driver_type:
        raise ConfigError(str(a), "{} is a {}, not a {}".format(
            driver.name, driver.type, cfg.driver_type))
    gender = cfg.driver_gender.get(driver.name)
    if gender is None:
        raise ConfigError(driver.name, "driver without a gender")
    return tc.increment(gender)


def fairness_monitor(cfg: FairnessConfig, p: Problem) -> Monitor:
    """
    Make the fairness monitor for problem ``p``.

    The state is a :class:`TripCount` starting at zero. Each action first
    updates the count; the decision is made on the updated count and a
    refutation raises :class:`~plancheck.exceptions.GenderBiasError`.

    :raises ConfigError: if ``cfg`` does not cover the drivers of ``p``
    """
    cfg.check_problem(p)

    def transition(a: GroundAction, world: World, tc: TripCount) -> TripCount:
        updated = update_trip_count(a, tc, cfg)
        decision = action_preserves_fairness(a, updated, cfg, p)
        if isinstance(decision, FairnessRefutation):
            raise GenderBiasError(decision, world)
        log.debug("{} accepted ({}), trips {}".format(
            a, decision.value, updated.as_dict()))
        return updated

    return Monitor("fairness", TripCount(), transition)
