"""
Command line interface: validate, execute and print plans

Exit codes: 0 success, 1 the plan does not validate, 2 a monitor refused
an action, 3 unreadable input or bad usage. Log messages always go to
stderr.

In text mode results go to stdout and diagnostics to stderr. In JSON mode
a run that gets as far as validating writes one document with the keys
``status``, ``steps``, ``final_world`` and ``error`` to stdout, whatever
its outcome. Runs that stop with exit code 3 never reach a status, so they
write only ``{"error": ...}``, and they write it to stderr.

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

import argparse
from dataclasses import dataclass
import json
import logging
import os
import sys
from typing import List, Optional, Sequence, Tuple

from . import __version__
from .exceptions import (
    GroundingError,
    InputError,
    ParseError,
    PlanCheckError,
    PlanValidationError,
)
from .model import Domain, Plan, Problem
from .monitors import (
    Monitor,
    canonical_handler,
    compose_monitors,
    execute_monitored,
    execute_traced,
    fairness_monitor,
    fuel_monitor,
    load_fairness_config,
)
from .pddl import parse_domain, parse_plan, parse_problem, print_domain, print_plan, print_problem
from .report import FORMATS, derivation_text, document, error_text, execution_text, to_json
from .semantics import world_set_eq
from .tools import read_source
from .validator import check_plan, replay


__all__ = [
    "EXIT_OK",
    "EXIT_INVALID",
    "EXIT_MONITOR",
    "EXIT_USAGE",
    "FORMAT_ENV_VAR",
    "MonitorSpec",
    "RunConfig",
    "cmd_validate",
    "cmd_execute",
    "cmd_print",
    "build_parser",
    "main",
]


log = logging.getLogger(__name__)


EXIT_OK = 0
EXIT_INVALID = 1
EXIT_MONITOR = 2
EXIT_USAGE = 3

FORMAT_ENV_VAR = "PLANCHECK_FORMAT"


@dataclass(frozen=True)
class MonitorSpec(object):
    """A ``--monitor`` argument: ``fuel=<n>`` or ``fairness=<path>``"""

    kind: str
    value: str

    KINDS = ("fuel", "fairness")

    @classmethod
    def parse(cls, text: str) -> "MonitorSpec":
        """
        :raises InputError: for unknown kinds, empty values or fuel that is
            not a natural number
        """
        kind, sep, value = text.partition("=")
        if not sep or kind not in cls.KINDS or not value:
            raise InputError(text, "monitor must be fuel=<n> or fairness=<path>")
        if kind == "fuel" and not (value.isascii() and value.isdigit()):
            raise InputError(text, "fuel must be a nonnegative integer")
        return cls(kind, value)

    def __str__(self):
        return "{}={}".format(self.kind, self.value)


@dataclass(frozen=True)
class RunConfig(object):
    """
    Everything one run needs.

    :param domain_path: domain file
    :param problem_path: problem file (optional only for ``print``)
    :param plan_path: plan file (optional only for ``print``)
    :param monitors: monitors to execute under, in the order given
    :param format: 'text' or 'json'
    :param trace: include every intermediate world in the report
    :param skip_validation: execute without validating first
    """

    domain_path: str
    problem_path: Optional[str] = None
    plan_path: Optional[str] = None
    monitors: Tuple[MonitorSpec, ...] = ()
    format: str = "text"
    trace: bool = False
    skip_validation: bool = False

    def __post_init__(self):
        for name in ("domain_path", "problem_path", "plan_path"):
            value = getattr(self, name)
            if value is not None and not str(value):
                raise InputError(value, "{} must not be empty".format(name))
        if self.format not in FORMATS:
            raise InputError(self.format, "format must be one of {}".format(
                ", ".join(FORMATS)))
        if self.plan_path is not None and self.problem_path is None:
            raise InputError(self.plan_path, "a plan needs a problem file")

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "RunConfig":
        return cls(
            domain_path=args.domain,
            problem_path=args.problem,
            plan_path=getattr(args, "plan", None),
            monitors=tuple(MonitorSpec.parse(m) for m in getattr(args, "monitor", None) or ()),
            format=args.format,
            trace=getattr(args, "trace", False),
            skip_validation=getattr(args, "skip_validation", False),
        )

    def require_all_files(self):
        if self.problem_path is None or self.plan_path is None:
            raise InputError(self.domain_path, "--domain, --problem and --plan "
                             "are all required")


def _read(path: str) -> bytes:
    try:
        return read_source(path)
    except OSError as e:
        raise InputError(path, e.strerror or str(e))


def _load(cfg: RunConfig) -> Tuple[Domain, Optional[Problem], Optional[Plan]]:
    d = parse_domain(_read(cfg.domain_path), source=str(cfg.domain_path))
    log.info("Read domain {} from {}".format(d.name, cfg.domain_path))
    p = pl = None
    if cfg.problem_path is not None:
        p = parse_problem(_read(cfg.problem_path), d, source=str(cfg.problem_path))
        log.info("Read problem {} from {}".format(p.name, cfg.problem_path))
    if cfg.plan_path is not None:
        pl = parse_plan(_read(cfg.plan_path), d, p, source=str(cfg.plan_path))
        log.info("Read plan of {} actions from {}".format(len(pl), cfg.plan_path))
    return d, p, pl


def _build_monitors(cfg: RunConfig, d: Domain, p: Problem) -> List[Monitor]:
    monitors = []
    for spec in cfg.monitors:
        if spec.kind == "fuel":
            monitors.append(fuel_monitor(int(spec.value)))
        else:
            fairness = load_fairness_config(spec.value)
            fairness.check(d, p)
            monitors.append(fairness_monitor(fairness, p))
    return monitors


def _usage_failure(cfg_format: str, error: PlanCheckError) -> int:
    if cfg_format == "json":
        sys.stderr.write(json.dumps({"error": error.to_dict()}) + "\n")
    else:
        sys.stderr.write(error_text(error))
    return EXIT_USAGE


def _emit(cfg: RunConfig, status: str, code: int, text: str = "",
          steps=(), final_world=None, error: Optional[PlanCheckError] = None) -> int:
    if cfg.format == "json":
        sys.stdout.write(to_json(document(status, steps, final_world, error)) + "\n")
    else:
        if error is not None:
            sys.stderr.write(error_text(error))
        sys.stdout.write(text)
    return code


def cmd_validate(cfg: RunConfig) -> int:
    """
    Parse the three files and validate the plan.

    :return: :data:`EXIT_OK` with a derivation report,
        :data:`EXIT_INVALID` with the validation error or
        :data:`EXIT_USAGE` for unreadable or malformed input
    """
    try:
        cfg.require_all_files()
        d, p, pl = _load(cfg)
    except (InputError, ParseError) as e:
        return _usage_failure(cfg.format, e)
    try:
        deriv = check_plan(d, p, pl)
    except PlanValidationError as e:
        return _emit(cfg, "invalid", EXIT_INVALID, error=e)
    return _emit(
        cfg,
        "valid",
        EXIT_OK,
        text=derivation_text(deriv, cfg.trace),
        steps=deriv.to_dict(cfg.trace)["steps"],
        final_world=deriv.final_world,
    )


def cmd_execute(cfg: RunConfig) -> int:
    """
    Validate the plan, then execute it under the requested monitors.

    With ``skip_validation`` the plan is executed as given; actions that do
    not ground then end the run as invalid.

    :return: :data:`EXIT_OK` with the final world, :data:`EXIT_INVALID`,
        :data:`EXIT_MONITOR` with the monitor's evidence, or
        :data:`EXIT_USAGE`
    """
    try:
        cfg.require_all_files()
        d, p, pl = _load(cfg)
        monitors = _build_monitors(cfg, d, p)
    except (InputError, ParseError) as e:
        return _usage_failure(cfg.format, e)
    deriv = None
    if cfg.skip_validation:
        log.warning("Executing a plan that was not validated")
    else:
        try:
            deriv = check_plan(d, p, pl)
        except PlanValidationError as e:
            return _emit(cfg, "invalid", EXIT_INVALID, error=e)
    handler = canonical_handler(d, p)
    monitor = compose_monitors(monitors)
    try:
        outcome = execute_monitored(pl, handler, monitor, p.initial_world)
    except GroundingError as e:
        return _emit(cfg, "invalid", EXIT_INVALID, error=e)
    if deriv is not None:
        steps = deriv.to_dict(cfg.trace)["steps"][: outcome.steps]
    else:
        steps = [{"index": i, "action": a.to_dict()} for i, a in enumerate(pl[: outcome.steps])]
    if not outcome.ok:
        return _emit(cfg, "monitor-error", EXIT_MONITOR, steps=steps, error=outcome.error)
    if deriv is not None and not world_set_eq(outcome.final_world, replay(deriv)):
        raise RuntimeError("execution and derivation reach different worlds")
    log.info("Executed {} actions under monitor {}".format(outcome.steps, monitor.name))
    worlds = None
    if cfg.trace:
        worlds = deriv.worlds() if deriv is not None else execute_traced(
            pl, handler, p.initial_world)
    return _emit(
        cfg,
        "executed",
        EXIT_OK,
        text=execution_text(outcome, worlds),
        steps=steps,
        final_world=outcome.final_world,
    )


def cmd_print(cfg: RunConfig) -> int:
    """Print the given files in canonical form"""
    try:
        d, p, pl = _load(cfg)
    except (InputError, ParseError) as e:
        return _usage_failure(cfg.format, e)
    parts = [print_domain(d)]
    if p is not None:
        parts.append(print_problem(p))
    if pl is not None:
        parts.append(print_plan(pl))
    if cfg.format == "json":
        sys.stdout.write(json.dumps({"texts": parts}, indent=2) + "\n")
    else:
        sys.stdout.write("\n".join(parts))
    return EXIT_OK


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InputError(self.prog, message)


def build_parser() -> argparse.ArgumentParser:
    default_format = os.environ.get(FORMAT_ENV_VAR, "text")
    parser = _Parser(
        prog="plancheck",
        description="Validate STRIPS plans against PDDL domains and problems "
        "and execute them under run-time monitors.",
    )
    parser.add_argument(
        "--version", action="version", version="%(prog)s v{}".format(__version__)
    )
    subparsers = parser.add_subparsers(dest="command", parser_class=_Parser)
    subparsers.required = True

    common = _Parser(add_help=False)
    common.add_argument("--domain", required=True, help="PDDL domain file")
    common.add_argument("--format", default=default_format,
                        help="text or json (default from ${})".format(FORMAT_ENV_VAR))
    common.add_argument("-v", "--verbose", action="count", default=0,
                        help="log more to stderr (-vv for debug)")

    run = _Parser(add_help=False, parents=[common])
    run.add_argument("--problem", required=True, help="PDDL problem file")
    run.add_argument("--plan", required=True, help="plan file, one action per line")
    run.add_argument("--trace", action="store_true",
                     help="report every intermediate world")

    validate = subparsers.add_parser("validate", parents=[run],
                                     help="check that a plan reaches the goal")
    validate.set_defaults(func=cmd_validate)

    execute = subparsers.add_parser("execute", parents=[run],
                                    help="validate, then execute under monitors")
    execute.add_argument("--monitor", action="append", default=[],
                         help="fuel=<n> or fairness=<config.json>; repeatable")
    execute.add_argument("--skip-validation", action="store_true",
                         help="execute without validating first")
    execute.set_defaults(func=cmd_execute)

    show = subparsers.add_parser("print", parents=[common],
                                 help="print parsed files in canonical form")
    show.add_argument("--problem", help="PDDL problem file")
    show.add_argument("--plan", help="plan file (needs --problem)")
    show.set_defaults(func=cmd_print)
    return parser


def _set_verbosity(count: int):
    level = {0: logging.WARNING, 1: logging.INFO}.get(count, logging.DEBUG)
    logging.getLogger("plancheck").setLevel(level)


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Run the command line interface.

    :param argv: arguments without the program name; ``sys.argv[1:]`` if
        None
    :return: the exit code
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        cfg = RunConfig.from_args(args)
    except InputError as e:
        fmt = os.environ.get(FORMAT_ENV_VAR, "text")
        return _usage_failure(fmt if fmt in FORMATS else "text", e)
    _set_verbosity(args.verbose)
    return args.func(cfg)


if __name__ == "__main__":
    sys.exit(main())
