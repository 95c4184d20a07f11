########################################################################
#                                                                      #
# This package was written by the PlanCheck developers in 2024.        #
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

import logging

from . import exceptions
from .model import (
    ObjectRef,
    Polarity,
    GroundAtom,
    Literal,
    State,
    World,
    Domain,
    Problem,
    Plan,
    GroundAction,
)
from .pddl import parse_domain, parse_problem, parse_plan
from .semantics import satisfies, update_world, world_set_eq
from .validator import check_plan, replay, Derivation
from . import monitors


__version__ = "0.1.0"

__author__ = ["PlanCheck developers"]


log = logging.getLogger(__name__)
if not log.hasHandlers():
    log.setLevel(logging.WARNING)
    handler = logging.StreamHandler()
    formatter = logging.Formatter(
        "%(asctime)s - %(name)s - " "%(levelname)s - %(message)s"
    )
    handler.setFormatter(formatter)
    log.addHandler(handler)
