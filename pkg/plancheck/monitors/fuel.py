"""
Fuel monitor: every action uses one unit from a shared supply

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

from ..exceptions import OutOfFuelError
from ..model import GroundAction, World
from ..tools import check_natural
from .execution import Monitor


__all__ = ["FuelState", "fuel_monitor"]


@dataclass(frozen=True)
class FuelState(object):
    remaining: int

    def __post_init__(self):
        check_natural(self.remaining, "remaining fuel")


def _burn(action: GroundAction, world: World, state: FuelState) -> FuelState:
    if state.remaining == 0:
        raise OutOfFuelError(action, world)
    return FuelState(state.remaining - 1)


def fuel_monitor(initial: int) -> Monitor:
    """
    Make a monitor that refuses any action once ``initial`` actions ran.

    :param int initial: units of fuel available
    :raises ValueError: if ``initial`` is not a natural number
    """
    return Monitor("fuel", FuelState(check_natural(initial, "initial fuel")), _burn)
