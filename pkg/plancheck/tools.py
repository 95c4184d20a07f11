"""
Common tools for general use: truncated natural-number arithmetic and
file reading

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

import errno
import os
import pathlib
from typing import Union


__all__ = ["div0", "monus", "check_natural", "read_source"]


GenPath = Union[pathlib.Path, str]


def check_natural(n, name: str = "value") -> int:
    """
    Make sure ``n`` is a natural number (bools are not accepted)

    :raises ValueError: if ``n`` is negative or not an int
    """
    if isinstance(n, bool) or not isinstance(n, int) or n < 0:
        raise ValueError("{} must be a natural number; given {!r}".format(name, n))
    return n


def div0(n: int, m: int) -> int:
    """
    Floor division of naturals that gives 0 for a zero denominator

    :param int n: numerator
    :param int m: denominator
    :rtype: int
    """
    check_natural(n, "n")
    check_natural(m, "m")
    return n // m if m else 0


def monus(a: int, b: int) -> int:
    """Truncated subtraction: ``max(a - b, 0)``"""
    check_natural(a, "a")
    check_natural(b, "b")
    return a - b if a > b else 0


def read_source(path: GenPath) -> bytes:
    """
    Read a whole input file.

    Bytes are returned so decoding errors can be reported with a position
    by the parser.

    :param path: file to read
    :raises OSError: with errno ENOENT or EISDIR for missing files or
        directories
    """
    path = pathlib.Path(os.path.expanduser(str(path)))
    if path.is_dir():
        raise OSError(errno.EISDIR, "Is a directory", str(path))
    if not path.is_file():
        raise OSError(errno.ENOENT, "No such file", str(path))
    return path.read_bytes()
