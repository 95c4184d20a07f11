#! /usr/bin/env python3

"""Validate or execute a plan; see ``plancheck --help``"""

import sys

from plancheck.cli import main

if __name__ == "__main__":
    sys.exit(main())
