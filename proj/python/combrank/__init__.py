"""Rank/unrank toolkit for combinatorial families.

Serial numbers are 1-based positions in each family's fixed enumeration
order; every count and serial is an exact Python int of arbitrary size.
"""

from ._combrank import *  # noqa: F401,F403
from ._combrank import __version__  # noqa: F401
