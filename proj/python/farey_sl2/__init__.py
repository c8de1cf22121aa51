"""Exact Farey paths, SL2-tilings and friezes."""

from ._farey_sl2 import *  # noqa: F401,F403
from ._farey_sl2 import __doc__  # noqa: F401
