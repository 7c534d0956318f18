"""Exact copolynomial calculus over Z, Q and Z/pZ."""

from copoly._core import *  # noqa: F401,F403
from copoly._core import __doc__  # noqa: F401
