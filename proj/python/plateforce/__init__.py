"""Casimir, thermal, gravity and Yukawa forces between parallel plates."""

from ._core import *  # noqa: F401,F403
from ._core import __doc__  # noqa: F401
