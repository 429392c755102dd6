"""Numerical engine for mean values of Maass-form special L-values."""

from ._core import *  # noqa: F401,F403
from ._core import __doc__  # noqa: F401
