"""Separability coherences and genuine three-party coherence of three-qubit pure states."""

from ._core import *  # noqa: F401,F403
from ._core import TricohError, __doc__  # noqa: F401

__version__ = "0.1.0"
