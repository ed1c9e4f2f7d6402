"""Exact supertropical (extended tropical) matrix algebra."""

from ._trop import *  # noqa: F401,F403
from ._trop import __doc__  # noqa: F401
