"""Anisotropic dilation contents: exact 2D polygon pipeline and grid estimators."""

from amink._core import *  # noqa: F401,F403
from amink._core import __doc__  # noqa: F401
