"""Quantization toolkit bindings.

Thin re-export of the compiled core. See the project README for the CLI and
file formats; everything here mirrors the C++ surface one to one.
"""

from ._hitchinlab import *  # noqa: F401,F403
from ._hitchinlab import __version__  # noqa: F401
