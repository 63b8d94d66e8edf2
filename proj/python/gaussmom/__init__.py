"""Exact Gaussian moment integrals via series-coefficient arithmetic, plus
half-integer gamma/factorial values, Tsallis number densities and
fractional-derivative closed forms.

Everything is implemented in the C++ core; this package re-exports it.
Exact values surface as ``fractions.Fraction`` (optionally times a power of
sqrt(pi), see ``HalfIntValue``).
"""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
