"""Weak-measurement Stern-Gerlach beam simulation.

Thin Python face of the C++ core: spin-1 selections and weak values,
detector densities (first-order and exact), validity-limit calibration,
and experiment planning helpers.
"""

from ._weakspin import *  # noqa: F401,F403
