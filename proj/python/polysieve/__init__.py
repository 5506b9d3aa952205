"""Randomized algebraic sieves for parameterized detection problems.

Decision procedures for k-path, q-dimensional p-matching, p-packing of
q-sets, and d-edge-coloring of d-regular graphs, all driven by polynomial
identity testing over GF(2^b), plus the brute-force reference deciders used
to validate them at desk scale.
"""

from ._polysieve import *  # noqa: F401,F403
from ._polysieve import __version__  # noqa: F401
