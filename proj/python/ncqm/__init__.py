"""Nonrelativistic quantum mechanics with noncommuting coordinate and momentum
operators of different particles: modified hydrogenlike spectra, the
self-consistent noncommutativity parameters, a general radial bound-state
solver, and the N-body kinetic-operator algebra."""

from ._ncqm import *  # noqa: F401,F403
from ._ncqm import __doc__ as _core_doc  # noqa: F401

__version__ = "0.1.0"
