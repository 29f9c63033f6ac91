"""Concatenations of actively and passively correcting quantum codes.

Construction of QD/DQ two-level concatenations (active code outside a
collective-noise subspace, or the reverse), their degenerate stabilizer and
error structure, closed-form failure probabilities under hybrid
independent-correlated noise, and a Monte Carlo cross-check.
"""

from .analytic import Alphabet, NoiseModel
from .concat import ConcatCode, Order, concatenated
from .pauli import PauliString, parse
from .stabilizer import StabilizerCode, builtin

__all__ = [
    "Alphabet",
    "ConcatCode",
    "NoiseModel",
    "Order",
    "PauliString",
    "StabilizerCode",
    "builtin",
    "concatenated",
    "parse",
]

__version__ = "0.1.0"
