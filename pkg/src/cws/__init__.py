"""Codeword stabilized quantum codes for asymmetric Pauli noise.

Exhaustive and random searches for CWS codes adapted to amplitude damping
and dephasing error sets, plus independent verification of every code the
search emits.
"""

__version__ = "0.1.0"
