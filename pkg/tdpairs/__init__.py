"""
tdpairs package

Exact rational toolkit for constructing, verifying and analysing
tridiagonal pairs of Krawtchouk type.
"""
from __future__ import annotations

from .constructions import leonard_krawtchouk, onsager_tensor, parse_spec
from .pairs import TDPair, verify_td_pair

__all__ = ["TDPair", "verify_td_pair", "leonard_krawtchouk", "onsager_tensor", "parse_spec"]
