"""Tamari lattices on centrally symmetric polygon triangulations.

Bracket vectors are the canonical coordinates: n-tuples over
[0, n-1] + {inf} under the componentwise order.  See the README for the
module map and the CLI (`python -m tamari`).
"""

from math import inf as INF

from .bracket_b import (
    bottom_vector,
    covers,
    decode,
    down,
    encode,
    enumerate_vectors,
    is_valid,
    join,
    leq,
    meet,
    top_vector,
    up,
)
from .noncross import NoncrossingPartitionB, enumerate_ncb, in_bds, psi, psi_inverse
from .oracle import FinitePoset
from .tri_b import TriangulationB, covers_by_flip, flip

__all__ = [
    "INF",
    "FinitePoset",
    "NoncrossingPartitionB",
    "TriangulationB",
    "bottom_vector",
    "covers",
    "covers_by_flip",
    "decode",
    "down",
    "encode",
    "enumerate_ncb",
    "enumerate_vectors",
    "flip",
    "in_bds",
    "is_valid",
    "join",
    "leq",
    "meet",
    "psi",
    "psi_inverse",
    "top_vector",
    "up",
]
