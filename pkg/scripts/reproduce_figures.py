#!/usr/bin/env python3
"""Reproduce the worked examples: the running figures and the 20-element
Hasse diagram (tamari hasse --n 3 gives the same diagram via the CLI)."""

import json

from tamari import bracket_b as bb
from tamari import noncross as nc
from tamari import tamari_a as ta
from tamari.cli import main as cli

FIG2_VECTOR = (0, bb.INF, 0, 0, 2, 0)
FIG1_VECTOR = (0, 0, 0, 2, 4)


def main() -> None:
    print("== type A: 7-gon triangulation with bracket vector (0,0,0,2,4) ==")
    t1 = ta.decode_a(FIG1_VECTOR, 4)
    print("chords:", t1.sorted_chords())
    print("red chords:", sorted(ta.red_set_a(t1)))
    print("noncrossing partition:", ta.partition_a_to_json(ta.psi_a(t1)))

    print()
    print("== type B: 14-gon triangulation with bracket vector (0,inf,0,0,2,0) ==")
    t2 = bb.decode(FIG2_VECTOR, 6)
    print("chords:", json.dumps(t2.to_json()))
    print("bracket vector:", bb.vector_to_json(bb.encode(t2)))
    print("partition:", json.dumps(nc.psi(t2).to_json()))
    print("round trip:", bb.encode(nc.psi_inverse(nc.psi(t2))) == FIG2_VECTOR)

    print()
    print("== Hasse diagram of the 20-element type-B lattice, n = 3 (DOT) ==")
    cli(["hasse", "--type", "b", "--n", "3", "--format", "dot"])


if __name__ == "__main__":
    main()
