#!/usr/bin/env python3
"""Print the headline values and identities on small named instances.

Runs every pipeline once on the worked examples (C_6, stars, the digon,
the triangle, the 3-bond, the two-chord diagram) and prints both sides of
each identity so the numbers can be eyeballed.
"""

from graphpoly import (ChordDiagram, SPSequence, build_sp, c_polynomial,
                       circle_graph, circuit_partition_polynomial, cycle_graph,
                       diagonal, gamma_invariant, medial_digraph, qn_bdh_fast,
                       qn_recursive, q_state_sum, sp_diagonal_tutte, star_graph,
                       tutte_polynomial, verify_c_identity,
                       verify_circuit_partition_identity,
                       verify_medial_tutte_identity)
from graphpoly.graphs import complete_graph, path_graph


def main() -> None:
    c6 = cycle_graph(6)
    print("q_N(C_6)        =", qn_recursive(c6))
    print("gamma(C_6)      =", gamma_invariant(c6))
    for m in (1, 2, 3, 4, 5, 6):
        print(f"gamma(K_1,{m})    =", gamma_invariant(star_graph(m)))
    print("q(K_2; x, y)    =", q_state_sum(complete_graph(2)))
    print("q_N(P_3)        =", qn_recursive(path_graph(3)))
    print("fast q_N(P_3)   =", qn_bdh_fast(path_graph(3)))
    print()

    digon = SPSequence((("digon",),))
    triangle = SPSequence((("digon",), ("series", "e2")))
    bond3 = SPSequence((("digon",), ("parallel", "e1")))
    for name, seq in (("digon", digon), ("triangle", triangle), ("3-bond", bond3)):
        g = build_sp(seq)
        print(f"t({name}; x, y)  =", tutte_polynomial(g),
              "   diagonal:", diagonal(tutte_polynomial(g)),
              "   fast diagonal:", sp_diagonal_tutte(seq))
    print()

    med = medial_digraph(build_sp(digon))
    print("medial(digon) circuit partition polynomial:",
          circuit_partition_polynomial(med))
    print("circuit/interlace identity:", verify_circuit_partition_identity(med))
    print("medial/Tutte identity (digon):", verify_medial_tutte_identity(digon))
    print("medial/Tutte identity (triangle):", verify_medial_tutte_identity(triangle))
    print()

    d = ChordDiagram(["1", "2", "1", "2"])
    print("C(1 2 1 2; Y, Z) =", c_polynomial(d))
    print("circle graph     =", circle_graph(d).edges())
    print("point check      :", verify_c_identity(d, [(3, 4), (2, 4), (5, 16)]))


if __name__ == "__main__":
    main()
