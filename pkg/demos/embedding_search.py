"""Donaldson obstruction by complete search: witnesses and certificates.

The family P([1^(m+1)], -3, ..., -3) with m legs has vanishing signature,
so the only thing separating the slice candidate from the rest is whether
its negative definite plumbing lattice embeds into the standard diagonal
lattice of equal rank.  Exactly one member embeds: m = 3, the knot 10_75.
A NO answer here is a proof, not a timeout: the search space is exhausted
(the node count is the certificate size).
"""

from pretzel import (DonaldsonStatus, find_embedding,
                     negative_definite_graph, signature, verify_embedding)


def type1_family():
    print("Type 1 slice-candidate family [1^(m+1)], (-3)^m")
    print("m  rank  sigma  result          nodes")
    for m in range(1, 7):
        params = (1,) * (m + 1) + (-3,) * m
        g = negative_definite_graph(params)
        res = find_embedding(g)
        print("%d  %4d  %5d  %-14s  %d"
              % (m, g.rank, signature(params), res.status.value, res.nodes))
        if res.status is DonaldsonStatus.EMBEDDABLE:
            assert verify_embedding(g, res.witness)
            for row in res.witness:
                print("      ", " ".join("%2d" % x for x in row))


def ribbon_witness():
    print()
    print("A ribbon knot's graph always embeds; P(5,-5,7,-7,4), rank 16:")
    g = negative_definite_graph((5, -5, 7, -7, 4))
    res = find_embedding(g)
    print("result:", res.status.value, "after", res.nodes, "nodes")


if __name__ == "__main__":
    type1_family()
    ribbon_witness()
