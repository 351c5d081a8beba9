"""From elimination sequence to junction tree and back.

The junction tree is a free tree whose leaves are the graph's vertices and
whose internal degree-3 nodes are track junctions: a delta junction joins
all three port pairs, a lambda junction joins only head-tail pairs.  Two
vertices are adjacent exactly when the tree path between their leaves
threads every junction through a permitted pair, so the tree is a lossless
encoding of the graph.
"""

from traintracks import (
    gen_dh_random,
    graph_equals,
    eliminate,
    apply_sequence_forward,
    build_delta_tree,
    semantics,
    tree_to_sequence,
    tree_to_text,
)

g, _ = gen_dh_random(10, seed=4)
print("graph:", g, "edges:", g.edges())

tree = build_delta_tree(g, eliminate(g))
print("\njunction tree:")
print(tree_to_text(tree))

# Decoding the tree recovers the exact labeled graph.
assert graph_equals(semantics(tree), g)
print("semantics(tree) == graph:", True)

# The tree can also be shrunk back into an elimination sequence whose
# replay rebuilds the same graph, closing the loop in both directions.
seq = tree_to_sequence(tree)
assert graph_equals(apply_sequence_forward(seq), g)
print("tree -> sequence -> graph round trip:", True)
print(f"{len(tree.leaves)} leaves, {len(tree.junctions)} junctions")
