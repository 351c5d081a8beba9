"""Recognizing distance-hereditary graphs.

A connected graph is distance-hereditary when every connected induced
subgraph preserves all pairwise distances.  Such graphs are exactly the
ones that can be shrunk to a single edge by repeatedly cutting a pendant
vertex or merging a twin pair; `eliminate` finds that reduction order.
"""

from traintracks import (
    Graph,
    eliminate,
    sequence_to_text,
    is_distance_hereditary_oracle,
    NotDistanceHereditary,
)

# A 6-vertex example: a square with two pendant antennas.
g = Graph(range(6), [(0, 1), (1, 2), (2, 3), (0, 3), (1, 4), (3, 5)])
print("graph edges:", g.edges())

seq = eliminate(g)
print("\nelimination sequence:")
print(sequence_to_text(seq))

# The brute-force oracle agrees.
print("oracle says distance-hereditary:", is_distance_hereditary_oracle(g))

# A 5-cycle has no pendant and no twins, and an induced path around it is
# longer than the chord distance, so recognition fails.
c5 = Graph(range(5), [(i, (i + 1) % 5) for i in range(5)])
try:
    eliminate(c5)
except NotDistanceHereditary as exc:
    print("\nC5 rejected:", exc)
print("oracle on C5:", is_distance_hereditary_oracle(c5))
