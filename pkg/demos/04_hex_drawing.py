"""Hexagonal-grid train-track drawing, end to end.

The orthogonal drawing transfers onto a hexagonal lattice whose cell sides
have slopes 1/2, -1/2, or vertical: grid rows become u-curves, grid columns
v-curves, and each node lands on the primary point of its curve crossing.
When two edges leave a node on the same cell side, the node hops to its
backup point or one edge switches wave lane.  Every edge is stored as just
two endpoints and a curve tag, so the layout takes linear space.
"""

import pathlib

from traintracks import (
    gen_dh_random,
    eliminate,
    build_delta_tree,
    root_at_leaf,
    layout_upward_ortho,
    ortho_to_hex,
    resolve_overlaps,
    check_hex_valid,
    count_bends,
    hex_area,
    descriptor_field_count,
    render_svg,
)

out_dir = pathlib.Path(__file__).parent / "out"
out_dir.mkdir(exist_ok=True)

g, _ = gen_dh_random(18, seed=42)
tree = build_delta_tree(g, eliminate(g))
ortho = layout_upward_ortho(root_at_leaf(tree))
hx = resolve_overlaps(ortho_to_hex(ortho))
assert check_hex_valid(hx) == []

total, worst = count_bends(hx)
print(f"hex area: {hex_area(hx)}")
print(f"bends: {total} total, {worst} max on one edge")
print(f"descriptor fields: {descriptor_field_count(hx)} (3 per edge)")

path = out_dir / "hex_18.svg"
path.write_text(render_svg(tree, hx))
print("wrote", path)
