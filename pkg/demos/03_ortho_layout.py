"""Upward orthogonal grid layout of the junction tree.

Rooting the free tree at a leaf makes every junction a binary node.  The
layout composes child boxes either side-by-side or stacked, always placing
the heavier subtree on the long axis, which keeps the drawing inside
O(n log n) grid area.  The result is rendered to SVG with smooth junction
merges.
"""

import math
import pathlib

from traintracks import (
    gen_dh_random,
    eliminate,
    build_delta_tree,
    root_at_leaf,
    layout_upward_ortho,
    check_ortho_valid,
    ortho_area,
    render_svg,
)

out_dir = pathlib.Path(__file__).parent / "out"
out_dir.mkdir(exist_ok=True)

for n in (32, 128, 512):
    g, _ = gen_dh_random(n, seed=7)
    tree = build_delta_tree(g, eliminate(g))
    layout = layout_upward_ortho(root_at_leaf(tree))
    assert check_ortho_valid(layout) == []
    area = ortho_area(layout)
    print(f"n={n:4d}  area={area:6d}  area/(n log2 n)={area / (n * math.log2(n)):.2f}")

g, _ = gen_dh_random(24, seed=7)
tree = build_delta_tree(g, eliminate(g))
layout = layout_upward_ortho(root_at_leaf(tree))
path = out_dir / "ortho_24.svg"
path.write_text(render_svg(tree, layout))
print("wrote", path)
