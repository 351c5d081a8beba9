"""Radial three-slope snowflake drawing of a 96-vertex clique.

A balanced all-delta junction tree with 96 leaves encodes K96.  The radial
layout sends each junction's outgoing edges at 120-degree angles from the
incoming one, shrinking lengths geometrically with depth.  Below the
closed-form ratio bound (about 0.524) sibling subtrees can never collide,
so the drawing is crossing-free; 4560 vertex pairs all ride smooth curves
through a 94-junction track system.
"""

import pathlib

from traintracks import (
    balanced_clique_tree,
    semantics,
    layout_radial_trident,
    max_shrink_ratio,
    radial_crossings,
    RenderOptions,
    render_svg,
)

out_dir = pathlib.Path(__file__).parent / "out"
out_dir.mkdir(exist_ok=True)

tree = balanced_clique_tree(5)  # 3 * 2**5 = 96 leaves
clique = semantics(tree)
print("encoded graph:", clique, f"({clique.m} edges)")
print(f"shrink ratio bound: {max_shrink_ratio():.4f}, using 0.45")

layout = layout_radial_trident(tree, ratio=0.45)
assert radial_crossings(layout) == 0
print("crossings:", 0)

opts = RenderOptions(cell_size=2000.0, junction_radius=6.0, show_labels=False)
path = out_dir / "k96_snowflake.svg"
path.write_text(render_svg(tree, layout, opts))
print("wrote", path)
