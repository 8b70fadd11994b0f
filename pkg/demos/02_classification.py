"""Structure classification: convexity, simplicity, tree-likeness, leaf census.

    PYTHONPATH=src python3 demos/02_classification.py
"""

from polyomino_ideals import (
    classify_leaf,
    is_column_convex,
    is_row_convex,
    is_simple,
    is_tree_like,
    leaf_census,
    parse_grid,
    render_grid,
)

shapes = {
    "block": parse_grid("##\n##"),
    "frame": parse_grid("###\n#.#\n###"),
    "staple": parse_grid(".##\n##.\n.##"),
    "zigzag": parse_grid("..##\n.##.\n##.."),
}

for name, P in shapes.items():
    print(f"--- {name}")
    print(render_grid(P))
    simple = is_simple(P)
    tree = is_tree_like(P)
    print(f"row convex:    {is_row_convex(P)}")
    print(f"column convex: {is_column_convex(P)}")
    print(f"simple:        {simple.simple}" + (f"  (trapped cell {simple.hole})" if simple.hole else ""))
    print(f"tree-like:     {tree.tree_like}" + (f"  (stuck subpolyomino {sorted(tree.stuck)})" if tree.stuck else ""))
    census = leaf_census(P)
    print(f"degrees:       n1={census.n1} n2={census.n2} n3={census.n3} n4={census.n4}")
    if census.n1:
        for cell in census.good_leaves + census.bad_leaves:
            print(f"  leaf {cell}: {classify_leaf(P, cell)}")
    if census.bad_leaves:
        print(f"  blocking cells: {census.blocking_cells}")
        # a bad leaf's cell interval ends in a degree-3 cell, and for tree-like
        # shapes the count of good leaves is n3 + 2*n4 + 2 - (bad leaves)
    print()

staple = shapes["staple"]
census = leaf_census(staple)
print("Staple sanity: good =", len(census.good_leaves),
      "= n3 + 2*n4 + 2 - bad =", census.n3 + 2 * census.n4 + 2 - len(census.bad_leaves))
