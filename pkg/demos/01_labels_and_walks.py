#!/usr/bin/env python3
"""Edge labels, group arithmetic, and walk labels.

Edges carry one of four labels: e (identity), a, b, c.  Addition is XOR
on a two-bit encoding, so every element cancels itself and any two
distinct nonzero labels sum to the third.  The label of a path or circle
is just the sum of its edge labels.
"""

from doublesign import ELEMENTS, F22, Circle, Path, add, fourth_element, named_instance, walk_sign

print("addition table:")
print("    " + "  ".join(y.render() for y in ELEMENTS))
for x in ELEMENTS:
    print(f"  {x.render()} " + "  ".join(add(x, y).render() for y in ELEMENTS))

print()
print("three distinct labels force the fourth:")
print("  e + a + b =", fourth_element(F22.E, F22.A, F22.B).render())

# A K4 whose four triangles realize all four labels.  Its three a-labeled
# edges meet at vertex 4.
g = named_instance("share_vertex_k4")
print()
print("edges of share_vertex_k4:")
for u, v, s in g.edges():
    print(f"  {u}-{v}: {s.render()}")

tour = Circle((1, 2, 3, 4))
print()
print("label of the tour 1-2-3-4:", walk_sign(g, tour).render())
print("label of the path 1-4:   ", walk_sign(g, Path((1, 4))).render())
print("labels are rotation/reflection independent:",
      walk_sign(g, Circle((3, 4, 1, 2))).render())
