#!/usr/bin/env python3
"""Switching: relabel edges through vertex values without moving circles.

A switching adds a per-vertex value to every incident edge.  Circles see
each vertex twice, so their labels never move; open paths do change.
Normalizing a vertex switches its whole star to the identity, after
which every remaining edge shows the label of the triangle it used to
span with that vertex — the bridge between edge labels and triangle
labels.
"""

from doublesign import (
    Circle,
    F22,
    Path,
    apply_switching,
    named_instance,
    normalize_at,
    triangle_census,
    triangle_sign,
    walk_sign,
)

g = named_instance("share_vertex_k4")
zeta = {1: F22.A, 2: F22.B, 3: F22.C, 4: F22.E}
switched = apply_switching(g, zeta)

tour = Circle((1, 3, 2, 4))
print("circle label before:", walk_sign(g, tour).render())
print("circle label after: ", walk_sign(switched, tour).render())
print("path 1-2 before/after:",
      walk_sign(g, Path((1, 2))).render(),
      walk_sign(switched, Path((1, 2))).render(), "(paths are not invariant)")
print("census before:", {s.render(): c for s, c in triangle_census(g).counts.items()})
print("census after: ", {s.render(): c for s, c in triangle_census(switched).counts.items()})

print()
gn, used = normalize_at(g, 4)
print("normalize at 4 with", {v: s.render() for v, s in used.items()})
for u in (1, 2, 3):
    print(f"  edge {u}-4 is now {gn.sign(u, 4).render()}")
for u, v in ((1, 2), (1, 3), (2, 3)):
    print(
        f"  edge {u}-{v}: {gn.sign(u, v).render()} "
        f"(= old triangle {u}-{v}-4 label {triangle_sign(g, (u, v, 4)).render()})"
    )
