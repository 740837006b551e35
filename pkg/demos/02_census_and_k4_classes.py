#!/usr/bin/env python3
"""Triangle censuses, diversity, and the two kinds of special K4.

Diversity — how many distinct labels triangles realize — is the quantity
that controls everything downstream.  K4 subgraphs matter because their
four triangle labels always sum to the identity: they are either all
distinct or pair up as x, x, y, y.
"""

from doublesign import classify_k4, gen_random, named_instance, triangle_census

for name in ("share_vertex_k4", "triangle_k4", "identity(4)"):
    g = named_instance(name)
    census = triangle_census(g)
    k = classify_k4(g, (1, 2, 3, 4))
    print(f"{name}:")
    print("  triangle counts:", {s.render(): c for s, c in census.counts.items()})
    print("  diversity:", census.diversity)
    if k.pair:
        print(f"  K4 kind: {k.kind} pair: ({k.pair[0].render()}, {k.pair[1].render()})")
    else:
        print(f"  K4 kind: {k.kind}")
    if k.common_triple:
        t = k.common_triple
        print(f"  common-label triple: {t.sign.render()} as a {t.shape} on {sorted(t.edges)}")
    print()

# Random instances at n = 7 are almost always diversity 4 and carry many
# all-distinct K4s.
g = gen_random(7, seed=1)
census = triangle_census(g)
print("random n=7 instance: diversity", census.diversity)
all_distinct = [
    quad
    for quad in __import__("itertools").combinations(range(1, 8), 4)
    if classify_k4(g, quad).is_all_distinct
]
print(f"all-distinct K4s: {len(all_distinct)} of 35, first: {all_distinct[0]}")
