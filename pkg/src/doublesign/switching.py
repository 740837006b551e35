"""Switching functions and vertex normalization.

A switching assigns a group value to every vertex and relabels each edge
by adding the values at its endpoints.  Closed walks keep their label
(each vertex contributes twice); open paths do not.  Normalizing a vertex
is the particular switching that makes its whole star carry the identity,
after which every remaining edge carries the label of the triangle it
used to span with the normalized vertex.
"""

from __future__ import annotations

from typing import Mapping

from .graph import SignedCompleteGraph, all_edges, edge_index
from .group import F22

SwitchingFunction = Mapping[int, F22]


def apply(g: SignedCompleteGraph, zeta: SwitchingFunction) -> SignedCompleteGraph:
    """Relabel every edge {u, v} to ``zeta(u) + sign(u, v) + zeta(v)``.

    ``zeta`` must be total over the vertex set.
    """
    missing = [v for v in g.vertices() if v not in zeta]
    if missing:
        raise ValueError(f"switching function missing vertices {missing}")
    z = [0] * (g.n + 1)
    for v in g.vertices():
        z[v] = int(F22(zeta[v]))
    old = g._signs
    buf = bytearray(len(old))
    for idx, (u, v) in enumerate(all_edges(g.n)):
        buf[idx] = z[u] ^ old[idx] ^ z[v]
    return SignedCompleteGraph(g.n, bytes(buf))


def normalize_at(
    g: SignedCompleteGraph, v: int
) -> tuple[SignedCompleteGraph, dict[int, F22]]:
    """Switch so every edge at ``v`` carries the identity.

    Uses the one-shot switching ``zeta(u) = sign(u, v)`` for ``u != v`` and
    the identity at ``v`` itself.  Returns the new graph and the switching
    used.  Idempotent at the same vertex; all circle and triangle labels
    are preserved.
    """
    if v < 1 or v > g.n:
        raise ValueError(f"vertex {v} out of range for n={g.n}")
    zeta = {
        u: (F22.E if u == v else F22(g._signs[edge_index(g.n, u, v)]))
        for u in g.vertices()
    }
    return apply(g, zeta), zeta
