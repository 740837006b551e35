"""Triangle-label censuses, K4 classification, and structural finders.

The central quantity is *diversity*: how many distinct labels the
triangles of an instance realize (1 to 4).  Diversity drives the
achievable Hamiltonian spectrum, so this module also classifies K4
subgraphs (all four triangle labels distinct, or the paired pattern) and
locates the edge/triangle configurations the constructive machinery
starts from.  Everything here is read-only over immutable graphs.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Optional, Sequence

from .graph import SignedCompleteGraph, Triangle, all_edges, edge_index
from .group import ELEMENTS, F22


@lru_cache(maxsize=None)
def triangle_table(n: int) -> tuple[tuple[tuple[int, int, int], tuple[int, int, int]], ...]:
    """All vertex triples of K_n with their three edge indexes, cached."""
    out = []
    for a, b, c in combinations(range(1, n + 1), 3):
        out.append(
            (
                (a, b, c),
                (edge_index(n, a, b), edge_index(n, a, c), edge_index(n, b, c)),
            )
        )
    return tuple(out)


def _triangle_signs_raw(g: SignedCompleteGraph) -> list[int]:
    """Labels of all triangles, as plain ints aligned with triangle_table."""
    s = g._signs
    return [s[i] ^ s[j] ^ s[k] for _, (i, j, k) in triangle_table(g.n)]


@lru_cache(maxsize=None)
def quad_table(n: int) -> tuple[tuple[tuple[int, int, int, int], tuple[int, int, int, int]], ...]:
    """All 4-subsets of vertices with the rows of their four triangles."""
    pos = {triple: i for i, (triple, _) in enumerate(triangle_table(n))}
    out = []
    for quad in combinations(range(1, n + 1), 4):
        out.append((quad, tuple(pos[t] for t in combinations(quad, 3))))
    return tuple(out)


@dataclass(frozen=True)
class TriangleCensus:
    """Label counts over all C(n, 3) triangles of an instance."""

    counts: dict[F22, int]

    @property
    def diversity(self) -> int:
        return sum(1 for v in self.counts.values() if v)

    @property
    def signs(self) -> frozenset[F22]:
        """The labels actually realized by triangles."""
        return frozenset(s for s, v in self.counts.items() if v)

    @property
    def total(self) -> int:
        return sum(self.counts.values())


def triangle_census(g: SignedCompleteGraph) -> TriangleCensus:
    """Exact triangle-label counts; requires n >= 3."""
    if g.n < 3:
        raise ValueError("need n >= 3 for a triangle census")
    counts = [0, 0, 0, 0]
    for t in _triangle_signs_raw(g):
        counts[t] += 1
    return TriangleCensus({F22(i): counts[i] for i in range(4)})


@dataclass(frozen=True)
class CommonSignTriple:
    """Exactly three edges of one K4 sharing a label, as a star or triangle."""

    sign: F22
    shape: str  # "star" | "triangle"
    edges: frozenset[tuple[int, int]]


@dataclass(frozen=True)
class K4Class:
    """Classification of one K4 by its four triangle labels.

    ``all_distinct`` marks the four labels pairwise distinct; otherwise
    the labels pair up as x, x, y, y (x = y covers the all-equal case)
    and ``pair`` records (x, y).  For an all-distinct K4, ``common_triple``
    is set when exactly three edges share one label and form a star or a
    triangle.
    """

    vertices: tuple[int, int, int, int]
    triangle_signs: tuple[F22, F22, F22, F22]
    kind: str  # "all_distinct" | "two_two"
    pair: Optional[tuple[F22, F22]] = None
    common_triple: Optional[CommonSignTriple] = None

    @property
    def is_all_distinct(self) -> bool:
        return self.kind == "all_distinct"

    @property
    def has_common_triple(self) -> bool:
        return self.common_triple is not None


def _find_common_triple(
    g: SignedCompleteGraph, quad: Sequence[int]
) -> Optional[CommonSignTriple]:
    pairs = [(u, v) for u, v in combinations(sorted(quad), 2)]
    by_sign: dict[F22, list[tuple[int, int]]] = {}
    for u, v in pairs:
        by_sign.setdefault(g.sign(u, v), []).append((u, v))
    for s in ELEMENTS:
        edges = by_sign.get(s, [])
        if len(edges) != 3:
            continue
        verts = [w for e in edges for w in e]
        common = set(edges[0]) & set(edges[1]) & set(edges[2])
        if common:
            return CommonSignTriple(s, "star", frozenset(edges))
        if len(set(verts)) == 3:
            return CommonSignTriple(s, "triangle", frozenset(edges))
    return None


def classify_k4(g: SignedCompleteGraph, quad: Sequence[int]) -> K4Class:
    """Classify the K4 induced by four distinct vertices."""
    vs = tuple(sorted(int(v) for v in quad))
    if len(set(vs)) != 4:
        raise ValueError(f"need four distinct vertices, got {quad}")
    tris = tuple(
        F22(
            g._signs[edge_index(g.n, a, b)]
            ^ g._signs[edge_index(g.n, a, c)]
            ^ g._signs[edge_index(g.n, b, c)]
        )
        for a, b, c in combinations(vs, 3)
    )
    if len(set(tris)) == 4:
        return K4Class(vs, tris, "all_distinct", common_triple=_find_common_triple(g, vs))
    # The four labels always sum to the identity (every edge is counted
    # twice), so short of being all distinct they pair up as x, x, y, y.
    ordered = sorted(set(tris))
    if len(ordered) == 1:
        pair = (ordered[0], ordered[0])
    else:
        pair = (ordered[0], ordered[1])
    return K4Class(vs, tris, "two_two", pair=pair)


def find_consecutive_distinct_triple(
    g: SignedCompleteGraph, hub: int
) -> Optional[tuple[int, int, int, int]]:
    """First ordered (a, b, c, d) whose chained hub triangles get 3 labels.

    The triangles hub-a-b, hub-b-c, hub-c-d share successive hub edges;
    the finder returns the lexicographically smallest tuple for which
    their three labels are pairwise distinct, or None.
    """
    if g.n < 5:
        raise ValueError("need n >= 5 for a consecutive triple")
    if hub < 1 or hub > g.n:
        raise ValueError(f"hub {hub} out of range")
    s = g._signs
    n = g.n
    others = [v for v in g.vertices() if v != hub]
    hub_edge = [0] * (n + 1)
    for v in others:
        hub_edge[v] = s[edge_index(n, hub, v)]

    def tri(u: int, v: int) -> int:
        return hub_edge[u] ^ hub_edge[v] ^ s[edge_index(n, u, v)]

    for a in others:
        for b in others:
            if b == a:
                continue
            t1 = tri(a, b)
            for c in others:
                if c in (a, b):
                    continue
                t2 = tri(b, c)
                if t2 == t1:
                    continue
                for d in others:
                    if d in (a, b, c):
                        continue
                    t3 = tri(c, d)
                    if t3 != t1 and t3 != t2:
                        return (a, b, c, d)
    return None


class TheoryViolationError(Exception):
    """Raised when four distinct-label edges contain a cycle.

    Under the hypotheses this configuration arises from (a normalized hub
    and no K4 with four distinct triangle labels), the four edges provably
    form a forest; hitting this error means those hypotheses were violated
    or a claimed impossibility actually occurred.
    """


@dataclass(frozen=True)
class EdgeStructure:
    """Shape of the four distinct-label witness edges off the hub."""

    case: int  # 1..4
    label: str
    edges_by_sign: dict[F22, tuple[int, int]]


_CASE_LABELS = {
    1: "common_vertex",
    2: "star_plus_attached",
    3: "star_plus_disjoint",
    4: "disjoint_paths",
}


def distinct_sign_edge_structure(g: SignedCompleteGraph, hub: int) -> EdgeStructure:
    """Pick the least edge per label off a normalized hub and classify them.

    Requires every hub edge to carry the identity and all four labels to
    occur among the remaining edges (each such edge spans a hub triangle
    of the same label, so these are basis witnesses).  The four chosen
    edges are classified by how they meet: all at one vertex, a 3-star
    with the fourth edge attached or disjoint, or a union of disjoint
    paths.  A cycle among them raises :class:`TheoryViolationError`.
    """
    n = g.n
    s = g._signs
    for v in g.vertices():
        if v != hub and s[edge_index(n, hub, v)] != 0:
            raise ValueError(f"graph is not normalized at {hub}")
    chosen: dict[F22, tuple[int, int]] = {}
    for u, v in all_edges(n):
        if u == hub or v == hub:
            continue
        sign = F22(s[edge_index(n, u, v)])
        if sign not in chosen:
            chosen[sign] = (u, v)
            if len(chosen) == 4:
                break
    if len(chosen) < 4:
        missing = [e for e in ELEMENTS if e not in chosen]
        raise ValueError(f"labels {missing} not realized off the hub")

    edges = sorted(chosen.values())
    degree: dict[int, int] = {}
    for u, v in edges:
        degree[u] = degree.get(u, 0) + 1
        degree[v] = degree.get(v, 0) + 1

    # Cycle detection: 4 edges form a forest iff components = vertices - 4.
    parent = {v: v for v in degree}

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru == rv:
            raise TheoryViolationError(
                f"distinct-label edges {edges} contain a cycle"
            )
        parent[ru] = rv

    max_deg = max(degree.values())
    if max_deg == 4:
        case = 1
    elif max_deg == 3:
        center = next(v for v, d in degree.items() if d == 3)
        rest = next((u, v) for u, v in edges if center not in (u, v))
        attached = degree[rest[0]] > 1 or degree[rest[1]] > 1
        case = 2 if attached else 3
    else:
        case = 4
    return EdgeStructure(case, _CASE_LABELS[case], dict(sorted(chosen.items())))
