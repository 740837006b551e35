from __future__ import annotations

import pytest

from doublesign import F22, SignedCompleteGraph, build, named_instance


def graph_from(n: int, labels: dict[tuple[int, int], str], default: str = "e") -> SignedCompleteGraph:
    """Build a graph from a sparse {edge: label} dict, defaulting the rest."""
    edges = []
    for u in range(1, n + 1):
        for v in range(u + 1, n + 1):
            token = labels.get((u, v), labels.get((v, u), default))
            edges.append((u, v, F22.parse(token)))
    return build(n, edges)


@pytest.fixture
def share_vertex_k4() -> SignedCompleteGraph:
    return named_instance("share_vertex_k4")


@pytest.fixture
def triangle_k4() -> SignedCompleteGraph:
    return named_instance("triangle_k4")
