import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from doublesign import (
    Circle,
    F22,
    basis,
    decompose_hamiltonian,
    gen_random,
    is_even_subgraph,
    named_instance,
    walk_sign,
)


def test_basis_counts():
    assert len(basis(named_instance("identity(4)"), 1)) == 3
    assert len(basis(named_instance("identity(6)"), 1)) == 10
    assert len(basis(named_instance("identity(6)"), 4)) == 10


def test_basis_signs_on_documented_k4(share_vertex_k4):
    b = basis(share_vertex_k4, 1)
    assert set(b.signs) == {F22.A, F22.B, F22.C}
    assert all(1 in t for t in b.triangles)


def test_basis_rejects_bad_hub(share_vertex_k4):
    with pytest.raises(ValueError):
        basis(share_vertex_k4, 9)


def test_decompose_counts(share_vertex_k4):
    tris = decompose_hamiltonian(share_vertex_k4, Circle((1, 2, 3, 4)), 1)
    assert tris == [(1, 2, 3), (1, 3, 4)]
    g6 = named_instance("identity(6)")
    tris6 = decompose_hamiltonian(g6, Circle((1, 2, 3, 4, 5, 6)), 1)
    assert len(tris6) == 4


def test_decompose_requires_hamiltonian(share_vertex_k4):
    with pytest.raises(ValueError, match="not Hamiltonian"):
        decompose_hamiltonian(share_vertex_k4, Circle((1, 2, 3)), 1)


def test_decompose_sign_sum_matches_walk_sign_on_seeded_instances():
    # the decomposition identity, checked against the direct edge sum
    import itertools
    import random

    rng = random.Random(20240810)
    for trial in range(1000):
        g = gen_random(7, trial)
        perm = list(range(2, 8))
        rng.shuffle(perm)
        h = Circle((1, *perm))
        hub = rng.randint(1, 7)
        tris = decompose_hamiltonian(g, h, hub)
        assert len(tris) == 5
        assert all(hub in t for t in tris)
        total = 0
        for t in tris:
            from doublesign import triangle_sign

            total ^= int(triangle_sign(g, t))
        assert F22(total) == walk_sign(g, h)


def test_even_subgraph_basics():
    assert is_even_subgraph(Circle((1, 2, 3, 4)).edges())
    assert not is_even_subgraph([(1, 2)])
    assert is_even_subgraph([])


@given(st.integers(min_value=0, max_value=5000), st.integers(min_value=5, max_value=8))
@settings(max_examples=100, deadline=None)
def test_symmetric_difference_of_circles_is_even(seed, n):
    import random

    rng = random.Random(seed)
    a = rng.sample(range(1, n + 1), rng.randint(3, n))
    b = rng.sample(range(1, n + 1), rng.randint(3, n))
    ea = {tuple(sorted(e)) for e in Circle(a).edges()}
    eb = {tuple(sorted(e)) for e in Circle(b).edges()}
    assert is_even_subgraph(ea ^ eb)
