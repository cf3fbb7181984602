"""Frozen regression values for the documented LCG stream."""

import pytest

from cpdist.graphs import Tree, build_family, is_tree
from cpdist.rng import Lcg, random_matrix, random_tree_edges


def test_frozen_draws_seed_42():
    rng = Lcg(42)
    assert [rng._next() for _ in range(4)] == [
        2440530669,
        968358053,
        1773127077,
        2707539007,
    ]


def test_frozen_randint_stream():
    rng = Lcg(42)
    assert [rng.randint(1, 10) for _ in range(6)] == [10, 4, 8, 8, 9, 4]


def test_frozen_tree():
    assert random_tree_edges(6, Lcg(7)) == ((1, 2), (2, 3), (1, 4), (3, 5), (1, 6))


def test_same_seed_same_stream():
    a, b = Lcg(99), Lcg(99)
    assert [a.randint(0, 1000) for _ in range(20)] == [b.randint(0, 1000) for _ in range(20)]


def test_random_trees_are_trees():
    rng = Lcg(5)
    for _ in range(25):
        n = rng.randint(2, 12)
        g = build_family(Tree(random_tree_edges(n, rng)))
        assert is_tree(g)
        assert g.vertex_count == n


def test_random_matrix_bounds():
    rng = Lcg(3)
    m = random_matrix(rng, 4, 5, -2, 2)
    assert all(-2 <= e <= 2 for e in m.entries())


def test_empty_range_rejected():
    with pytest.raises(ValueError):
        Lcg(1).randint(5, 4)
