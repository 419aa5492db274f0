import random

import pytest

from rankbrittle.catalog import random_graph_uniform
from rankbrittle.errors import InputError
from rankbrittle.graphs import (Graph, LinkMatrix, ProductKind, are_twins,
                                blown_product, complement,
                                connected_components, from_edgelist_text,
                                graph_from_edges, make_family, product,
                                to_edgelist_text, twin_classes)

from oracles import perm_isomorphic


def test_graph_from_edges_basic():
    g = graph_from_edges(3, {(0, 1), (1, 2)})
    assert g.edges() == [(0, 1), (1, 2)]
    assert make_family("path", 3).rows == g.rows
    assert graph_from_edges(1, set()).n == 1
    assert make_family("path", 4).edges() == [(0, 1), (1, 2), (2, 3)]


def test_graph_from_edges_rejects_bad_input():
    with pytest.raises(InputError):
        graph_from_edges(3, {(0, 0)})
    with pytest.raises(InputError):
        graph_from_edges(3, {(0, 3)})
    with pytest.raises(InputError):
        Graph(2, (1, 0))  # asymmetric rows


def test_symmetry_and_zero_diagonal_survive_operations():
    rng = random.Random(11)
    for _ in range(50):
        g = random_graph_uniform(rng.randint(1, 8), rng)
        for out in (complement(g), product(g, g, ProductKind.HALF)):
            for i in range(out.n):
                assert not out.has_edge(i, i)
                for j in range(out.n):
                    assert out.has_edge(i, j) == out.has_edge(j, i)


def test_complement_is_involution():
    rng = random.Random(5)
    for _ in range(30):
        g = random_graph_uniform(rng.randint(1, 9), rng)
        assert complement(complement(g)).rows == g.rows
    assert complement(make_family("complete", 3)).edge_count() == 0


def test_complement_of_p4_is_p4():
    # 0-1-2-3 complements to the path 1-3-0-2
    g = complement(make_family("path", 4))
    assert perm_isomorphic(g, make_family("path", 4))


def test_families():
    assert make_family("path", 5).degree_sequence() == (2, 2, 2, 1, 1)
    t23 = make_family("subdivided_star", 3)
    assert t23.n == 7 and t23.edge_count() == 6
    assert t23.degree_sequence() == (3, 2, 2, 2, 1, 1, 1)
    three_k2 = make_family("copies", 3, make_family("complete", 2))
    assert three_k2.n == 6 and three_k2.edge_count() == 3
    assert make_family("star", 3).degree_sequence() == (3, 1, 1, 1)
    with pytest.raises(InputError):
        make_family("path", 0)
    with pytest.raises(InputError):
        make_family("wheel", 4)


def test_products():
    k1 = make_family("complete", 1)
    assert product(k1, k1, ProductKind.MATCH).edges() == [(0, 1)]
    s2 = make_family("edgeless", 2)
    half = product(s2, s2, ProductKind.HALF)
    assert half.edges() == [(0, 2), (1, 2), (1, 3)]
    assert perm_isomorphic(half, make_family("path", 4))
    # one side complete, one edgeless, per-vertex degrees split 5 / 1
    big = product(make_family("complete", 5), make_family("edgeless", 5),
                  ProductKind.MATCH)
    assert big.n == 10
    assert all(big.degree(v) == 5 for v in range(5))
    assert all(big.degree(v) == 1 for v in range(5, 10))
    with pytest.raises(InputError):
        product(k1, s2, ProductKind.MATCH)


def test_product_sides_induce_the_factors():
    rng = random.Random(3)
    for kind in ProductKind:
        g = random_graph_uniform(4, rng)
        h = random_graph_uniform(4, rng)
        p = product(g, h, kind)
        assert p.induced(range(4)).rows == g.rows
        assert p.induced(range(4, 8)).rows == h.rows


def test_blown_product():
    k4 = make_family("complete", 4)
    s4 = make_family("edgeless", 4)
    g = blown_product(k4, s4, ProductKind.MATCH, 3, LinkMatrix(0, 1, 0, 1))
    assert g.n == 24
    # copy 0 tops adjacent to copy 1 bottoms (b=1) but not copy 1 tops (a=0)
    assert g.has_edge(0, 12) and not g.has_edge(0, 8)
    # copy bottoms pairwise linked (d=1), bottoms before tops not (c=0)
    assert g.has_edge(4, 12) and not g.has_edge(4, 8)
    base = product(k4, s4, ProductKind.MATCH)
    assert blown_product(k4, s4, ProductKind.MATCH, 1,
                         LinkMatrix(1, 1, 1, 1)).rows == base.rows
    zero = blown_product(k4, s4, ProductKind.MATCH, 4, LinkMatrix(0, 0, 0, 0))
    assert zero.edge_count() == 4 * base.edge_count()
    with pytest.raises(InputError):
        blown_product(k4, s4, ProductKind.MATCH, 0, LinkMatrix(0, 0, 0, 0))
    with pytest.raises(InputError):
        LinkMatrix(0, 2, 0, 0)


def test_twin_classes():
    assert twin_classes(make_family("complete", 4)) == ((0, 1, 2, 3),)
    star = make_family("star", 3)
    assert twin_classes(star) == ((0,), (1, 2, 3))
    assert twin_classes(make_family("path", 4)) == ((0,), (1,), (2,), (3,))
    p3 = make_family("path", 3)
    assert are_twins(p3, 0, 2) and not are_twins(p3, 0, 1)


def test_twin_relation_is_transitive_within_classes():
    rng = random.Random(9)
    for _ in range(40):
        g = random_graph_uniform(rng.randint(2, 8), rng)
        for cls in twin_classes(g):
            for u in cls:
                for v in cls:
                    if u != v:
                        assert are_twins(g, u, v)


def test_connected_components():
    g = make_family("copies", 2, make_family("path", 3))
    assert connected_components(g) == [(0, 1, 2), (3, 4, 5)]


def test_edgelist_round_trip():
    rng = random.Random(1)
    for _ in range(20):
        g = random_graph_uniform(rng.randint(1, 10), rng)
        assert from_edgelist_text(to_edgelist_text(g)).rows == g.rows
    with pytest.raises(InputError):
        from_edgelist_text("3\n0 1 2\n")
