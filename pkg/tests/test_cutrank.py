import random

import pytest

from rankbrittle.catalog import random_graph_uniform
from rankbrittle.cutrank import (CutRankTable, cut_rank, gf2_rank, rho_width,
                                 subset_max_table)
from rankbrittle.errors import InputError
from rankbrittle.graphs import bits, make_family
from rankbrittle.vm import local_complement

from oracles import dense_cut_rank


def test_gf2_rank_basics():
    assert gf2_rank([]) == 0
    assert gf2_rank([0b101, 0b011, 0b110]) == 2  # third row is the sum
    assert gf2_rank([0b1, 0b10, 0b100]) == 3


def test_cut_rank_fixed_values():
    p4 = make_family("path", 4)
    assert cut_rank(p4, [0, 2]) == 2
    assert cut_rank(p4, []) == 0
    assert cut_rank(p4, range(4)) == 0
    for n in (2, 3, 5):
        kn = make_family("complete", n)
        for mask in range(1, (1 << n) - 1):
            assert cut_rank(kn, list(bits(mask))) == 1
    with pytest.raises(InputError):
        cut_rank(p4, [4])


def test_cut_rank_matches_dense_elimination():
    rng = random.Random(8)
    for _ in range(60):
        g = random_graph_uniform(rng.randint(1, 7), rng)
        for mask in range(1 << g.n):
            side = set(bits(mask))
            assert cut_rank(g, side) == dense_cut_rank(g, side)


def test_complement_side_symmetry_and_submodularity():
    rng = random.Random(12)
    for _ in range(40):
        g = random_graph_uniform(rng.randint(1, 8), rng)
        table = CutRankTable(g)
        full = g.full_mask
        for _ in range(30):
            x = rng.randint(0, full)
            y = rng.randint(0, full)
            assert table(x) == table(full & ~x)
            assert table(x) + table(y) >= table(x & y) + table(x | y)


def test_cut_rank_invariant_under_local_complementation():
    rng = random.Random(21)
    for _ in range(40):
        g = random_graph_uniform(rng.randint(1, 6), rng)
        for v in range(g.n):
            gv = local_complement(g, v)
            for mask in range(1 << g.n):
                assert cut_rank(g, bits(mask)) == cut_rank(gv, bits(mask))


def test_rho_width():
    p4 = make_family("path", 4)
    assert rho_width(p4, [range(4)]) == 0
    assert rho_width(make_family("complete", 4), [[0], [1], [2], [3]]) == 1
    assert rho_width(p4, [[0, 1], [2, 3]]) == 1
    assert rho_width(p4, [[0], [1], [2], [3]]) == 2
    with pytest.raises(InputError):
        rho_width(p4, [[0, 1], [1, 2, 3]])
    with pytest.raises(InputError):
        rho_width(p4, [[0, 1]])
    with pytest.raises(InputError):
        rho_width(p4, [[0, 1], [], [2, 3]])


def test_subset_max_table():
    g = make_family("path", 4)
    ranks = CutRankTable(g).all_ranks()
    m1 = subset_max_table(ranks, 4)
    for mask in range(1 << 4):
        want = max(ranks[sub] for sub in range(1 << 4)
                   if sub & mask == sub)
        assert m1[mask] == want
