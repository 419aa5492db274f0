"""Acceptance suite: every criterion prints one pass/fail line.

Run with ``pytest tests/test_acceptance.py -v -s``.  All tolerances are
exact; sampled checks use fixed seeds.
"""

import random
from itertools import combinations

from rankbrittle.catalog import (nonisomorphic_graphs, random_graph,
                                 random_graph_uniform)
from rankbrittle.combinat import (find_sunflower, is_sunflower,
                                  monochromatic_subset, path_or_high_degree,
                                  sunflower_threshold)
from rankbrittle.cutrank import CutRankTable, cut_rank
from rankbrittle.decomposition import decomposition_width
from rankbrittle.graph6 import decode, encode
from rankbrittle.graphs import (ProductKind, bits, connected_components,
                                make_family, product, twin_classes)
from rankbrittle.isomorphism import are_isomorphic
from rankbrittle.solvers import (beta_rho_k, check_cut_certificate,
                                 colorful_cut_witness, dfs_layout, lrw_exact,
                                 rank_depth_exact, rbrit_exact)
from rankbrittle.verify import random_radius2_decomposition
from rankbrittle.vm import (apply_witness, has_vertex_minor_isomorphic,
                            local_complement, locally_equivalent,
                            reduce_triple_twin)
from rankbrittle.witnesses import (antimatching_case_path,
                                   asymmetric_link_reduction,
                                   build_case_structure,
                                   chain_to_star_subdivision,
                                   check_antimatching_reduction,
                                   drop_diagonal_links,
                                   drop_offdiagonal_links,
                                   induced_path_check, matching_case_path,
                                   star_subdivision_witness)

from oracles import dense_cut_rank, oracle_has_vertex_minor


def _report(name: str, ok: bool, detail: str = "") -> None:
    line = f"[ACCEPTANCE] {name}: {'PASS' if ok else 'FAIL'}"
    if detail:
        line += f" ({detail})"
    print(line)
    assert ok, line


def _all_graphs_up_to(n):
    for size in range(1, n + 1):
        yield from nonisomorphic_graphs(size)


def test_01_cut_rank_matches_dense_elimination():
    checked = 0
    ok = True
    for g in _all_graphs_up_to(6):
        for mask in range(1 << g.n):
            side = set(bits(mask))
            if cut_rank(g, side) != dense_cut_rank(g, side):
                ok = False
            checked += 1
    rng = random.Random(101)
    for _ in range(10_000):
        g = random_graph_uniform(rng.randint(1, 8), rng)
        table = CutRankTable(g)
        x = rng.randint(0, g.full_mask)
        y = rng.randint(0, g.full_mask)
        if table(x) != table(g.full_mask & ~x):
            ok = False
        if table(x) + table(y) < table(x & y) + table(x | y):
            ok = False
    _report("cut-rank equals dense elimination; side symmetry and "
            "submodularity hold", ok, f"{checked} exhaustive cuts")


def test_02_cut_rank_invariant_under_complementation():
    rng = random.Random(102)
    ok = True
    for _ in range(200):
        g = random_graph_uniform(rng.randint(1, 6), rng)
        for v in range(g.n):
            gv = local_complement(g, v)
            for mask in range(1 << g.n):
                if cut_rank(g, bits(mask)) != cut_rank(gv, bits(mask)):
                    ok = False
    _report("cut-rank invariant under local complementation "
            "(200 random graphs)", ok)


def test_03_paths_and_cliques_have_linear_width_one():
    ok = all(lrw_exact(make_family("path", n))[0] == 1 for n in range(2, 11))
    ok &= all(lrw_exact(make_family("complete", n))[0] == 1
              for n in range(2, 11))
    _report("paths and complete graphs have linear rank-width 1", ok)


def test_04_half_graphs_reduce_to_paths():
    ok = True
    for n in (2, 3):
        s = make_family("edgeless", n)
        k = make_family("complete", n)
        p2n = make_family("path", 2 * n)
        for top in (s, k):
            g = product(top, s, ProductKind.HALF)
            eq = locally_equivalent(g, p2n)
            ok &= eq is not None
            ok &= are_isomorphic(apply_witness(g, eq.witness), p2n)
        g = product(k, k, ProductKind.HALF)
        w = has_vertex_minor_isomorphic(g, make_family("path", 2 * n - 2))
        ok &= w is not None
        ok &= are_isomorphic(apply_witness(g, w),
                             make_family("path", 2 * n - 2))
    _report("half-graph products reduce to paths (n = 2, 3)", ok)


def test_05_triple_twin_removal_preserves_depth2_width():
    ok = True
    tested = 0
    for g in _all_graphs_up_to(7):
        big = [cls for cls in twin_classes(g) if len(cls) >= 3]
        if not big:
            continue
        tested += 1
        reduced = reduce_triple_twin(g)
        victim = big[0][0]
        one_step = g.induced([v for v in range(g.n) if v != victim])
        if rbrit_exact(g, 2)[0] != rbrit_exact(one_step, 2)[0]:
            ok = False
        if rbrit_exact(g, 2)[0] != rbrit_exact(reduced, 2)[0]:
            ok = False
    _report("deleting one of three twins preserves depth-2 width "
            "(exhaustive n <= 7)", ok, f"{tested} graphs")


def test_06_depth2_width_bounded_by_part_size_width():
    rng = random.Random(106)
    ok = True
    for _ in range(500):
        g = random_graph_uniform(rng.randint(2, 8), rng)
        rb2 = rbrit_exact(g, 2)[0]
        for k in (1, 2, 3):
            if rb2 > max(2, k, beta_rho_k(g, k)[0]):
                ok = False
    _report("depth-2 width <= max(2, k, part-size-k width) "
            "(500 random graphs, k = 1..3)", ok)


def test_07_case_structure_paths():
    ok = True
    for n in (2, 3, 4, 5):
        g, cs = build_case_structure(n, "I", ProductKind.MATCH)
        path = matching_case_path(g, cs)
        ok &= len(path) == 3 * n - 1 and induced_path_check(g, path)
    for n in (3, 4, 5):
        g, cs = build_case_structure(n, "I", ProductKind.ANTIMATCH)
        red = antimatching_case_path(g, cs)
        checks = check_antimatching_reduction(g, cs, red)
        ok &= all(flag for _, flag in checks)
        ok &= len(red.path) == 4 * n - 5
    _report("matching/anti-matching structures give induced paths of "
            "lengths 3n-1 and 4n-5", ok)


def test_08_star_subdivision_extractions():
    ok = True
    for case in (1, 2, 3, 4):
        for n in (1, 2, 3, 4):
            source, witness, target = star_subdivision_witness(case, n)
            ok &= are_isomorphic(apply_witness(source, witness), target)
    _report("all four pairing products yield the subdivided star "
            "(n = 1..4)", ok)


def test_09_blown_reduction_certificates_and_chain():
    ok = True
    kinds = [(ProductKind.MATCH, False), (ProductKind.MATCH, True),
             (ProductKind.ANTIMATCH, False), (ProductKind.ANTIMATCH, True)]
    for n in (2, 3, 4):
        for b, c in ((0, 1), (1, 0)):
            for d in (0, 1):
                rep = asymmetric_link_reduction(b, c, d, n)
                ok &= are_isomorphic(rep.match_product, rep.half_target)
                induced = rep.antimatch_product.induced(rep.antimatch_subset)
                ok &= are_isomorphic(induced, rep.half_target)
                path = make_family("path", 2 * n - 2)
                ok &= are_isomorphic(
                    apply_witness(rep.match_product, rep.match_path_witness),
                    path)
                ok &= are_isomorphic(
                    apply_witness(rep.antimatch_product,
                                  rep.antimatch_path_witness), path)
    for kind, bottom in kinds:
        ok &= drop_diagonal_links(kind, bottom, 2).labeled_equal
        for d in (0, 1):
            ok &= drop_offdiagonal_links(kind, bottom, d, 2).labeled_equal
        chain = chain_to_star_subdivision(kind, bottom, 1, 2)
        ok &= chain.isomorphic
        ok &= are_isomorphic(apply_witness(chain.source, chain.witness),
                             make_family("subdivided_star", 2))
    _report("link-matrix reduction certificates validate and the chained "
            "witness reaches T(2,2)", ok)


def test_10_linear_width_under_depth_squared():
    rng = random.Random(110)
    ok = True
    for _ in range(200):
        g = random_graph_uniform(rng.randint(2, 7), rng)
        k, dec = rank_depth_exact(g)
        if lrw_exact(g)[0] > k * k:
            ok = False
        if dfs_layout(g, dec).width > k * k:
            ok = False
    _report("linear rank-width <= rank-depth^2 and DFS layouts meet the "
            "bound (200 random graphs)", ok)


def test_11_scattered_pile_lower_bound():
    pile2 = make_family("copies", 2, make_family("subdivided_star", 2))
    value = rbrit_exact(pile2, 2)[0]
    ok = value >= 1
    rng = random.Random(111)
    for n in (2, 3):
        pile = make_family("copies", n, make_family("subdivided_star", n))
        required = (n + 1) // 2
        for _ in range(50):
            dec = random_radius2_decomposition(pile.n, rng)
            cert = colorful_cut_witness(pile, dec)
            ok &= cert.rank >= required
            ok &= check_cut_certificate(pile, dec, cert)
    _report("scattered pile: exact depth-2 width >= 1 at n=2 and 50+50 "
            "certificates validate", ok, f"exact value {value}")


def test_12_vertex_minor_engine_matches_orbit_oracle():
    rng = random.Random(112)
    ok = True
    for _ in range(200):
        g = random_graph_uniform(rng.randint(1, 6), rng)
        h = random_graph_uniform(rng.randint(1, min(4, g.n)), rng)
        mine = has_vertex_minor_isomorphic(g, h)
        if (mine is not None) != oracle_has_vertex_minor(g, h):
            ok = False
        if mine is not None and not are_isomorphic(apply_witness(g, mine), h):
            ok = False
    _report("vertex-minor search agrees with the exhaustive orbit oracle "
            "(200 pairs)", ok)


def test_13_combinatorial_search_guarantees():
    ok = True
    # sunflowers above the threshold: exhaustive wherever the family space
    # is finite, randomized at (k, p) = (3, 3)
    for family in combinations(list(combinations(range(6), 2)), 9):
        got = find_sunflower([set(p) for p in family], 3)
        ok &= got is not None and is_sunflower(got.members, got.core)
    for family in combinations(list(combinations(range(5), 3)), 7):
        got = find_sunflower([set(t) for t in family], 2)
        ok &= got is not None and is_sunflower(got.members, got.core)
    rng = random.Random(113)
    threshold = sunflower_threshold(3, 3)
    for _ in range(200):
        family = set()
        while len(family) <= threshold:
            family.add(frozenset(rng.sample(range(11), 3)))
        got = find_sunflower(list(family), 3)
        ok &= got is not None and got.petal_count() >= 3
        ok &= is_sunflower(got.members, got.core)
    # every 2-coloring of K6 has a one-colored triangle
    pairs = list(combinations(range(6), 2))
    for colored in range(1 << 15):
        matrix = [[0] * 6 for _ in range(6)]
        for idx, (i, j) in enumerate(pairs):
            matrix[i][j] = matrix[j][i] = (colored >> idx) & 1
        if monochromatic_subset(matrix, 3) is None:
            ok = False
    # the degree-or-path guarantee at its threshold
    for g in nonisomorphic_graphs(6):
        if len(connected_components(g)) != 1:
            continue
        got = path_or_high_degree(g, 4, 3)
        if got is None:
            ok = False
        elif got[0] == "degree":
            ok &= g.degree(got[1]) >= 4
        else:
            ok &= induced_path_check(g, got[1]) and len(got[1]) == 3
    _report("sunflower, monochromatic-triangle, and degree-or-path "
            "guarantees hold", ok)


def test_14_graph6_round_trip():
    ok = encode(make_family("complete", 1)) == "@"
    ok &= encode(make_family("complete", 3)) == "Bw"
    ok &= encode(make_family("path", 3)) == "Bg"
    rng = random.Random(114)
    for _ in range(1000):
        g = random_graph(rng.randint(1, 30), rng.random(), rng)
        text = encode(g)
        ok &= decode(text).rows == g.rows
        ok &= encode(decode(text)) == text
    _report("graph6 codec is byte-exact on fixed vectors and 1000 "
            "round trips", ok)
