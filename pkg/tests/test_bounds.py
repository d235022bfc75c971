"""Closed-form bounds, the derandomized extractor, peeling, and greedy coloring."""

import itertools
import math
import random

import pytest

from conftest import random_cover_of, random_hypergraph, singleton_block

from hypercover import (
    Cover,
    Hypergraph,
    complete_hypergraph,
    cover_incidence,
    derandomized_extraction,
    expected_survivors,
    extract_independent_set,
    greedy_color,
    independent_matchings_lower_bound,
    is_proper_coloring,
    ks_chromatic_lower_bound,
    ks_order_lower_bound,
    log_cover,
    matching_cover_lower_bound,
    min_sum_of_orders,
    independence_number,
    peel_coloring,
    star_partition,
    sum_of_orders,
    survivor_guarantee,
)


class TestKsOrderBound:
    def test_alpha_equals_n(self):
        assert ks_order_lower_bound(9, 9, 3) == 0.0

    def test_k8(self):
        assert ks_order_lower_bound(8, 1, 2) == pytest.approx(24.0)

    def test_three_uniform(self):
        expected = 9 * math.log2(3) / math.log2(1.5)
        assert ks_order_lower_bound(9, 3, 3) == pytest.approx(expected)

    def test_valid_on_sparse_three_uniform(self):
        # a single triple with an isolated vertex: total order 3, alpha 3;
        # the loosened base-2 form (r-1) n log2(n/alpha) = 3.32 would exceed it
        assert ks_order_lower_bound(4, 3, 3) <= 3.0
        assert 2 * 4 * math.log2(4 / 3) > 3.0

    def test_domain(self):
        with pytest.raises(ValueError):
            ks_order_lower_bound(4, 0, 2)
        with pytest.raises(ValueError):
            ks_order_lower_bound(4, 5, 2)
        with pytest.raises(ValueError):
            ks_order_lower_bound(4, 1, 1)


class TestKsChromaticBound:
    def test_k_2_16(self):
        # case expressions at k = 2^16: 65536*(16-4-2) vs 65536*(16-4-1)-4*65536
        assert ks_chromatic_lower_bound(2**16, 2) == pytest.approx(458752.0)

    def test_r3_scales_cases(self):
        k = 2**16
        case_one = 4 * k * (16 - 4 - 2)
        case_two = 4 * k * (16 - 4 - 1) - 6 * 4 * k
        assert ks_chromatic_lower_bound(k, 3) == pytest.approx(min(case_one, case_two))

    @pytest.mark.parametrize("k", (17, 100, 2**10, 2**16))
    @pytest.mark.parametrize("r", (2, 3, 4))
    def test_below_naive_klogk(self, k, r):
        assert ks_chromatic_lower_bound(k, r) < (r - 1) ** 2 * k * math.log2(k)

    def test_small_k_rejected(self):
        with pytest.raises(ValueError):
            ks_chromatic_lower_bound(16, 2)


class TestMatchingBounds:
    def test_single_edge(self):
        assert matching_cover_lower_bound(1, 1, 3) == pytest.approx(1.0)

    def test_k4(self):
        assert matching_cover_lower_bound(2, 6, 2) == pytest.approx(4 / 6)

    @pytest.mark.parametrize("m", (1, 2, 5))
    def test_perfect_matching_hypergraph(self, m):
        assert matching_cover_lower_bound(m, m, 3) == pytest.approx(m)

    def test_independent_matchings_reduces(self):
        assert independent_matchings_lower_bound(1, 2, 6, 2) == pytest.approx(
            matching_cover_lower_bound(2, 6, 2)
        )

    def test_independent_matchings_values(self):
        assert independent_matchings_lower_bound(4, 2, 16, 2) == pytest.approx(1.0)
        assert independent_matchings_lower_bound(2, 3, 27, 3) == pytest.approx(
            math.sqrt(2) * 3**1.5 / math.sqrt(27)
        )

    def test_domain(self):
        with pytest.raises(ValueError):
            matching_cover_lower_bound(0, 5, 2)
        with pytest.raises(ValueError):
            matching_cover_lower_bound(3, 2, 2)
        with pytest.raises(ValueError):
            independent_matchings_lower_bound(2, 3, 5, 2)


class TestOrders:
    def test_sum_of_orders_empty(self):
        assert sum_of_orders(Cover(2, ())) == 0

    def test_star_partition(self):
        _, c = star_partition(4)
        assert sum_of_orders(c) == 9

    def test_log_cover_k8_meets_bound(self):
        _, c = log_cover(8)
        assert sum_of_orders(c) == 24 == ks_order_lower_bound(8, 1, 2)

    def test_incidence_sums_to_orders(self):
        _, c = log_cover(13)
        inc = cover_incidence(13, c)
        assert sum(inc) == sum_of_orders(c)


class TestExtraction:
    def test_edgeless_keeps_everything(self):
        h = Hypergraph(2, 5)
        res = derandomized_extraction(h, Cover(2, ()))
        assert res.vertices == frozenset(range(5))
        assert res.guarantee == 5

    def test_k4_log_cover(self):
        h, c = log_cover(4)
        res = derandomized_extraction(h, c)
        assert res.guarantee == 1  # each vertex in 2 blocks: ceil(4/4)
        assert len(res.vertices) >= 1
        assert all(e not in h.edges for e in
                   itertools.combinations(sorted(res.vertices), 2))

    def test_single_triple(self):
        h = Hypergraph(3, 3, frozenset({(0, 1, 2)}))
        c = Cover(3, (singleton_block((0, 1, 2)),))
        res = derandomized_extraction(h, c)
        assert res.guarantee == 2  # exact: ceil(3 * 2/3)
        assert len(res.vertices) == 2

    def test_uncovered_edge_rejected(self):
        h = complete_hypergraph(4)
        with pytest.raises(ValueError):
            extract_independent_set(h, Cover(2, ()))

    def test_guarantee_uses_exact_arithmetic(self):
        # 6 * (2/3) is exactly 4, but the float sum lands at 4.000000000000001
        assert survivor_guarantee([1] * 6, 3) == 4
        assert math.ceil(expected_survivors([1] * 6, 3)) == 5

    def test_expectations_never_decrease(self):
        rng = random.Random(11)
        for _ in range(25):
            r = rng.choice((2, 3))
            h = random_hypergraph(rng, rng.randint(r, 6), r)
            c = random_cover_of(rng, h)
            res = derandomized_extraction(h, c)
            for before, after in zip(res.expectations, res.expectations[1:]):
                assert after >= before - 1e-9
            assert res.expectations[-1] == pytest.approx(len(res.vertices))

    def test_random_covers_guarantee_and_independence(self):
        rng = random.Random(5)
        for _ in range(40):
            r = rng.choice((2, 3))
            h = random_hypergraph(rng, rng.randint(r, 6), r)
            c = random_cover_of(rng, h)
            res = derandomized_extraction(h, c)
            assert len(res.vertices) >= res.guarantee
            assert res.guarantee == survivor_guarantee(cover_incidence(h.n, c), r)
            for e in h.edges:
                assert not set(e) <= res.vertices


class TestPeel:
    def test_edgeless_one_color(self):
        h = Hypergraph(2, 4)
        res = peel_coloring(h, lambda sub: Cover(2, ()))
        assert set(res.colors) == {0}

    def test_k4_with_log_cover_provider(self):
        h = complete_hypergraph(4)
        provider = lambda sub: log_cover(sub.n)[1] if sub.n >= 2 else Cover(2, ())
        res = peel_coloring(h, provider)
        assert len(set(res.colors)) <= 4
        assert is_proper_coloring(h, res.colors)

    def test_single_triple_two_colors(self):
        h = Hypergraph(3, 3, frozenset({(0, 1, 2)}))
        provider = lambda sub: Cover(
            3, tuple(singleton_block(e) for e in sub.sorted_edges())
        )
        res = peel_coloring(h, provider)
        assert len(set(res.colors)) <= 2
        assert res.survivor_sizes[0] >= 2
        assert is_proper_coloring(h, res.colors)

    def test_random_instances_proper(self):
        rng = random.Random(23)
        for _ in range(15):
            r = rng.choice((2, 3))
            h = random_hypergraph(rng, rng.randint(r, 6), r)
            provider = lambda sub: Cover(
                sub.r, tuple(singleton_block(e) for e in sub.sorted_edges())
            )
            res = peel_coloring(h, provider)
            assert is_proper_coloring(h, res.colors)


class TestGreedyColor:
    def test_complete_graph_needs_all_colors(self):
        h = complete_hypergraph(4)
        for order in itertools.permutations(range(4)):
            assert sorted(greedy_color(h, order)) == [0, 1, 2, 3]

    def test_edgeless_single_color(self):
        assert set(greedy_color(Hypergraph(2, 5), range(5))) == {0}

    def test_k5_3_class_sizes(self):
        colors = greedy_color(complete_hypergraph(5, 3), range(5))
        sizes = sorted(colors.count(c) for c in set(colors))
        assert sizes == [1, 2, 2]

    def test_complete_r_uniform_small_class_property(self):
        # greedily colored complete instances leave at most one class below r-1
        for n, r in ((5, 3), (7, 3), (6, 2), (9, 4)):
            colors = greedy_color(complete_hypergraph(n, r), range(n))
            small = [c for c in set(colors) if colors.count(c) < r - 1]
            assert len(small) <= 1
            assert is_proper_coloring(complete_hypergraph(n, r), colors)

    def test_requires_permutation(self):
        with pytest.raises(ValueError):
            greedy_color(complete_hypergraph(3), [0, 1, 1])


class TestBoundDominance:
    def test_order_bound_vs_exact_optimum(self):
        rng = random.Random(3)
        for _ in range(12):
            r = rng.choice((2, 3))
            n = rng.randint(r, 5)
            h = random_hypergraph(rng, n, r)
            alpha = independence_number(h)
            outcome = min_sum_of_orders(h)
            assert outcome.is_exact
            assert outcome.value >= ks_order_lower_bound(n, alpha, r) - 1e-9

    def test_any_cover_order_dominates_bound(self):
        rng = random.Random(9)
        for _ in range(12):
            r = rng.choice((2, 3))
            h = random_hypergraph(rng, rng.randint(r, 6), r)
            c = random_cover_of(rng, h)
            alpha = independence_number(h)
            assert sum_of_orders(c) >= ks_order_lower_bound(h.n, alpha, r) - 1e-9
