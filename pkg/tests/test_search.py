"""Exhaustive decomposition searches, canonical witnesses, and oracle agreement."""

from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from shiftdecomp import (
    DecompKind,
    ElementSet,
    MissingZeroError,
    SetOp,
    TargetVariant,
    ZeroInTargetError,
    build_target,
    canonical_product_pair,
    canonical_product_witness,
    compose_sets,
    factorization_oracle,
    find_difference_representations,
    find_exact_factorizations,
    find_ratio_representations,
    make_field,
    max_difference_clique,
    subgroup_of_order,
)

PRIMES = (5, 7, 11, 13)


class TestCanonicalForms:
    def test_known_pair(self, f11):
        assert canonical_product_pair(f11, (1, 7), (1, 2, 3)) == ((1, 7), (1, 2, 3))
        assert canonical_product_witness(f11, (1, 7), (1, 2, 3)) == (
            (1, 2, 3),
            (1, 7),
        )

    def test_witness_is_swap_invariant(self, f11):
        assert canonical_product_witness(f11, (1, 7), (1, 2, 3)) == (
            canonical_product_witness(f11, (1, 2, 3), (1, 7))
        )

    @given(st.sampled_from(PRIMES), st.data())
    def test_pair_is_scaling_invariant(self, p, data):
        ctx = make_field(p)
        a = data.draw(
            st.sets(st.integers(min_value=1, max_value=p - 1), min_size=1, max_size=4)
        )
        b = data.draw(
            st.sets(st.integers(min_value=1, max_value=p - 1), min_size=1, max_size=4)
        )
        c = data.draw(st.integers(min_value=1, max_value=p - 1))
        c_inv = pow(c, p - 2, p)
        scaled_a = [c * x % p for x in a]
        scaled_b = [c_inv * x % p for x in b]
        assert canonical_product_pair(ctx, scaled_a, scaled_b) == canonical_product_pair(
            ctx, a, b
        )

    @given(st.sampled_from(PRIMES), st.data())
    def test_witness_is_scaling_and_swap_invariant(self, p, data):
        ctx = make_field(p)
        a = data.draw(
            st.sets(st.integers(min_value=1, max_value=p - 1), min_size=1, max_size=4)
        )
        b = data.draw(
            st.sets(st.integers(min_value=1, max_value=p - 1), min_size=1, max_size=4)
        )
        c = data.draw(st.integers(min_value=1, max_value=p - 1))
        c_inv = pow(c, p - 2, p)
        base = canonical_product_witness(ctx, a, b)
        assert canonical_product_witness(ctx, b, a) == base
        assert (
            canonical_product_witness(
                ctx, [c_inv * x % p for x in b], [c * x % p for x in a]
            )
            == base
        )


class TestProductSearch:
    def test_f11_shifted_subgroup(self, f11):
        g = subgroup_of_order(f11, 5)
        target = build_target(g, TargetVariant.SHIFT_MINUS_LAMBDA, lam=2)
        assert target.elements() == (1, 2, 3, 7, 10)
        report = find_exact_factorizations(f11, target, DecompKind.PRODUCT)
        assert report.exhaustive
        assert [(w.a, w.b) for w in report.witnesses] == [((1, 2, 3), (1, 7))]
        assert report.witnesses[0].verify(target)
        assert not report.witnesses[0].verify(g.elements)

    def test_f19_shifted_subgroup(self, f19):
        g = subgroup_of_order(f19, 6)
        target = build_target(g, TargetVariant.SHIFT_MINUS_LAMBDA, lam=2)
        report = find_exact_factorizations(f19, target, DecompKind.PRODUCT)
        assert [(w.a, w.b) for w in report.witnesses] == [((5, 9), (1, 2, 7))]

    def test_no_witnesses_for_lambda_in_g(self, f13):
        g = subgroup_of_order(f13, 3)  # {1, 3, 9}
        target = build_target(g, TargetVariant.SHIFT_MINUS_LAMBDA, lam=3)
        report = find_exact_factorizations(f13, target, DecompKind.PRODUCT)
        assert report.witnesses == ()
        assert report.exhaustive

    def test_min_size_filters(self, f11):
        g = subgroup_of_order(f11, 5)
        target = build_target(g, TargetVariant.SHIFT_MINUS_LAMBDA, lam=2)
        report = find_exact_factorizations(f11, target, DecompKind.PRODUCT, min_size=3)
        assert report.witnesses == ()

    def test_rejects_zero_in_target(self, f11):
        with pytest.raises(ZeroInTargetError):
            find_exact_factorizations(
                f11, ElementSet.from_elements(11, [0, 1, 2]), DecompKind.PRODUCT
            )

    def test_report_metadata(self, f11):
        g = subgroup_of_order(f11, 5)
        target = build_target(g, TargetVariant.SHIFT_MINUS_LAMBDA, lam=2)
        report = find_exact_factorizations(f11, target, DecompKind.PRODUCT)
        assert report.p == 11
        assert report.kind is DecompKind.PRODUCT
        assert report.target == target.elements()
        assert report.nodes > 0
        assert report.elapsed_ms >= 0


class TestSumSearch:
    def test_order_four_mod_13(self, f13):
        g = subgroup_of_order(f13, 4)  # {1, 5, 8, 12}
        report = find_exact_factorizations(f13, g.elements, DecompKind.SUM)
        assert len(report.witnesses) == 13
        for w in report.witnesses:
            assert len(w.a) == len(w.b) == 2
            assert w.verify(g.elements)

    def test_no_sum_witnesses_mod_11(self, f11):
        g = subgroup_of_order(f11, 5)
        report = find_exact_factorizations(f11, g.elements, DecompKind.SUM)
        assert report.witnesses == ()
        assert report.exhaustive

    def test_witnesses_deduplicated_up_to_swap(self, f13):
        g = subgroup_of_order(f13, 4)
        report = find_exact_factorizations(f13, g.elements, DecompKind.SUM)
        seen = {tuple(sorted((w.a, w.b))) for w in report.witnesses}
        assert len(seen) == len(report.witnesses)


class TestOracleAgreement:
    @given(st.sampled_from(PRIMES), st.data())
    def test_product_engine_matches_oracle(self, p, data):
        ctx = make_field(p)
        target = data.draw(
            st.sets(
                st.integers(min_value=1, max_value=p - 1), min_size=1, max_size=p - 1
            ).map(lambda s: ElementSet.from_elements(p, s))
        )
        report = find_exact_factorizations(ctx, target, DecompKind.PRODUCT)
        engine = sorted(
            canonical_product_witness(ctx, w.a, w.b) for w in report.witnesses
        )
        assert engine == sorted(factorization_oracle(ctx, target, DecompKind.PRODUCT))

    @given(st.sampled_from(PRIMES), st.data())
    def test_sum_engine_matches_oracle(self, p, data):
        ctx = make_field(p)
        target = data.draw(
            st.sets(
                st.integers(min_value=0, max_value=p - 1), min_size=1, max_size=p
            ).map(lambda s: ElementSet.from_elements(p, s))
        )
        report = find_exact_factorizations(ctx, target, DecompKind.SUM)
        engine = sorted(tuple(sorted((w.a, w.b))) for w in report.witnesses)
        assert engine == sorted(factorization_oracle(ctx, target, DecompKind.SUM))

    @given(st.sampled_from(PRIMES), st.data())
    def test_every_witness_recomposes(self, p, data):
        ctx = make_field(p)
        target = data.draw(
            st.sets(
                st.integers(min_value=1, max_value=p - 1), min_size=1, max_size=p - 1
            ).map(lambda s: ElementSet.from_elements(p, s))
        )
        report = find_exact_factorizations(ctx, target, DecompKind.PRODUCT)
        for w in report.witnesses:
            composed = compose_sets(
                ElementSet.from_elements(p, w.a),
                ElementSet.from_elements(p, w.b),
                SetOp.PRODUCT,
            )
            assert composed == target


class TestRatioRepresentations:
    def test_singleton_target(self, f11):
        report = find_ratio_representations(f11, ElementSet.from_elements(11, [1]))
        assert [w.a for w in report.witnesses] == [(1,)]

    def test_three_element_target_mod_7(self, f7):
        report = find_ratio_representations(f7, ElementSet.from_elements(7, [1, 3, 5]))
        assert [w.a for w in report.witnesses] == [(1, 3), (1, 5)]

    def test_target_without_one_has_no_witnesses(self, f11):
        report = find_ratio_representations(f11, ElementSet.from_elements(11, [2, 3]))
        assert report.witnesses == ()
        assert report.exhaustive

    def test_subgroup_recovers_itself(self, f13):
        g = subgroup_of_order(f13, 4)
        report = find_ratio_representations(f13, g.elements)
        assert [w.a for w in report.witnesses] == [g.elements.elements()]

    @given(st.sampled_from(PRIMES), st.data())
    def test_witnesses_are_exact_and_maximal(self, p, data):
        ctx = make_field(p)
        target = data.draw(
            st.sets(
                st.integers(min_value=1, max_value=p - 1), min_size=1, max_size=p - 1
            ).map(lambda s: ElementSet.from_elements(p, s).with_element(1))
        )
        report = find_ratio_representations(ctx, target)
        for w in report.witnesses:
            a_set = ElementSet.from_elements(p, w.a)
            assert compose_sets(a_set, a_set, SetOp.RATIO) == target
            for x in range(1, p):
                if x in a_set:
                    continue
                grown = a_set.with_element(x)
                assert compose_sets(grown, grown, SetOp.RATIO) != target


class TestDifferenceRepresentations:
    def test_three_element_target_mod_11(self, f11):
        report = find_difference_representations(
            f11, ElementSet.from_elements(11, [0, 1, 10])
        )
        assert [w.a for w in report.witnesses] == [(0, 1), (0, 10)]

    def test_zero_only_target(self, f11):
        report = find_difference_representations(f11, ElementSet.from_elements(11, [0]))
        assert [w.a for w in report.witnesses] == [(0,)]

    def test_rejects_target_without_zero(self, f11):
        with pytest.raises(MissingZeroError):
            find_difference_representations(f11, ElementSet.from_elements(11, [1, 10]))

    def test_no_witnesses_for_order_three_target(self, f13):
        g = subgroup_of_order(f13, 3)
        report = find_difference_representations(f13, g.elements.with_element(0))
        assert report.witnesses == ()
        assert report.exhaustive

    @given(st.sampled_from(PRIMES), st.data())
    def test_witnesses_are_exact_and_maximal(self, p, data):
        ctx = make_field(p)
        target = data.draw(
            st.sets(
                st.integers(min_value=0, max_value=p - 1), min_size=1, max_size=p
            ).map(lambda s: ElementSet.from_elements(p, s).with_element(0))
        )
        report = find_difference_representations(ctx, target)
        for w in report.witnesses:
            a_set = ElementSet.from_elements(p, w.a)
            assert compose_sets(a_set, a_set, SetOp.DIFFERENCE) == target
            for x in range(p):
                if x in a_set:
                    continue
                grown = a_set.with_element(x)
                assert compose_sets(grown, grown, SetOp.DIFFERENCE) != target


class TestDifferenceClique:
    def test_paley_17(self):
        ctx = make_field(17)
        assert max_difference_clique(ctx, subgroup_of_order(ctx, 8)) == 3

    def test_order_two_mod_5(self):
        ctx = make_field(5)
        assert max_difference_clique(ctx, subgroup_of_order(ctx, 2)) == 2

    def test_full_group_gives_whole_field(self, f7):
        # differences land anywhere, so the whole field is a clique
        assert max_difference_clique(f7, subgroup_of_order(f7, 6)) == 7

    @pytest.mark.parametrize(
        "p,expected", [(17, 3), (29, 4), (37, 4), (41, 5), (53, 5)]
    )
    def test_known_paley_clique_numbers(self, p, expected):
        ctx = make_field(p)
        assert max_difference_clique(ctx, subgroup_of_order(ctx, (p - 1) // 2)) == expected

    @given(st.sampled_from(PRIMES), st.data())
    def test_clique_matches_brute_force(self, p, data):
        from itertools import combinations

        from shiftdecomp import enumerate_proper_subgroups

        ctx = make_field(p)
        g = data.draw(st.sampled_from(enumerate_proper_subgroups(ctx)))
        allowed = set(g.elements.elements()) | {0}
        best = 0
        for size in range(p, 0, -1):
            if any(
                all((a - b) % p in allowed for a in combo for b in combo)
                for combo in combinations(range(p), size)
            ):
                best = size
                break
        assert max_difference_clique(ctx, g) == best
