import pytest

from coxlen import excess, reps, roots
from coxlen.errors import NotInSubgroupError, ResourceBudgetError
from coxlen.signedperm import (
    SignedCycleType,
    SignedPermutation,
    all_cycle_types,
    all_elements,
)


class TestInvolutionEnumeration:
    @pytest.mark.parametrize("n,count", [(1, 2), (2, 6), (3, 20), (4, 76), (5, 312)])
    def test_signed_counts(self, n, count):
        assert excess.count_involutions("B", n) == count

    @pytest.mark.parametrize("n,count", [(2, 2), (3, 4), (4, 10), (7, 232)])
    def test_unsigned_counts(self, n, count):
        assert excess.count_involutions("A", n) == count

    def test_generation_matches_filtering_small(self):
        # the permitted small-rank oracle: direct generation == group filter
        for flavor in ("A", "B", "D"):
            for n in (2, 3, 4):
                direct = sorted(w.window for w in excess.involutions(flavor, n))
                filtered = sorted(
                    w.window
                    for w in all_elements(n, unsigned=(flavor == "A"))
                    if w.is_involution()
                    and (flavor != "D" or w.parity_negative_entries() == 0)
                )
                assert direct == filtered

    def test_all_are_involutions(self):
        for w in excess.involutions("B", 4):
            assert w.is_involution()


class TestReversingInvolutions:
    def test_identity_reversed_by_all(self):
        e = SignedPermutation.identity(3)
        assert sum(1 for _ in excess.reversing_involutions(e, "B")) == 20

    def test_short_representative_count(self):
        w = SignedPermutation.from_cycles([(-1, 2)], 2)
        found = list(excess.reversing_involutions(w, "B"))
        assert len(found) == 4
        for sigma in found:
            tau = sigma * w
            assert tau.is_involution()
            assert sigma * tau == w

    @pytest.mark.parametrize("n", [3, 4])
    def test_count_recursion(self, n):
        w = SignedPermutation.from_cycles([(-1, 2)], n)
        count = sum(1 for _ in excess.reversing_involutions(w, "B"))
        inner = excess.count_involutions("B", n - 2)
        assert count == 4 * inner

    def test_budget_error(self):
        w = SignedPermutation.identity(9)
        with pytest.raises(ResourceBudgetError):
            list(excess.reversing_involutions(w, "B", budget=1000))


class TestExcess:
    def test_involution_is_zero(self):
        w = SignedPermutation.from_cycles([(-1, -3), (2,)], 3)
        assert w.is_involution()
        report = excess.excess(w, "B")
        assert report.excess == 0
        assert report.witness_valid()

    def test_short_representative_unique_additive(self):
        w = SignedPermutation.from_cycles([(-1, 2)], 2)
        report = excess.excess(w, "B")
        assert report.excess == 0
        assert report.sigma == SignedPermutation([1, -2])
        assert report.tau == SignedPermutation([2, 1])
        pairs, additive = excess.involution_pair_count(w, "B")
        assert (pairs, additive) == (4, 1)

    def test_max_reps_have_excess_zero_rank_4(self):
        for ct in all_cycle_types(4):
            w = reps.max_length_rep_for_type(ct)
            assert excess.excess(w, "B").excess == 0
            if ct.in_type_d():
                assert excess.excess(w, "D").excess == 0

    def test_excess_even_and_inverse_invariant(self):
        for w in all_elements(3):
            e = excess.excess(w, "B").excess
            assert e >= 0 and e % 2 == 0
            assert excess.excess(w.inverse(), "B").excess == e

    def test_flavor_d_membership_required(self):
        with pytest.raises(NotInSubgroupError):
            excess.excess(SignedPermutation([-1, 2]), "D")

    def test_flavor_a_needs_unsigned(self):
        with pytest.raises(ValueError):
            excess.excess(SignedPermutation([-1, 2]), "A")

    def test_twist_preserves_d_length_and_excess(self):
        for w in all_elements(4):
            if w.parity_negative_entries() != 0:
                continue
            wt = reps.twist_by_last_sign(w)
            assert roots.length_D(wt) == roots.length_D(w)
            rep = excess.excess(w, "D")
            assert excess.excess(wt, "D").excess == rep.excess
            if rep.excess == 0:
                sig_t = reps.twist_by_last_sign(rep.sigma)
                tau_t = reps.twist_by_last_sign(rep.tau)
                assert sig_t * tau_t == wt
                assert roots.length_D(sig_t) + roots.length_D(tau_t) == roots.length_D(wt)


class TestConjugacyClasses:
    def test_identity_class(self):
        d = excess.ClassDescriptor("B", 2, SignedCycleType((), (1, 1)))
        assert excess.conjugacy_class(d) == [SignedPermutation.identity(2)]

    def test_b3_three_cycle_class_size(self):
        d = excess.ClassDescriptor("B", 3, SignedCycleType((), (3,)))
        assert len(excess.conjugacy_class(d)) == 8

    def test_split_class_orbits(self):
        ct = SignedCycleType((), (2, 2))
        plus = excess.conjugacy_class(excess.ClassDescriptor("D", 4, ct, "plus"))
        minus = excess.conjugacy_class(excess.ClassDescriptor("D", 4, ct, "minus"))
        assert len(plus) == len(minus) == 6
        assert not set(plus) & set(minus)
        t = SignedPermutation([1, 2, 3, -4])
        assert {t * w * t for w in plus} == set(minus)
        whole = {
            w
            for w in all_elements(4)
            if w.parity_negative_entries() == 0 and w.cycle_type() == ct
        }
        assert set(plus) | set(minus) == whole

    def test_orbit_equals_filtered_class_rank5(self):
        from coxlen import _kernels as K

        ct = SignedCycleType((2,), (3,))
        gens = [g.to_codes() for g in excess.generators("B", 5)]
        start = reps.min_length_rep(ct)
        orbit = set(K.conjugacy_orbit(start.to_codes(), gens, 10**5))
        want = {w.to_codes() for w in all_elements(5) if w.cycle_type() == ct}
        assert orbit == want

    @pytest.mark.parametrize("flavor,n", [("B", 3), ("B", 4), ("D", 4), ("A", 5), ("B", 5), ("D", 5)])
    def test_classes_partition_group(self, flavor, n):
        total = 0
        seen = set()
        for d in excess.all_class_descriptors(flavor, n):
            members = excess.conjugacy_class(d)
            total += len(members)
            overlap = seen & set(members)
            assert not overlap
            seen.update(members)
        assert total == excess.group_order(flavor, n)

    def test_descriptor_validation(self):
        with pytest.raises(ValueError):
            excess.ClassDescriptor("B", 3, SignedCycleType((), (2,)))
        with pytest.raises(ValueError):
            excess.ClassDescriptor(
                "D", 4, SignedCycleType((), (1, 1, 2)), "plus"
            )

    def test_budget_error(self):
        d = excess.ClassDescriptor("B", 9, SignedCycleType((), (1,) * 9))
        with pytest.raises(ResourceBudgetError):
            excess.conjugacy_class(d)


class TestClassCensus:
    def test_identity_class(self):
        d = excess.ClassDescriptor("B", 2, SignedCycleType((), (1, 1)))
        c = excess.class_census(d)
        assert (c.size, c.max_length, c.max_count) == (1, 0, 1)
        assert c.excess_histogram == {0: 1}
        assert c.exists_max_zero and c.all_max_zero

    def test_b4_existence_everywhere(self):
        for c in excess.sweep_all_classes("B", 4):
            assert c.exists_max_zero
            assert c.min_length == reps.length_formulas(c.descriptor.label).min_b
            assert c.max_length == reps.length_formulas(c.descriptor.label).max_b

    def test_histogram_totals(self):
        for c in excess.sweep_all_classes("D", 4):
            assert sum(c.excess_histogram.values()) == c.max_count
            assert c.max_count >= 1


class TestPairCounts:
    def test_lemma_bound_rows(self):
        for n in (2, 3, 4):
            w = SignedPermutation.from_cycles([(-1, 2)], n)
            pairs, additive = excess.involution_pair_count(w, "B")
            assert pairs >= 2**n
            assert additive == 1
        w2 = SignedPermutation.from_cycles([(-1, 2)], 2)
        assert excess.involution_pair_count(w2, "B")[0] == 4


def test_product_reduction_exhaustive():
    report = excess.check_product_reduction()
    assert report.passed
    assert report.pairs_checked == 48
