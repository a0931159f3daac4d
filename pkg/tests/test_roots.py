import random

import pytest

from coxlen import roots
from coxlen.reps import longest_element
from coxlen.signedperm import SignedPermutation, all_elements

from conftest import random_signed


def brute_inversions(window):
    """Independent pairwise-comparison oracle for unsigned inversion counts."""
    n = len(window)
    return sum(
        1 for i in range(n) for j in range(i + 1, n) if window[i] > window[j]
    )


def brute_negative_roots(w, flavor):
    """Independent oracle: walk every positive root and test its image."""
    out = []
    for r in roots.positive_roots(flavor, w.n):
        if not roots.root_is_positive(roots.act(w, r)):
            out.append(r)
    return out


class TestRootTables:
    @pytest.mark.parametrize("n", [1, 2, 3, 5, 8])
    def test_counts(self, n):
        assert roots.RootSystemView("B", n).num_positive == n * n
        assert len(roots.RootSystemView("B", n).positive_roots()) == n * n
        assert len(roots.RootSystemView("A", n).positive_roots()) == n * (n - 1) // 2
        assert len(roots.RootSystemView("D", n).positive_roots()) == n * n - n

    def test_dense_index_bijective(self):
        n = 5
        table = roots.positive_roots("B", n)
        assert [roots.root_index(n, r) for r in table] == list(range(n * n))
        for i, r in enumerate(table):
            assert roots.root_from_index(n, i) == r

    def test_negation_involution(self):
        for r in roots.positive_roots("B", 4):
            assert roots.root_negate(roots.root_negate(r)) == r
            assert not roots.root_is_positive(roots.root_negate(r))


class TestAction:
    def test_worked_example(self):
        w = SignedPermutation.from_cycles([(-1, 3, 8)], 8)
        assert roots.act(w, (1, 0)) == (-3, 0)

    def test_identity(self):
        e = SignedPermutation.identity(4)
        for r in roots.positive_roots("B", 4):
            assert roots.act(e, r) == r

    def test_linearity_exhaustive(self):
        for w in all_elements(3):
            for r in roots.positive_roots("B", 3):
                assert roots.act(w, roots.root_negate(r)) == roots.root_negate(
                    roots.act(w, r)
                )


class TestInversionSets:
    def test_type_a_identity_and_reversal(self):
        n = 5
        assert roots.inversion_set_A(SignedPermutation.identity(n)) == 0
        rev = longest_element("A", n)
        bits = roots.inversion_set_A(rev)
        assert bin(bits).count("1") == n * (n - 1) // 2

    def test_type_a_against_pairwise_oracle(self):
        w = SignedPermutation.from_cycles([(1, 9, 2, 8), (3, 7, 4, 6, 5)], 9)
        assert bin(roots.inversion_set_A(w)).count("1") == brute_inversions(w.window)
        assert roots.length_A(w) == brute_inversions(w.window)

    def test_type_a_rejects_signed(self):
        with pytest.raises(ValueError):
            roots.inversion_set_A(SignedPermutation([-1, 2]))
        with pytest.raises(ValueError):
            roots.length_A(SignedPermutation([-1, 2]))

    def test_sigma_of_worked_example(self):
        w = SignedPermutation.from_cycles([(-1, 3, 8)], 8)
        assert roots.sigma_set(w) == 1 << 0  # exactly e_1
        assert roots.sigma_size(w) == 1

    def test_lambda_sigma_of_window_example(self):
        w = SignedPermutation([-2, -3, 1])
        negs = brute_negative_roots(w, "B")
        assert len([r for r in negs if roots.root_is_long(r)]) == 4
        assert len([r for r in negs if not roots.root_is_long(r)]) == 2
        assert roots.lambda_size(w) == 4
        assert roots.sigma_size(w) == 2
        assert roots.length_B(w) == 6

    def test_identity_empty(self):
        e = SignedPermutation.identity(6)
        assert roots.lambda_set(e) == 0
        assert roots.sigma_set(e) == 0

    def test_counters_match_bitsets_exhaustive(self):
        for w in all_elements(3):
            negs = brute_negative_roots(w, "B")
            assert roots.lambda_size(w) == sum(1 for r in negs if roots.root_is_long(r))
            assert roots.sigma_size(w) == sum(1 for r in negs if not roots.root_is_long(r))
            assert bin(roots.inversion_bitset(w, "B")).count("1") == len(negs)


class TestLengths:
    @pytest.mark.parametrize("n", [1, 2, 3, 5])
    def test_longest_elements(self, n):
        assert roots.length_B(longest_element("B", n)) == n * n
        if n >= 2:
            assert roots.length_D(longest_element("D", n)) == n * n - n

    def test_length_of_inverse_exhaustive(self):
        for n in (2, 3, 4):
            for w in all_elements(n):
                wi = w.inverse()
                assert roots.length_B(w) == roots.length_B(wi)
                assert roots.length_D(w) == roots.length_D(wi)

    def test_longest_complement_exhaustive(self):
        for n in (2, 3, 4):
            w0 = longest_element("B", n)
            for w in all_elements(n):
                ww0 = w * w0
                assert roots.lambda_size(ww0) == (n * n - n) - roots.lambda_size(w)
                assert roots.sigma_size(ww0) == n - roots.sigma_size(w)

    def test_lower_bounds_from_cycle_type(self):
        # for every element: |Λ| ≥ n - z + 2·Σ(ν-i)λ_i and |Σ| ≥ ν
        for n in (2, 3, 4, 5):
            for w in all_elements(n):
                ct = w.cycle_type()
                nu, z = ct.num_neg, ct.num_cycles
                bound = n - z + 2 * sum(
                    (nu - i) * p for i, p in enumerate(ct.neg, start=1)
                )
                assert roots.lambda_size(w) >= bound
                assert roots.sigma_size(w) >= nu


class TestLengthIdentity:
    def test_trivial_cases(self):
        e = SignedPermutation.identity(4)
        rep = roots.verify_length_identity(e, e, "B")
        assert rep.holds and rep.len_gh == 0 and rep.overlap == 0
        w = SignedPermutation([-3, 1, -4, 2])
        rep = roots.verify_length_identity(w, w.inverse(), "B")
        assert rep.holds
        assert rep.len_gh == 0
        assert rep.overlap == roots.length_B(w)

    def test_exhaustive_small(self):
        group = all_elements(3)
        for flavor in ("B", "D"):
            for g in group:
                for h in group:
                    assert roots.verify_length_identity(g, h, flavor).holds

    def test_random_pairs_mid_rank(self, rng):
        for _ in range(1000):
            g = random_signed(rng, 6)
            h = random_signed(rng, 6)
            assert roots.verify_length_identity(g, h, "B").holds

    def test_type_a_flavor(self, rng):
        for _ in range(200):
            g = random_signed(rng, 6, signed=False)
            h = random_signed(rng, 6, signed=False)
            assert roots.verify_length_identity(g, h, "A").holds


class TestDisjointUnions:
    def test_single_factor(self):
        t = SignedPermutation.from_cycles([(1, 2)], 4)
        assert roots.check_involution_product([t], "A").passed

    def test_stair_factor_families(self):
        from coxlen import reps

        parts = reps.normalize_partition((8, 5))
        n = sum(parts)
        sigmas, taus = [], []
        for cyc in reps.stair_cycles(parts):
            s, t = reps.cycle_involution_pair(cyc, n)
            sigmas.append(s)
            taus.append(t)
        assert roots.check_involution_product(sigmas, "A").passed
        assert roots.check_involution_product(taus, "A").passed

    def test_hypothesis_not_met_is_distinguished(self):
        # interleaved supports break the stabilization hypothesis
        t1 = SignedPermutation.from_cycles([(1, 3)], 4)
        t2 = SignedPermutation.from_cycles([(2, 4)], 4)
        report = roots.check_involution_product([t1, t2], "A")
        assert not report.hypothesis_met
        assert not report.passed

    def test_product_rule_from_reduced_split(self, rng):
        from coxlen.excess import generators

        gens = generators("B", 4)
        for _ in range(100):
            w = random_signed(rng, 4)
            word = []
            cur = w
            while roots.length_B(cur):
                for idx, g in enumerate(gens):
                    if roots.length_B(cur * g) < roots.length_B(cur):
                        word.append(idx)
                        cur = cur * g
                        break
            word.reverse()
            cut = rng.randint(0, len(word))
            g = SignedPermutation.identity(4)
            for i in word[:cut]:
                g = g * gens[i]
            h = SignedPermutation.identity(4)
            for i in word[cut:]:
                h = h * gens[i]
            report = roots.check_product_inversions(g, h, "B")
            assert report.hypothesis_met and report.equality_holds

    def test_non_involution_rejected(self):
        c = SignedPermutation.from_cycles([(1, 2, 3)], 3)
        report = roots.check_involution_product([c], "A")
        assert not report.hypothesis_met


class TestFormatting:
    def test_bitset_printing(self):
        n = 5
        bits = 0
        for r in [(4, 0), (1, -3), (2, 5)]:
            bits |= 1 << roots.root_index(n, r)
        assert roots.format_bitset(bits, n) == "e4, e1-e3, e2+e5"
