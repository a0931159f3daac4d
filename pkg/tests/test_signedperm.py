import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from coxlen.errors import ParseError, RankMismatchError
from coxlen.signedperm import (
    SignedCycleType,
    SignedPermutation,
    all_cycle_types,
    all_elements,
    cycle_is_negative,
    format_cycles,
    format_window,
    parse_cycle_type,
    parse_element,
)


@st.composite
def signed_perms(draw, max_n=8, signed=True):
    n = draw(st.integers(1, max_n))
    perm = list(draw(st.permutations(list(range(1, n + 1)))))
    if signed:
        mask = draw(st.lists(st.booleans(), min_size=n, max_size=n))
        perm = [-v if m else v for v, m in zip(perm, mask)]
    return SignedPermutation(perm)


@st.composite
def signed_perm_pairs(draw, max_n=8, count=2):
    n = draw(st.integers(1, max_n))
    out = []
    for _ in range(count):
        perm = list(draw(st.permutations(list(range(1, n + 1)))))
        mask = draw(st.lists(st.booleans(), min_size=n, max_size=n))
        out.append(SignedPermutation([-v if m else v for v, m in zip(perm, mask)]))
    return tuple(out)


class TestCompose:
    def test_identity_neutral(self):
        w = SignedPermutation([-2, -3, 1])
        e = SignedPermutation.identity(3)
        assert e * w == w
        assert w * e == w

    def test_inverse_law(self):
        w = SignedPermutation.from_cycles([(-1, 3, 8)], 8)
        assert w * w.inverse() == SignedPermutation.identity(8)
        assert w.inverse() * w == SignedPermutation.identity(8)

    def test_unsigned_times_sign_change(self):
        # (138)·(-1) = (-1 +3 +8)
        g = SignedPermutation.from_cycles([(1, 3, 8)], 8)
        h = SignedPermutation.from_cycles([(-1,)], 8)
        assert g * h == SignedPermutation.from_cycles([(-1, 3, 8)], 8)

    def test_rank_mismatch(self):
        with pytest.raises(RankMismatchError):
            SignedPermutation.identity(3) * SignedPermutation.identity(4)

    @given(signed_perm_pairs(max_n=7, count=3))
    @settings(max_examples=60)
    def test_associative(self, triple):
        a, b, c = triple
        assert (a * b) * c == a * (b * c)

    @given(signed_perms())
    @settings(max_examples=60)
    def test_double_inverse(self, w):
        assert w.inverse().inverse() == w


class TestAction:
    def test_worked_example_action(self):
        # the calibrating example: 1 -> -3, 3 -> 8, 8 -> 1
        w = SignedPermutation.from_cycles([(-1, 3, 8)], 8)
        assert w(1) == -3
        assert w(3) == 8
        assert w(8) == 1
        assert w(-1) == 3


class TestCycles:
    def test_identity_fixed_points(self):
        assert SignedPermutation.identity(3).cycles() == ((1,), (2,), (3,))

    def test_window_example(self):
        assert SignedPermutation([-2, -3, 1]).cycles() == ((-1, -2, 3),)

    def test_roundtrip_exhaustive_small(self):
        for w in all_elements(4):
            assert SignedPermutation.from_cycles(w.cycles(), 4) == w

    def test_negative_cycle_parity(self):
        assert cycle_is_negative((-1, 2))
        assert not cycle_is_negative((-1, -2))
        assert not cycle_is_negative((1, 2, 3))

    def test_section_example_roundtrip(self):
        w = SignedPermutation.from_cycles([(-1, 7, -2, -9), (-3, 4, -6), (5, -8)], 9)
        assert SignedPermutation.from_cycles(w.cycles(), 9) == w


class TestCycleType:
    def test_worked_example(self):
        w = SignedPermutation.from_cycles([(1, 2), (3, -4, 5), (-6, 7, 8), (9,)], 9)
        assert w.cycle_type() == SignedCycleType((3, 3), (1, 2))

    def test_identity(self):
        assert SignedPermutation.identity(5).cycle_type() == SignedCycleType(
            (), (1, 1, 1, 1, 1)
        )

    def test_constant_on_conjugation_orbits_exhaustive(self):
        group = all_elements(3)
        for g in group:
            gi = g.inverse()
            for h in group:
                assert (g * h * gi).cycle_type() == h.cycle_type()

    @given(signed_perm_pairs(max_n=8))
    @settings(max_examples=80)
    def test_conjugation_invariant_random(self, pair):
        g, h = pair
        assert (g * h * g.inverse()).cycle_type() == h.cycle_type()

    def test_constant_along_generator_conjugations_rank4(self):
        # constancy along generator edges covers every conjugation orbit
        from coxlen.excess import generators

        gens = generators("B", 4)
        for h in all_elements(4):
            ct = h.cycle_type()
            for g in gens:
                assert (g * h * g).cycle_type() == ct

    def test_partition_of_rank(self):
        for ct in all_cycle_types(5):
            assert ct.n == 5
            assert list(ct.neg) == sorted(ct.neg)
            assert list(ct.pos) == sorted(ct.pos)


class TestParity:
    def test_identity_and_single_flip(self):
        assert SignedPermutation.identity(4).parity_negative_entries() == 0
        flip = SignedPermutation([1, 2, 3, -4])
        assert flip.parity_negative_entries() == 1

    def test_homomorphism_exhaustive(self):
        group = all_elements(3)
        for g in group:
            pg = g.parity_negative_entries()
            for h in group:
                assert (g * h).parity_negative_entries() == pg ^ h.parity_negative_entries()


class TestNotation:
    def test_cycle_text_roundtrip(self):
        text = "(-1,+7,-2,-9)(-3,+4,-6)(+5,-8)"
        assert format_cycles(parse_element(text, 9)) == text

    def test_window_text(self):
        w = parse_element("[-2,-3,1]", 3)
        assert w.window == (-2, -3, 1)
        assert format_window(w) == "[-2,-3,1]"

    def test_unicode_minus_and_spaces(self):
        assert parse_element("(−1 +3 8)", 8) == SignedPermutation.from_cycles(
            [(-1, 3, 8)], 8
        )

    def test_print_parse_identity_exhaustive(self):
        for w in all_elements(3):
            assert parse_element(format_cycles(w), 3) == w
            assert parse_element(format_window(w), 3) == w

    @pytest.mark.parametrize(
        "text",
        ["", "(1,2", "[1,2]", "(1,99)", "(1,2)(2,3)", "[1,1,2]", "(1,,2)"],
    )
    def test_parse_errors(self, text):
        with pytest.raises(ParseError):
            parse_element(text, 3)

    def test_cycle_type_grammar(self):
        ct = parse_cycle_type("2,4;3")
        assert ct == SignedCycleType((2, 4), (3,))
        assert parse_cycle_type("neg:2,4|pos:3") == ct
        assert parse_cycle_type(";1,1") == SignedCycleType((), (1, 1))
        assert parse_cycle_type("2,4;") == SignedCycleType((2, 4), ())
        assert str(ct) == "2,4;3"
        with pytest.raises(ParseError):
            parse_cycle_type("2,4")
        with pytest.raises(ParseError):
            parse_cycle_type("a;b")


class TestInvariants:
    def test_window_validation(self):
        with pytest.raises(ValueError):
            SignedPermutation([1, 1])
        with pytest.raises(ValueError):
            SignedPermutation([1, 3])
        with pytest.raises(ValueError):
            SignedPermutation([])

    def test_rank_cap(self):
        with pytest.raises(ValueError):
            SignedPermutation(range(1, 66))

    def test_split_detection(self):
        assert SignedCycleType((), (2, 2)).splits_in_d()
        assert not SignedCycleType((), (1, 2)).splits_in_d()
        assert not SignedCycleType((2,), (2,)).splits_in_d()
        assert SignedCycleType((1, 1), (2,)).in_type_d()
        assert not SignedCycleType((1,), (1, 2)).in_type_d()

    def test_codes_roundtrip(self):
        for w in all_elements(3):
            assert SignedPermutation.from_codes(w.to_codes()) == w

    @given(signed_perms())
    @settings(max_examples=40)
    def test_order_positive(self, w):
        k = w.order()
        assert k >= 1
        assert w**k == SignedPermutation.identity(w.n)
