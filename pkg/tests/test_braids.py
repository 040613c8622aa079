import pytest
from hypothesis import given, strategies as st

from chaingroup import braids, oracle
from chaingroup.braids import BraidWord


def letters_for(n):
    return st.lists(
        st.integers(-(n - 1), n - 1).filter(lambda x: x != 0), max_size=12
    ).map(tuple)


class TestBraidWord:
    def test_letter_range_enforced(self):
        with pytest.raises(ValueError):
            BraidWord(3, (3,))
        with pytest.raises(ValueError):
            BraidWord(3, (0,))
        with pytest.raises(ValueError):
            BraidWord(1, ())

    def test_concatenation_and_identity(self):
        u = BraidWord(4, (1, 2))
        v = BraidWord(4, (3,))
        assert (u * v).letters == (1, 2, 3)
        assert (braids.identity(4) * u).letters == u.letters
        assert (u * braids.identity(4)).letters == u.letters

    def test_inverse_reverses_and_flips(self):
        w = BraidWord(4, (1, -2, 3))
        assert w.inverse().letters == (-3, 2, -1)

    @given(st.integers(2, 6).flatmap(lambda n: st.tuples(st.just(n), letters_for(n), letters_for(n), letters_for(n))))
    def test_concatenation_associative(self, data):
        n, a, b, c = data
        u, v, w = BraidWord(n, a), BraidWord(n, b), BraidWord(n, c)
        assert ((u * v) * w).letters == (u * (v * w)).letters

    def test_strand_mismatch(self):
        with pytest.raises(ValueError):
            BraidWord(3, (1,)) * BraidWord(4, (1,))


class TestGarside:
    def test_small_cases(self):
        assert braids.garside(3).letters == (1, 2, 1)
        assert braids.garside(2).letters == (1,)

    def test_length_and_exponent(self):
        for n in range(2, 13):
            w = braids.garside(n)
            assert len(w) == n * (n - 1) // 2
            assert braids.exponent(w) == n * (n - 1) // 2

    def test_too_few_strands(self):
        with pytest.raises(ValueError):
            braids.garside(1)


class TestFlipDelta:
    def test_small_cases(self):
        assert braids.flip_delta(3).letters == (1, 2)
        assert braids.flip_delta(2).letters == (1,)

    def test_exponent_is_n_minus_1(self):
        assert braids.exponent(braids.flip_delta(5)) == 4


class TestGenerator:
    def test_in_range_index(self):
        assert braids.generator(6, 3).letters == (3,)
        assert braids.generator(6, 7).letters == (1,)

    def test_wrap_index_expansion(self):
        assert braids.generator(6, 0).letters == (1, 2, 3, 4, 5, 5, -5, -4, -3, -2, -1)

    def test_periodicity_mod_n(self):
        for n in range(3, 9):
            for k in range(-3 * n, 3 * n + 1):
                assert oracle.are_equal(braids.generator(n, k), braids.generator(n, k + n))

    def test_needs_three_strands(self):
        with pytest.raises(ValueError):
            braids.generator(2, 0)


class TestExponent:
    def test_examples(self):
        assert braids.exponent(braids.garside(3)) == 3
        assert braids.exponent(BraidWord(5, (3, -1))) == 0
        assert braids.exponent(braids.identity(4)) == 0

    @given(st.integers(2, 6).flatmap(lambda n: st.tuples(st.just(n), letters_for(n), letters_for(n))))
    def test_additive(self, data):
        n, a, b = data
        u, v = BraidWord(n, a), BraidWord(n, b)
        assert braids.exponent(u * v) == braids.exponent(u) + braids.exponent(v)

    def test_commutator_subgroup_words(self):
        w = BraidWord(5, (3, -1))
        assert braids.exponent(w) == 0


class TestGamma:
    def test_interior_index(self):
        assert braids.gamma(6, 1).letters == (1, 2, 1, 3, 2, 1)
        assert braids.exponent(braids.gamma(6, 1)) == 6

    def test_top_index_uses_wrap_expansion(self):
        w = braids.gamma(6, 5)
        expected = (
            braids.generator(6, 5)
            * braids.generator(6, 6)
            * braids.generator(6, 5)
            * braids.generator(6, 7)
            * braids.generator(6, 6)
            * braids.generator(6, 5)
        )
        assert w.letters == expected.letters

    def test_swaps_odd_generators_by_conjugation(self):
        n = 6
        for i in (1, 3):
            g = braids.gamma(n, i)
            assert oracle.are_equal(
                g * BraidWord(n, (i,)) * g.inverse(), BraidWord(n, (i + 2,))
            )
            assert oracle.are_equal(
                g * BraidWord(n, (i + 2,)) * g.inverse(), BraidWord(n, (i,))
            )
        g = braids.gamma(n, 1)
        assert oracle.are_equal(g * BraidWord(n, (5,)) * g.inverse(), BraidWord(n, (5,)))

    def test_rejects_bad_indices(self):
        with pytest.raises(ValueError):
            braids.gamma(6, 2)
        with pytest.raises(ValueError):
            braids.gamma(6, 7)
        with pytest.raises(ValueError):
            braids.gamma(5, 1)


class TestFreeReduce:
    @pytest.mark.parametrize(
        "before,after",
        [((1, -1), ()), ((1, 2, -2, -1), ()), ((1, 2, 1), (1, 2, 1))],
    )
    def test_examples(self, before, after):
        assert braids.free_reduce(BraidWord(3, before)).letters == after

    @given(st.integers(2, 5).flatmap(lambda n: st.tuples(st.just(n), letters_for(n))))
    def test_preserves_braid(self, data):
        n, ls = data
        w = BraidWord(n, ls)
        assert oracle.are_equal(braids.free_reduce(w), w)


class TestTextFormat:
    def test_round_trip(self):
        w = BraidWord(6, (1, -3, 5))
        assert braids.parse_braid(braids.format_braid(w)).letters == w.letters

    def test_wrap_index_on_input(self):
        w = braids.parse_braid("n=6 0 2")
        assert w.letters == braids.generator(6, 0).letters + (2,)
        assert braids.parse_braid("n=6 7").letters == (1,)

    def test_header_required(self):
        with pytest.raises(ValueError):
            braids.parse_braid("1 2 1")
