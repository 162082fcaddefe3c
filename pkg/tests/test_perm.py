import pytest
from hypothesis import given, strategies as st

from helpers import all_perms, brute_occurrences, brute_tail_pairs, class_patterns
from permdiagram.perm import (PatternClass, Permutation, PermutationError, TailPair,
                              extreme_positions, identity, inversions, make_permutation,
                              occurrences, parse_permutation, reversal, stat, tail_pairs)

P = parse_permutation


def perms(max_n=10):
    return st.integers(1, max_n).flatmap(
        lambda n: st.permutations(range(1, n + 1))).map(Permutation)


class TestMakePermutation:
    def test_worked_example(self):
        pi = make_permutation([3, 8, 5, 10, 2, 4, 1, 9, 6, 7])
        assert pi.n == 10
        assert pi.at(4) == 10

    def test_singleton(self):
        assert make_permutation([1]).n == 1

    @pytest.mark.parametrize("bad", [[1, 1, 2], [0, 1], [1, 3], [], [1, 2.0]])
    def test_rejects(self, bad):
        with pytest.raises(PermutationError):
            make_permutation(bad)

    @pytest.mark.parametrize("text", ["3 8 5 10 2 4 1 9 6 7", "3,8,5,10,2,4,1,9,6,7", " 3, 8 5,10 2 4 1 9 6 7 "])
    def test_parse_forms(self, text):
        assert str(P(text)) == "3 8 5 10 2 4 1 9 6 7"

    def test_parse_garbage(self):
        with pytest.raises(PermutationError):
            P("1 two 3")

    def test_inverse(self):
        pi = P("3 1 2")
        assert pi.inverse() == (2, 3, 1)


class TestOccurrences:
    def test_paper_1243(self):
        assert occurrences(P("1 2 4 3"), P("7 1 4 2 6 3 5")) == [(2, 3, 5, 7), (2, 4, 5, 6), (2, 4, 5, 7)]

    def test_paper_2143(self):
        assert occurrences(P("2 1 4 3"), P("7 1 4 2 6 3 5")) == [(3, 4, 5, 7)]

    def test_paper_1234_once_2134_never(self):
        pi = P("7 1 4 2 6 3 5")
        assert occurrences(P("1 2 3 4"), pi) == [(2, 4, 6, 7)]
        assert occurrences(P("2 1 3 4"), pi) == []

    def test_no_12_in_21(self):
        assert occurrences(P("1 2"), P("2 1")) == []

    def test_longer_pattern(self):
        assert occurrences(P("1 2 3"), P("1 2")) == []

    @pytest.mark.parametrize("n", range(1, 7))
    @pytest.mark.parametrize("tau", ["1 2 3", "1 3 2", "2 1 4 3", "1 2"])
    def test_matches_brute_force(self, n, tau):
        tau = P(tau)
        for w in all_perms(n):
            assert occurrences(tau, Permutation(w)) == brute_occurrences(tau, w)

    @pytest.mark.parametrize("n", range(1, 7))
    def test_reverse_complement_symmetry(self, n):
        for tau in (P("1 3 2"), P("1 2 4 3")):
            for w in all_perms(n):
                pi = Permutation(w)
                assert len(occurrences(tau, pi)) == len(
                    occurrences(tau.reverse_complement(), pi.reverse_complement()))


class TestPatternClass:
    @pytest.mark.parametrize("m", range(2, 7))
    def test_sizes_and_shape(self, m):
        import math
        for kind in "AB":
            members = PatternClass(kind, m).patterns()
            assert len(members) == math.factorial(m - 2)
            assert sorted(members) == sorted(class_patterns(kind, m))

    def test_validation(self):
        with pytest.raises(ValueError):
            PatternClass("C", 3)
        with pytest.raises(ValueError):
            PatternClass.A(1)


class TestTailPairs:
    def test_paper_a4(self):
        assert tail_pairs(P("7 1 4 2 6 3 5"), PatternClass.A(4)) == {(5, 6), (5, 7)}

    def test_paper_b4(self):
        assert tail_pairs(P("7 1 4 2 6 3 5"), PatternClass.B(4)) == {TailPair(6, 7)}

    @pytest.mark.parametrize("n", range(1, 8))
    def test_identity_has_no_a_pairs(self, n):
        for m in range(2, n + 3):
            assert tail_pairs(identity(n), PatternClass.A(m)) == set()

    @pytest.mark.parametrize("n", range(1, 7))
    @pytest.mark.parametrize("m", [2, 3, 4])
    def test_harvest_oracle(self, n, m):
        for w in all_perms(n):
            pi = Permutation(w)
            for kind in "AB":
                assert tail_pairs(pi, PatternClass(kind, m)) == brute_tail_pairs(w, kind, m)

    def test_m_beyond_n(self):
        pi = P("2 1 3")
        assert stat(pi, PatternClass.A(5)) == stat(pi, PatternClass.B(5)) == 0


class TestStat:
    def test_paper_values(self):
        pi = P("7 1 4 2 6 3 5")
        assert stat(pi, PatternClass.A(4)) == 2
        assert stat(pi, PatternClass.B(4)) == 1

    def test_321(self):
        assert stat(P("3 2 1"), PatternClass.A(2)) == 3

    def test_1234_b3(self):
        assert stat(P("1 2 3 4"), PatternClass.B(3)) == 3

    @pytest.mark.parametrize("n", range(1, 7))
    def test_zero_iff_avoidance(self, n):
        for w in all_perms(n):
            pi = Permutation(w)
            for m in range(2, 6):
                for kind in "AB":
                    cls = PatternClass(kind, m)
                    avoids = all(not occurrences(t, pi) for t in cls.patterns())
                    assert (stat(pi, cls) == 0) == avoids

    @given(perms())
    def test_pairs_split(self, pi):
        n = pi.n
        assert stat(pi, PatternClass.A(2)) + stat(pi, PatternClass.B(2)) == n * (n - 1) // 2
        assert stat(pi, PatternClass.A(2)) == inversions(pi)

    @given(perms(), st.integers(2, 8))
    def test_monotone_in_m(self, pi, m):
        for kind in "AB":
            assert stat(pi, PatternClass(kind, m + 1)) <= stat(pi, PatternClass(kind, m))


class TestExtremes:
    def test_ltr_minima(self):
        assert extreme_positions(P("2 6 7 1 3 4 5"), "ltr-minima") == [1, 4]

    def test_rl_maxima(self):
        assert extreme_positions(P("1 3 2"), "rl-maxima") == [2, 3]

    @pytest.mark.parametrize("n", [1, 4, 9])
    def test_identity(self, n):
        assert extreme_positions(identity(n), "ltr-minima") == [1]
        assert extreme_positions(reversal(n), "ltr-minima") == list(range(1, n + 1))

    def test_unknown_kind(self):
        with pytest.raises(ValueError):
            extreme_positions(P("1"), "peaks")
