from math import comb

import pytest

from subword_mobius.counting import (
    WordType,
    alternating_sum_M,
    chain_T_closed,
    count_M_bruteforce,
    count_M_iterated,
    count_M_recurrence,
    word_type,
)
from subword_mobius.mobius import mob_pat
from subword_mobius.words import GroundPoset, Word, parse_word, words_of_type, words_up_to, word_leq


def test_word_type():
    assert word_type(parse_word("a1,c,a2", 2)) == WordType(3, 1)
    assert word_type(Word()) == WordType(0, 0)
    assert word_type(Word.c(2)) == WordType(2, 2)
    with pytest.raises(ValueError):
        WordType(1, 2)
    assert WordType(3, 1).canonical == parse_word("a1,a1,c", 1)


class TestM:
    def test_examples(self):
        assert count_M_bruteforce(2, (1, 1), (2, 1)) == 4
        assert count_M_bruteforce(2, (2, 0), (1, 0)) == 0
        assert count_M_recurrence(2, (1, 1), (2, 2)) == 1
        assert count_M_bruteforce(2, (1, 1), (3, 2)) == 6
        assert count_M_recurrence(2, (1, 1), (3, 2)) == 6

    def test_malformed(self):
        with pytest.raises(ValueError):
            count_M_bruteforce(2, (1, 2), (3, 2))
        with pytest.raises(ValueError):
            count_M_recurrence(2, (1, 1), (2, 3))

    def test_c_power_lower_word(self):
        for s in (1, 2, 3):
            for n in range(7):
                for i in range(n + 1):
                    for k in range(i + 1):
                        assert count_M_bruteforce(s, (k, k), (n, i)) == comb(n, i) * s ** (n - i)

    @pytest.mark.parametrize("s", [1, 2, 3])
    def test_type_invariance(self, s):
        P = GroundPoset(s)
        for w in words_up_to(P, 4):
            for n in range(len(w), 5):
                for q in range(n + 1):
                    direct = sum(1 for z in words_of_type(P, n, q) if word_leq(w, z, P))
                    assert direct == count_M_bruteforce(s, w.type, (n, q))

    @pytest.mark.parametrize("s", [1, 2, 3])
    def test_engines(self, s):
        for n in range(6):
            for q in range(n + 1):
                for m in range(n + 1):
                    for p in range(m + 1):
                        brute = count_M_bruteforce(s, (m, p), (n, q))
                        assert count_M_recurrence(s, (m, p), (n, q)) == brute
                        if p <= q:
                            for depth in range(1, p + 1):
                                assert count_M_iterated(s, (m, p), (n, q), depth) == brute

    def test_iterated_domain(self):
        with pytest.raises(ValueError):
            count_M_iterated(2, (2, 1), (3, 2), 2)


class TestT:
    def test_examples(self):
        for s in (1, 2, 3):
            for n in range(5):
                assert chain_T_closed(s, n, n) == -1
            assert chain_T_closed(s, 0, 1) == s - 1
            assert chain_T_closed(s, 3, 2) == 0
        assert chain_T_closed(2, 1, 2) == 3

    @pytest.mark.parametrize("s", [1, 2, 3])
    def test_matches_chain_count(self, s):
        P = GroundPoset(s)
        for n in range(6):
            for k in range(n + 1):
                assert chain_T_closed(s, k, n) == mob_pat(Word.c(k), n, P)

    def test_recurrence(self):
        for s in range(1, 6):
            for l in range(1, 11):
                for k in range(1, l + 1):
                    assert chain_T_closed(s, k, l) - chain_T_closed(s, k - 1, l - 1) == -s * chain_T_closed(s, k, l - 1)


class TestAlternating:
    def test_examples(self):
        assert count_M_bruteforce(2, (1, 0), (1, 0)) == 1
        assert count_M_bruteforce(2, (1, 0), (1, 1)) == 1
        assert alternating_sum_M(2, 1, 1) == 0
        assert alternating_sum_M(3, 1, 2) == 0
        assert alternating_sum_M(2, 2, 3) == 0

    def test_sweep(self):
        for s in (1, 2, 3):
            for beta in range(1, 6):
                for alpha in range(1, beta + 1):
                    assert alternating_sum_M(s, alpha, beta) == 0

    def test_needs_positive_alpha(self):
        with pytest.raises(ValueError):
            alternating_sum_M(2, 0, 3)
        # alpha = 0 genuinely fails: every word is counted
        assert sum((-1) ** i * count_M_bruteforce(2, (0, 0), (2, i)) for i in range(3)) != 0
