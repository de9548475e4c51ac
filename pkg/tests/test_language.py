import random
import threading

import pytest
from hypothesis import given

from _corpus import ALPHABET, all_words, corpus, word_set
from conftest import exps
from regeq.bisim import bisimilar_k
from regeq.language import (
    Lang,
    comp,
    enumerate_words,
    member,
    one,
    plus,
    singleton,
    star,
    zero,
)
from regeq.semantics import denotational
from regeq.syntax import parse

WORDS6 = list(all_words(max_len=6))


def lang(text):
    return denotational(parse(text))


class TestConstants:
    def test_zero(self):
        assert zero().eps is False
        assert zero().delta("a").eps is False
        assert not any(member(zero(), w) for w in WORDS6)
        assert len(WORDS6) == 127

    def test_one(self):
        assert one().eps is True
        assert member(one(), ())
        assert not member(one(), ("a",))
        assert one().delta("a").eps is False

    def test_singleton(self):
        s = singleton("a")
        assert s.eps is False
        assert s.delta("a").eps is True
        assert s.delta("b").eps is False
        assert member(s, ("a",))
        assert not member(s, ("a", "a"))


class TestCombinators:
    def test_plus(self):
        assert plus(zero(), one()).eps is True
        assert plus(zero(), zero()).eps is False

    def test_comp(self):
        assert comp(one(), one()).eps is True
        ab = comp(singleton("a"), singleton("b"))
        assert member(ab, ("a", "b"))
        assert not member(ab, ("b", "a"))
        assert not member(ab, ("a",))

    def test_star(self):
        assert star(zero()).eps is True
        sa = star(singleton("a"))
        assert member(sa, ("a", "a", "a"))
        assert not member(sa, ("a", "b"))

    def test_universal(self):
        u = star(plus(singleton("a"), singleton("b")))
        assert all(member(u, w) for w in WORDS6)

    def test_member_empty_word_is_eps(self):
        for text in ["0", "1", "a", "a*", "ab+1"]:
            assert member(lang(text), ()) == lang(text).eps

    def test_delta_total_over_any_symbol(self):
        assert lang("a*").delta("z").eps is False
        assert lang("a*").delta(42).eps is False

    @pytest.mark.parametrize("text", ["ab", "a*b", "(a+b)*a", "1+a", "(ab)*"])
    def test_defining_equations_hold_exactly(self, text):
        # The shared results must meet the combinator equations on the nose.
        l1, l2 = lang(text), lang("b*a")
        for a in ALPHABET:
            assert plus(l1, l2).delta(a) is plus(l1.delta(a), l2.delta(a))
            guard = one() if l1.eps else zero()
            assert comp(l1, l2).delta(a) is plus(comp(l1.delta(a), l2), comp(guard, l2.delta(a)))
            assert star(l1).delta(a) is comp(l1.delta(a), star(l1))
        assert plus(l1, l2).eps == (l1.eps or l2.eps)
        assert comp(l1, l2).eps == (l1.eps and l2.eps)
        assert star(l1).eps is True

    @pytest.mark.parametrize("text", ["ab", "a*b", "1", "0", "(a+b)*"])
    def test_unit_annihilator_shortcuts_meet_equations(self, text):
        l = lang(text)
        for a in ALPHABET:
            assert comp(zero(), l).delta(a) is plus(comp(zero(), l), comp(zero(), l.delta(a)))
            assert comp(one(), l).delta(a) is plus(comp(zero(), l), comp(one(), l.delta(a)))
            assert comp(l, one()).delta(a) is plus(
                comp(l.delta(a), one()), comp(one() if l.eps else zero(), zero())
            )
            assert plus(zero(), l).delta(a) is plus(zero(), l.delta(a))


@pytest.fixture(scope="module")
def langs():
    return [denotational(e) for e in corpus(60, 8, seed=7)]


class TestLaws:
    def test_observation_is_deterministic(self, langs):
        for l in langs:
            for a in ALPHABET:
                assert bisimilar_k(8, l.delta(a), l.delta(a), ALPHABET)
                assert l.delta(a) is l.delta(a)

    def test_units(self, langs):
        for l in langs:
            assert bisimilar_k(8, plus(zero(), l), l, ALPHABET)
            assert bisimilar_k(8, comp(one(), l), l, ALPHABET)
            assert bisimilar_k(8, comp(l, one()), l, ALPHABET)
            assert bisimilar_k(8, comp(zero(), l), zero(), ALPHABET)

    def test_aci(self, langs):
        rng = random.Random(3)
        for l1 in langs:
            l2, l3 = rng.choice(langs), rng.choice(langs)
            assert bisimilar_k(8, plus(l1, l2), plus(l2, l1), ALPHABET)
            assert bisimilar_k(8, plus(l1, plus(l2, l3)), plus(plus(l1, l2), l3), ALPHABET)
            assert bisimilar_k(8, plus(l1, l1), l1, ALPHABET)

    def test_plus_of_self_by_membership(self, langs):
        for l in langs:
            for w in WORDS6:
                assert member(plus(l, l), w) == member(l, w)


class TestSetOracle:
    @given(exps(max_leaves=8))
    def test_membership_matches_word_sets(self, e):
        words = word_set(e, 6)
        l = denotational(e)
        for w in WORDS6:
            assert member(l, w) == (w in words)

    def test_seeded_corpus_matches_word_sets(self):
        for e in corpus(300, 8, seed=11):
            words = word_set(e, 6)
            l = denotational(e)
            assert [w for w in WORDS6 if member(l, w)] == [w for w in WORDS6 if w in words]


class TestEnumerate:
    def test_examples(self):
        assert enumerate_words(zero(), ["a", "b"], 3) == []
        assert enumerate_words(one(), ["a", "b"], 3) == [()]
        l = comp(singleton("a"), star(singleton("b")))
        assert enumerate_words(l, ["a", "b"], 2) == [("a",), ("a", "b")]

    def test_alphabet_order_drives_lexicographic_order(self):
        l = lang("(a+b)(a+b)")
        assert enumerate_words(l, ["b", "a"], 2) == [("b", "b"), ("b", "a"), ("a", "b"), ("a", "a")]

    @given(exps(max_leaves=8))
    def test_equals_naive_filter(self, e):
        l = denotational(e)
        assert enumerate_words(l, list(ALPHABET), 5) == [
            w for w in all_words(max_len=5) if member(l, w)
        ]

    @pytest.mark.parametrize("alphabet, n", [([], 2), (["a", "a"], 2), (["a"], -1)])
    def test_bad_arguments(self, alphabet, n):
        with pytest.raises(ValueError):
            enumerate_words(one(), alphabet, n)


def test_concurrent_observers_share_one_derivative():
    l = lang("(a+b)*ab(a+b)*")
    seen = []
    barrier = threading.Barrier(8)

    def observe():
        barrier.wait()
        seen.append(l.delta("a").delta("b"))

    threads = [threading.Thread(target=observe) for _ in range(8)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert all(x is seen[0] for x in seen)


def test_custom_behaviour():
    # An arbitrary hand-built coalgebra state: words of even length.
    even = Lang(True, lambda a: odd)
    odd = Lang(False, lambda a: even)
    assert [len(w) for w in enumerate_words(even, ["a"], 4)] == [0, 2, 4]
    assert bisimilar_k(8, even, lang("((a+b)(a+b))*"), ALPHABET)
