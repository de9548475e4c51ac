import pydot
import pytest
from hypothesis import given

from _corpus import ALPHABET, all_words, corpus
from conftest import exps
from regeq.automaton import Dfa, ExploreCapExceeded, explore, export_dot, run_dfa
from regeq.language import member
from regeq.semantics import denotational
from regeq.syntax import ONE, ZERO, parse


class TestExplore:
    def test_zero(self):
        d = explore(ZERO, ALPHABET)
        assert d.states == (ZERO,)
        assert d.accepting == frozenset()
        assert d.transitions == {(0, "a"): 0, (0, "b"): 0}

    def test_star(self):
        d = explore(parse("a*"), ALPHABET)
        assert len(d.states) == 2
        assert d.accepting == {0}
        assert d.transitions[0, "a"] == 0

    def test_breadth_first_numbering(self):
        d = explore(parse("ab"), ALPHABET)
        assert d.states == (parse("ab"), parse("b"), ZERO, ONE)
        assert d.accepting == {3}
        assert d.transitions == {
            (0, "a"): 1, (0, "b"): 2,
            (1, "a"): 2, (1, "b"): 3,
            (2, "a"): 2, (2, "b"): 2,
            (3, "a"): 2, (3, "b"): 2,
        }

    def test_root_is_normalized(self):
        assert explore(parse("1a+0"), ALPHABET).states[0] == parse("a")

    def test_alphabet_order_fixes_numbering(self):
        d = explore(parse("ab"), ("b", "a"))
        assert d.states[1] is ZERO

    def test_cap(self):
        with pytest.raises(ExploreCapExceeded) as info:
            explore(parse("ab"), ALPHABET, cap=3)
        assert info.value.cap == 3
        assert len(explore(parse("ab"), ALPHABET, cap=4).states) == 4

    @pytest.mark.parametrize("alphabet, cap", [((), 10), (("a", "a"), 10), (ALPHABET, 0)])
    def test_bad_arguments(self, alphabet, cap):
        with pytest.raises(ValueError):
            explore(ONE, alphabet, cap=cap)

    def test_states_are_distinct(self):
        for e in corpus(50, 12, seed=13):
            d = explore(e, ALPHABET)
            assert len(set(d.states)) == len(d.states)
            assert len(d.transitions) == len(d.states) * len(ALPHABET)


class TestRun:
    @given(exps(max_leaves=8))
    def test_agrees_with_member(self, e):
        d = explore(e, ALPHABET)
        l = denotational(e)
        for w in all_words(max_len=5):
            assert run_dfa(d, w) == member(l, w)

    def test_unknown_symbol(self):
        d = explore(parse("a*"), ALPHABET)
        with pytest.raises(ValueError):
            run_dfa(d, "ac")

    def test_empty_word(self):
        assert run_dfa(explore(parse("a*"), ALPHABET), "")
        assert not run_dfa(explore(parse("a"), ALPHABET), "")


class TestDot:
    def test_structure(self):
        d = explore(parse("ab"), ALPHABET)
        text = export_dot(d, "ab")
        (graph,) = pydot.graph_from_dot_data(text)
        names = {n.get_name() for n in graph.get_nodes()}
        assert {"s0", "s1", "s2", "s3", "__start"} <= names
        assert graph.get_node("s3")[0].get_shape() == "doublecircle"
        assert graph.get_node("s0")[0].get_shape() == "circle"
        edges = graph.get_edges()
        assert len(edges) == 1 + len(d.transitions)
        assert any(e.get_source() == "__start" and e.get_destination() == "s0" for e in edges)

    def test_label_escaping(self):
        d = Dfa(states=(parse("a"),), transitions={(0, '"'): 0}, accepting=frozenset(), alphabet=('"',))
        text = export_dot(d, 'say "hi" \\ bye')
        (graph,) = pydot.graph_from_dot_data(text)
        assert graph.get_name() == '"say \\"hi\\" \\\\ bye"'

    def test_default_label_is_root(self):
        assert export_dot(explore(parse("a*"), ALPHABET)).startswith('digraph "a*" {')

    def test_parses_for_corpus(self):
        for e in corpus(20, 12, seed=17):
            d = explore(e, ALPHABET)
            (graph,) = pydot.graph_from_dot_data(export_dot(d))
            assert len(graph.get_edges()) == 1 + len(d.transitions)
