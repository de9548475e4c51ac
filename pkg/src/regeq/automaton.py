"""The derivative automaton of an expression and its Graphviz export.

States are normalized derivatives, discovered breadth-first from the
normalized root; successors are expanded in alphabet order, which fixes the
state numbering.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Hashable, Iterable, Mapping, Sequence

from .semantics import delta_norm, eps
from .syntax import Exp, normalize, show

__all__ = ["Dfa", "ExploreCapExceeded", "explore", "export_dot", "run_dfa"]

Symbol = Hashable


@dataclass(frozen=True)
class Dfa:
    states: tuple
    transitions: Mapping[tuple, int]
    accepting: frozenset
    alphabet: tuple

    def step(self, state: int, a: Symbol) -> int:
        try:
            return self.transitions[state, a]
        except KeyError:
            raise ValueError(f"symbol {a!r} is not in the alphabet {list(self.alphabet)!r}") from None


class ExploreCapExceeded(RuntimeError):
    def __init__(self, cap: int, discovered: int):
        self.cap = cap
        self.discovered = discovered
        super().__init__(f"derivative automaton exceeds {cap} states ({discovered} discovered)")


def explore(e: Exp, alphabet: Sequence[Symbol], cap: int = 10_000) -> Dfa:
    if not alphabet or len(set(alphabet)) != len(alphabet):
        raise ValueError("alphabet must be non-empty and duplicate-free")
    if cap < 1:
        raise ValueError("cap must be at least 1")
    root = normalize(e)
    index = {root: 0}
    states = [root]
    transitions = {}
    queue = deque([root])
    while queue:
        state = queue.popleft()
        i = index[state]
        for a in alphabet:
            target = delta_norm(state, a)
            j = index.get(target)
            if j is None:
                if len(states) >= cap:
                    raise ExploreCapExceeded(cap, len(states) + 1)
                j = index[target] = len(states)
                states.append(target)
                queue.append(target)
            transitions[i, a] = j
    accepting = frozenset(i for i, s in enumerate(states) if eps(s))
    return Dfa(tuple(states), transitions, accepting, tuple(alphabet))


def run_dfa(d: Dfa, word: Iterable[Symbol]) -> bool:
    state = 0
    for a in word:
        state = d.step(state, a)
    return state in d.accepting


def _dot_string(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def export_dot(d: Dfa, root_label: str = "") -> str:
    """Render ``d`` as a DOT digraph.

    Nodes are ``s0`` .. ``sN`` labelled with the printed state; accepting
    states are drawn as double circles and an unlabelled arrow enters ``s0``.
    """
    lines = [f"digraph {_dot_string(root_label or show(d.states[0]))} {{"]
    lines.append("  rankdir=LR;")
    lines.append('  __start [shape=point, label=""];')
    for i, state in enumerate(d.states):
        shape = "doublecircle" if i in d.accepting else "circle"
        lines.append(f"  s{i} [shape={shape}, label={_dot_string(show(state))}];")
    lines.append("  __start -> s0;")
    for i in range(len(d.states)):
        for a in d.alphabet:
            lines.append(f"  s{i} -> s{d.transitions[i, a]} [label={_dot_string(str(a))}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
