"""Formal languages as behaviours: an acceptance bit plus a lazily computed derivative.

A :class:`Lang` never stores a set of words. It answers two questions: does
it contain the empty word (``eps``), and what language remains after reading
one symbol (``delta``). Derivatives are computed on first request and
memoized per symbol, which keeps the corecursive combinators below
productive and avoids re-deriving shared sub-behaviours.
"""

from __future__ import annotations

from typing import Callable, Hashable, Iterable, Sequence

__all__ = [
    "Lang",
    "zero",
    "one",
    "singleton",
    "plus",
    "comp",
    "star",
    "member",
    "enumerate_words",
]

Symbol = Hashable
Word = tuple


class Lang:
    """A language observed through ``eps`` and ``delta``.

    ``delta`` is total over every hashable symbol. Each derivative is computed
    at most once per symbol and stored with ``dict.setdefault``, which is
    atomic, so concurrent observers all get the first stored result.
    """

    __slots__ = ("eps", "_step", "_memo", "_made")

    def __init__(self, eps: bool, step: Callable[[Symbol], "Lang"]):
        self.eps = bool(eps)
        self._step = step
        self._memo: dict = {}
        # Combinator results with this object as first argument (see _shared).
        self._made: dict | None = None

    def delta(self, a: Symbol) -> "Lang":
        try:
            return self._memo[a]
        except KeyError:
            pass
        return self._memo.setdefault(a, self._step(a))

    def __repr__(self) -> str:
        return f"<Lang eps={self.eps} derived={len(self._memo)}>"


def _shared(first: Lang, key: tuple, build: Callable[[], Lang]) -> Lang:
    """Return the result of a combinator applied to ``first``, building it once.

    Building the same combination of the same behaviours twice yields one
    shared object with one shared derivative memo. The table lives on the first
    argument; ``key`` names the other arguments by ``id``, which stays valid
    because the stored result references them.
    """
    made = first._made
    if made is None:
        made = first._made = {}
    try:
        return made[key]
    except KeyError:
        pass
    return made.setdefault(key, build())


_ZERO = Lang(False, lambda a: _ZERO)
_ONE = Lang(True, lambda a: _ZERO)


def zero() -> Lang:
    """The empty language."""
    return _ZERO


def one() -> Lang:
    """The language containing only the empty word."""
    return _ONE


def singleton(a: Symbol) -> Lang:
    """The language containing only the one-symbol word ``[a]``."""
    return Lang(False, lambda b: one() if a == b else zero())


def plus(l1: Lang, l2: Lang) -> Lang:
    """Union.

    ``plus(zero(), L)``, ``plus(L, zero())`` and ``plus(L, L)`` return ``L``
    itself. Those objects satisfy the defining eps/delta equations exactly,
    so no observation changes.
    """
    if l1 is _ZERO or l1 is l2:
        return l2
    if l2 is _ZERO:
        return l1
    return _shared(
        l1,
        ("plus", id(l2)),
        lambda: Lang(l1.eps or l2.eps, lambda a: plus(l1.delta(a), l2.delta(a))),
    )


def comp(l1: Lang, l2: Lang) -> Lang:
    """Concatenation, with the derivative guarded on ``l1.eps``.

    A ``zero()`` operand yields ``zero()`` and a ``one()`` operand yields the
    other operand. As with :func:`plus` these results meet the defining
    equations on the nose; without them the ``comp(zero(), ...)`` summands
    left behind by the guard would double at every derivative step.
    """
    if l1 is _ZERO or l2 is _ZERO:
        return _ZERO
    if l1 is _ONE:
        return l2
    if l2 is _ONE:
        return l1
    return _shared(
        l1,
        ("comp", id(l2)),
        lambda: Lang(
            l1.eps and l2.eps,
            lambda a: plus(
                comp(l1.delta(a), l2),
                comp(one() if l1.eps else zero(), l2.delta(a)),
            ),
        ),
    )


def star(l: Lang) -> Lang:
    """Kleene iteration."""
    return _shared(l, ("star",), lambda: Lang(True, lambda a: comp(l.delta(a), star(l))))


def member(l: Lang, word: Iterable[Symbol]) -> bool:
    for a in word:
        l = l.delta(a)
    return l.eps


def enumerate_words(l: Lang, alphabet: Sequence[Symbol], max_len: int) -> list[Word]:
    """Words of length at most ``max_len`` in ``l``, in length-then-lexicographic order.

    Lexicographic order follows the order of ``alphabet``.
    """
    if max_len < 0:
        raise ValueError("max_len must be non-negative")
    if not alphabet or len(set(alphabet)) != len(alphabet):
        raise ValueError("alphabet must be non-empty and duplicate-free")
    found = []
    level = [((), l)]
    for n in range(max_len + 1):
        found.extend(w for w, lang in level if lang.eps)
        if n == max_len:
            break
        level = [(w + (a,), lang.delta(a)) for w, lang in level for a in alphabet]
    return found
