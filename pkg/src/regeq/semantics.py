"""The two meanings of a regular expression.

``denotational`` folds a term into the language algebra; ``operational``
unfolds a term through its syntactic derivatives (``eps`` and ``delta``).
"""

from __future__ import annotations

from functools import lru_cache
from typing import Hashable, Iterable

from . import language
from .language import Lang
from .syntax import ONE, ZERO, Char, Comp, Exp, One, Plus, Star, Zero, normalize

__all__ = ["denotational", "eps", "delta", "delta_norm", "derive", "operational"]

Symbol = Hashable

# Raw derivatives share subterms heavily, so without memoization both eps and
# delta would re-walk shared subterms once per path. Terms are immutable,
# which makes caching by structural equality safe.
_CACHE_SIZE = 1 << 18


def denotational(e: Exp) -> Lang:
    """Fold ``e`` into the language algebra, constructor by constructor."""
    memo: dict = {}

    def fold(e: Exp) -> Lang:
        # Raw derivatives are DAGs; each distinct subterm is folded once.
        try:
            return memo[e]
        except KeyError:
            pass
        if isinstance(e, Zero):
            result = language.zero()
        elif isinstance(e, One):
            result = language.one()
        elif isinstance(e, Char):
            result = language.singleton(e.sym)
        elif isinstance(e, Plus):
            result = language.plus(fold(e.left), fold(e.right))
        elif isinstance(e, Comp):
            result = language.comp(fold(e.left), fold(e.right))
        elif isinstance(e, Star):
            result = language.star(fold(e.inner))
        else:
            raise TypeError(f"not an expression: {e!r}")
        memo[e] = result
        return result

    return fold(e)


@lru_cache(maxsize=_CACHE_SIZE)
def eps(e: Exp) -> bool:
    """Whether ``e`` accepts the empty word, read off the syntax."""
    if isinstance(e, (Zero, Char)):
        return False
    if isinstance(e, (One, Star)):
        return True
    if isinstance(e, Plus):
        return eps(e.left) or eps(e.right)
    if isinstance(e, Comp):
        return eps(e.left) and eps(e.right)
    raise TypeError(f"not an expression: {e!r}")


@lru_cache(maxsize=_CACHE_SIZE)
def delta(e: Exp, a: Symbol) -> Exp:
    """Syntactic Brzozowski derivative of ``e`` by ``a``, without any simplification."""
    if isinstance(e, (Zero, One)):
        return ZERO
    if isinstance(e, Char):
        return ONE if e.sym == a else ZERO
    if isinstance(e, Plus):
        return Plus(delta(e.left, a), delta(e.right, a))
    if isinstance(e, Comp):
        return Plus(
            Comp(delta(e.left, a), e.right),
            Comp(ONE if eps(e.left) else ZERO, delta(e.right, a)),
        )
    if isinstance(e, Star):
        return Comp(delta(e.inner, a), e)
    raise TypeError(f"not an expression: {e!r}")


def delta_norm(e: Exp, a: Symbol) -> Exp:
    return normalize(delta(e, a))


def derive(e: Exp, word: Iterable[Symbol], *, norm: bool = False) -> Exp:
    """Derivative of ``e`` along a whole word, optionally normalizing after each step."""
    step = delta_norm if norm else delta
    if norm:
        e = normalize(e)
    for a in word:
        e = step(e, a)
    return e


def operational(e: Exp) -> Lang:
    return Lang(eps(e), lambda a: operational(delta(e, a)))
