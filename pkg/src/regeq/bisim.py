"""Bisimilarity of languages and equivalence of expressions.

Two behaviours are bisimilar when they agree on ``eps`` and their
derivatives are again bisimilar. The full (greatest) relation cannot be
evaluated on opaque behaviours, so this module offers

* :func:`bisimilar_k`, the depth-``k`` unrolling, which holds exactly when the
  two languages agree on every word shorter than ``k``;
* finite-depth checks of the relation laws, congruences and homomorphism
  properties built on it;
* :func:`decide_equiv`, a terminating decision procedure for behaviours that
  come from expressions, run over normalized derivatives.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass
from typing import Callable, Hashable, Sequence

from . import language
from .language import Lang
from .semantics import delta, delta_norm, eps
from .syntax import Char, Comp, Exp, One, Plus, Star, Zero, normalize

__all__ = [
    "DEFAULT_STATE_CAP",
    "Verdict",
    "EquivResult",
    "StateBudgetExceeded",
    "HomomorphismPreconditionError",
    "bisimilar_k",
    "check_reflexive",
    "check_symmetric",
    "check_transitive",
    "check_plus_congruence",
    "check_comp_congruence",
    "check_star_congruence",
    "is_algebra_homomorphism_at",
    "is_coalgebra_homomorphism_at",
    "agree_as_coalgebra_homomorphisms",
    "decide_equiv",
]

Symbol = Hashable
Semantics = Callable[[Exp], Lang]

DEFAULT_STATE_CAP = 100_000


def _check_alphabet(alphabet: Sequence[Symbol]) -> None:
    if not alphabet:
        raise ValueError("alphabet must be non-empty")
    if len(set(alphabet)) != len(alphabet):
        raise ValueError(f"alphabet has duplicate symbols: {list(alphabet)!r}")


def _bisim(k: int, l1: Lang, l2: Lang, alphabet: Sequence[Symbol]) -> bool:
    if k == 0:
        return True
    if l1.eps != l2.eps:
        return False
    return all(_bisim(k - 1, l1.delta(a), l2.delta(a), alphabet) for a in alphabet)


def bisimilar_k(k: int, l1: Lang, l2: Lang, alphabet: Sequence[Symbol]) -> bool:
    """Depth-``k`` bisimilarity over ``alphabet``; depth 0 relates everything."""
    if k < 0:
        raise ValueError("depth must be non-negative")
    _check_alphabet(alphabet)
    return _bisim(k, l1, l2, alphabet)


# ---------------------------------------------------------------------------
# Relation laws and congruences, each as "premise implies conclusion" at depth k
# ---------------------------------------------------------------------------


def check_reflexive(k: int, l: Lang, alphabet: Sequence[Symbol]) -> bool:
    return bisimilar_k(k, l, l, alphabet)


def check_symmetric(k: int, l1: Lang, l2: Lang, alphabet: Sequence[Symbol]) -> bool:
    return bisimilar_k(k, l1, l2, alphabet) == bisimilar_k(k, l2, l1, alphabet)


def check_transitive(k: int, l1: Lang, l2: Lang, l3: Lang, alphabet: Sequence[Symbol]) -> bool:
    if bisimilar_k(k, l1, l2, alphabet) and bisimilar_k(k, l2, l3, alphabet):
        return bisimilar_k(k, l1, l3, alphabet)
    return True


def check_plus_congruence(
    k: int, l1a: Lang, l1b: Lang, l2a: Lang, l2b: Lang, alphabet: Sequence[Symbol]
) -> bool:
    if bisimilar_k(k, l1a, l1b, alphabet) and bisimilar_k(k, l2a, l2b, alphabet):
        return bisimilar_k(k, language.plus(l1a, l2a), language.plus(l1b, l2b), alphabet)
    return True


def check_comp_congruence(
    k: int, l1a: Lang, l1b: Lang, l2a: Lang, l2b: Lang, alphabet: Sequence[Symbol]
) -> bool:
    """Premises and conclusion are both checked at depth ``k``.

    This is sound at every finite depth: a word shorter than ``k`` only
    splits into factors shorter than ``k``.
    """
    if bisimilar_k(k, l1a, l1b, alphabet) and bisimilar_k(k, l2a, l2b, alphabet):
        return bisimilar_k(k, language.comp(l1a, l2a), language.comp(l1b, l2b), alphabet)
    return True


def check_star_congruence(k: int, l1: Lang, l2: Lang, alphabet: Sequence[Symbol]) -> bool:
    if bisimilar_k(k, l1, l2, alphabet):
        return bisimilar_k(k, language.star(l1), language.star(l2), alphabet)
    return True


# ---------------------------------------------------------------------------
# Homomorphism properties of maps Exp -> Lang
# ---------------------------------------------------------------------------


def _algebra_image(f: Semantics, e: Exp) -> Lang:
    """The language-algebra operation for ``e``'s constructor, applied to ``f`` of its children."""
    if isinstance(e, Zero):
        return language.zero()
    if isinstance(e, One):
        return language.one()
    if isinstance(e, Char):
        return language.singleton(e.sym)
    if isinstance(e, Plus):
        return language.plus(f(e.left), f(e.right))
    if isinstance(e, Comp):
        return language.comp(f(e.left), f(e.right))
    if isinstance(e, Star):
        return language.star(f(e.inner))
    raise TypeError(f"not an expression: {e!r}")


def is_algebra_homomorphism_at(f: Semantics, e: Exp, k: int, alphabet: Sequence[Symbol]) -> bool:
    """Whether ``f`` commutes with the constructor at the root of ``e``, up to depth ``k``."""
    return bisimilar_k(k, f(e), _algebra_image(f, e), alphabet)


def _coalgebra_step_ok(f: Semantics, e: Exp, k: int, alphabet: Sequence[Symbol]) -> bool:
    image = f(e)
    if image.eps != eps(e):
        return False
    return all(_bisim(k, image.delta(a), f(delta(e, a)), alphabet) for a in alphabet)


def is_coalgebra_homomorphism_at(f: Semantics, e: Exp, k: int, alphabet: Sequence[Symbol]) -> bool:
    """Whether ``f(e)`` has the acceptance bit of ``e`` and derivatives matching ``f`` of ``delta(e, a)``."""
    if k < 0:
        raise ValueError("depth must be non-negative")
    _check_alphabet(alphabet)
    return _coalgebra_step_ok(f, e, k, alphabet)


class HomomorphismPreconditionError(ValueError):
    """A map passed as a coalgebra homomorphism failed that check."""

    def __init__(self, which: str, e: Exp, depth: int):
        self.which = which
        self.expression = e
        self.depth = depth
        super().__init__(f"{which} is not a coalgebra homomorphism at {e} (depth {depth})")


def agree_as_coalgebra_homomorphisms(
    f: Semantics, g: Semantics, e: Exp, k: int, alphabet: Sequence[Symbol]
) -> bool:
    """Check that two coalgebra homomorphisms agree on ``e`` up to depth ``k``.

    Both maps are first checked to be coalgebra homomorphisms on every
    expression reachable from ``e`` in fewer than ``k`` raw derivative steps,
    at the depth the agreement argument consumes there (``k - 1 - j`` after
    ``j`` steps). A failing map raises :class:`HomomorphismPreconditionError`;
    once the precondition holds the returned agreement must be ``True``.
    """
    if k < 0:
        raise ValueError("depth must be non-negative")
    _check_alphabet(alphabet)
    cache_f: dict = {}
    cache_g: dict = {}

    def cached(fn, cache):
        def wrapped(x):
            try:
                return cache[x]
            except KeyError:
                return cache.setdefault(x, fn(x))

        return wrapped

    fc, gc = cached(f, cache_f), cached(g, cache_g)
    frontier = {e}
    for j in range(k):
        depth = k - 1 - j
        for x in frontier:
            for name, h in (("f", fc), ("g", gc)):
                if not _coalgebra_step_ok(h, x, depth, alphabet):
                    raise HomomorphismPreconditionError(name, x, depth)
        if depth == 0:
            break
        frontier = {delta(x, a) for x in frontier for a in alphabet}
    return _bisim(k, fc(e), gc(e), alphabet)


# ---------------------------------------------------------------------------
# Decision procedure
# ---------------------------------------------------------------------------


class Verdict(enum.Enum):
    EQUIVALENT = "equivalent"
    DISTINGUISHED = "distinguished"


@dataclass(frozen=True)
class EquivResult:
    verdict: Verdict
    witness: tuple | None = None

    def __post_init__(self):
        if (self.verdict is Verdict.DISTINGUISHED) != (self.witness is not None):
            raise ValueError("a witness is present exactly when the verdict is DISTINGUISHED")

    @property
    def equivalent(self) -> bool:
        return self.verdict is Verdict.EQUIVALENT


class StateBudgetExceeded(RuntimeError):
    """The exploration needed more state pairs than the configured cap."""

    def __init__(self, cap: int):
        self.cap = cap
        super().__init__(f"state budget of {cap} pairs exceeded")


class _UnionFind:
    def __init__(self):
        self.parent: dict = {}

    def find(self, x):
        # Only non-roots have a parent entry.
        parent = self.parent
        root = x
        while root in parent:
            root = parent[root]
        while x in parent:
            parent[x], x = root, parent[x]
        return root

    def union(self, x, y) -> None:
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self.parent[rx] = ry


def _shortest_witness(x: Exp, y: Exp, alphabet: Sequence[Symbol], cap: int) -> tuple:
    # Plain breadth-first search over pairs; the first eps mismatch met is at
    # minimal depth, so its word is a shortest distinguishing word.
    parent: dict = {(x, y): None}
    queue = deque([(x, y)])
    while queue:
        pair = queue.popleft()
        p, q = pair
        if eps(p) != eps(q):
            word = []
            while parent[pair] is not None:
                pair, a = parent[pair]
                word.append(a)
            return tuple(reversed(word))
        if len(parent) > cap:
            raise StateBudgetExceeded(cap)
        for a in alphabet:
            nxt = (delta_norm(p, a), delta_norm(q, a))
            if nxt not in parent:
                parent[nxt] = (pair, a)
                queue.append(nxt)
    raise AssertionError("no distinguishing word although the languages differ")


def decide_equiv(
    e1: Exp, e2: Exp, alphabet: Sequence[Symbol], cap: int = DEFAULT_STATE_CAP
) -> EquivResult:
    """Decide whether ``e1`` and ``e2`` denote the same language over ``alphabet``.

    Pairs of normalized derivatives are explored breadth-first; pairs already
    related through a union-find of earlier pairs are skipped (Hopcroft-Karp).
    On a mismatch a separate breadth-first pass recovers a shortest
    distinguishing word. Raises :class:`StateBudgetExceeded` after ``cap``
    pairs instead of returning a verdict.
    """
    _check_alphabet(alphabet)
    if cap < 1:
        raise ValueError("cap must be at least 1")
    x, y = normalize(e1), normalize(e2)
    classes = _UnionFind()
    queue = deque([(x, y)])
    seen = 0
    while queue:
        p, q = queue.popleft()
        if classes.find(p) == classes.find(q):
            continue
        if eps(p) != eps(q):
            return EquivResult(Verdict.DISTINGUISHED, _shortest_witness(x, y, alphabet, cap))
        seen += 1
        if seen > cap:
            raise StateBudgetExceeded(cap)
        classes.union(p, q)
        for a in alphabet:
            queue.append((delta_norm(p, a), delta_norm(q, a)))
    return EquivResult(Verdict.EQUIVALENT)
