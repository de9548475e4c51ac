"""Regular-expression terms: AST, concrete syntax, canonical order and ACI normal form.

Concrete grammar (whitespace between tokens is ignored)::

    expr := sum
    sum  := cat { "+" cat }
    cat  := star { star }
    star := atom { "*" }
    atom := "0" | "1" | CHAR | "(" expr ")"

``+`` and juxtaposition both associate to the right, so ``a+b+c`` reads as
``Plus(a, Plus(b, c))``, which is also the shape :func:`normalize` produces.
"""

from __future__ import annotations

from typing import Any, Hashable, Iterator, Union

__all__ = [
    "Zero",
    "One",
    "Char",
    "Plus",
    "Comp",
    "Star",
    "Exp",
    "ZERO",
    "ONE",
    "ParseError",
    "parse",
    "show",
    "normalize",
    "compare",
    "sort_key",
    "size",
    "symbols",
]

Symbol = Hashable

# Fixed tag ranking used by the canonical order.
_RANK_ZERO, _RANK_ONE, _RANK_CHAR, _RANK_PLUS, _RANK_COMP, _RANK_STAR = range(6)


class _Node:
    """Shared behaviour of the six term constructors.

    Terms are interned: constructing a term equal to an existing one returns
    that same object, so structural equality is identity and hashing and equality
    cost O(1) however much the term shares. The sort key is computed once at
    construction.
    """

    __slots__ = ("_key", "_hash", "_up")
    _fields: tuple = ()

    def __setattr__(self, name, value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    def __delattr__(self, name):
        raise AttributeError(f"{type(self).__name__} is immutable")

    def __hash__(self) -> int:
        return self._hash

    def __eq__(self, other: Any) -> bool:
        return self is other

    def __ne__(self, other: Any) -> bool:
        return self is not other

    def __lt__(self, other: Any) -> bool:
        if not isinstance(other, _Node):
            return NotImplemented
        return self._key < other._key

    def __le__(self, other: Any) -> bool:
        if not isinstance(other, _Node):
            return NotImplemented
        return self._key <= other._key

    def __gt__(self, other: Any) -> bool:
        if not isinstance(other, _Node):
            return NotImplemented
        return self._key > other._key

    def __ge__(self, other: Any) -> bool:
        if not isinstance(other, _Node):
            return NotImplemented
        return self._key >= other._key

    def __repr__(self) -> str:
        args = ", ".join(f"{name}={getattr(self, name)!r}" for name in self._fields)
        return f"{type(self).__name__}({args})"

    def __str__(self) -> str:
        return show(self)

    def __reduce__(self):
        return type(self), tuple(getattr(self, name) for name in self._fields)


_set = object.__setattr__

# Leaves are interned globally; there is one per symbol.
_leaves: dict = {}


def _make(cls, values: tuple, key: tuple, h: int) -> Any:
    node = object.__new__(cls)
    for name, value in zip(cls._fields, values):
        _set(node, name, value)
    _set(node, "_key", key)
    _set(node, "_hash", h)
    _set(node, "_up", None)
    return node


def _leaf(cls, values: tuple, key: tuple) -> Any:
    try:
        return _leaves[key]
    except KeyError:
        pass
    return _leaves.setdefault(key, _make(cls, values, key, hash(key)))


def _parent(cls, first: "_Node", ident: tuple, values: tuple, key: tuple, h: int) -> Any:
    # Compound terms are interned in a table on their first child, keyed by the
    # other child's id (kept valid because the stored term references it).
    # ``dict.setdefault`` is atomic, so racing constructors agree on one term.
    up = first._up
    if up is None:
        _set(first, "_up", {})
        up = first._up
    try:
        return up[ident]
    except KeyError:
        pass
    return up.setdefault(ident, _make(cls, values, key, h))


class Zero(_Node):
    __slots__ = ()

    def __new__(cls) -> "Zero":
        return _leaf(cls, (), (_RANK_ZERO,))


class One(_Node):
    __slots__ = ()

    def __new__(cls) -> "One":
        return _leaf(cls, (), (_RANK_ONE,))


class Char(_Node):
    __slots__ = ("sym",)
    _fields = ("sym",)

    def __new__(cls, sym: Symbol) -> "Char":
        return _leaf(cls, (sym,), (_RANK_CHAR, sym))


class Plus(_Node):
    __slots__ = ("left", "right")
    _fields = ("left", "right")

    def __new__(cls, left: "Exp", right: "Exp") -> "Plus":
        return _parent(
            cls,
            left,
            (_RANK_PLUS, id(right)),
            (left, right),
            (_RANK_PLUS, left._key, right._key),
            hash((_RANK_PLUS, left._hash, right._hash)),
        )


class Comp(_Node):
    __slots__ = ("left", "right")
    _fields = ("left", "right")

    def __new__(cls, left: "Exp", right: "Exp") -> "Comp":
        return _parent(
            cls,
            left,
            (_RANK_COMP, id(right)),
            (left, right),
            (_RANK_COMP, left._key, right._key),
            hash((_RANK_COMP, left._hash, right._hash)),
        )


class Star(_Node):
    __slots__ = ("inner",)
    _fields = ("inner",)

    def __new__(cls, inner: "Exp") -> "Star":
        return _parent(
            cls,
            inner,
            (_RANK_STAR,),
            (inner,),
            (_RANK_STAR, inner._key),
            hash((_RANK_STAR, inner._hash)),
        )


Exp = Union[Zero, One, Char, Plus, Comp, Star]

ZERO = Zero()
ONE = One()


def sort_key(e: Exp) -> tuple:
    """Key realising the canonical order: tag rank, then children, then symbol."""
    return e._key


def compare(e1: Exp, e2: Exp) -> int:
    """Three-way comparison under the canonical order (-1, 0 or 1)."""
    k1, k2 = e1._key, e2._key
    return (k1 > k2) - (k1 < k2)


def size(e: Exp) -> int:
    if isinstance(e, (Plus, Comp)):
        return 1 + size(e.left) + size(e.right)
    if isinstance(e, Star):
        return 1 + size(e.inner)
    return 1


def symbols(e: Exp) -> set:
    """All symbols occurring in ``e``."""
    found = set()
    stack = [e]
    while stack:
        node = stack.pop()
        if isinstance(node, Char):
            found.add(node.sym)
        elif isinstance(node, (Plus, Comp)):
            stack.append(node.left)
            stack.append(node.right)
        elif isinstance(node, Star):
            stack.append(node.inner)
    return found


# ---------------------------------------------------------------------------
# Normal form
# ---------------------------------------------------------------------------


def _summands(e: Exp, out: list) -> None:
    while isinstance(e, Plus):
        _summands(e.left, out)
        e = e.right
    out.append(e)


def _plus(left: Exp, right: Exp) -> Exp:
    terms: list = []
    _summands(left, terms)
    _summands(right, terms)
    terms = sorted({t for t in terms if not isinstance(t, Zero)}, key=sort_key)
    if not terms:
        return ZERO
    result = terms[-1]
    for t in reversed(terms[:-1]):
        result = Plus(t, result)
    return result


def _comp(left: Exp, right: Exp) -> Exp:
    if isinstance(left, Zero) or isinstance(right, Zero):
        return ZERO
    if isinstance(left, One):
        return right
    if isinstance(right, One):
        return left
    return Comp(left, right)


def _star(inner: Exp) -> Exp:
    if isinstance(inner, (Zero, One)):
        return ONE
    if isinstance(inner, Star):
        return inner
    return Star(inner)


def normalize(e: Exp) -> Exp:
    """Rewrite ``e`` bottom-up with the unit, annihilator, ACI and star-collapse laws.

    Sums are flattened, zero summands dropped, duplicates removed and the
    remaining summands sorted by :func:`sort_key` into a right-nested chain.
    No distributivity or other Kleene-algebra rewriting is attempted. The
    result is a fixed point of ``normalize``.
    """
    if isinstance(e, Plus):
        return _plus(normalize(e.left), normalize(e.right))
    if isinstance(e, Comp):
        return _comp(normalize(e.left), normalize(e.right))
    if isinstance(e, Star):
        return _star(normalize(e.inner))
    return e


# ---------------------------------------------------------------------------
# Concrete syntax
# ---------------------------------------------------------------------------

_RESERVED = frozenset("01+*()")


class ParseError(ValueError):
    """Malformed concrete syntax.

    ``offset`` is the UTF-8 byte offset of the offending token (the input
    length when input ran out) and ``expected`` the tokens that would have
    been accepted there.
    """

    def __init__(self, text: str, index: int, expected: frozenset):
        self.text = text
        self.index = index
        self.offset = len(text[:index].encode("utf-8"))
        self.expected = expected
        found = repr(text[index]) if index < len(text) else "end of input"
        want = ", ".join(sorted(expected))
        super().__init__(f"syntax error at offset {self.offset}: found {found}, expected one of {want}")


_ATOM_START = frozenset({"0", "1", "CHAR", "("})


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def peek(self) -> str | None:
        text, pos = self.text, self.pos
        while pos < len(text) and text[pos].isspace():
            pos += 1
        self.pos = pos
        return text[pos] if pos < len(text) else None

    def fail(self, expected) -> ParseError:
        return ParseError(self.text, self.pos, frozenset(expected))

    def parse(self) -> Exp:
        e = self.sum()
        if self.peek() is not None:
            raise self.fail({"+", "*", ")", "end of input"} | _ATOM_START - {")"})
        return e

    def sum(self) -> Exp:
        terms = [self.cat()]
        while self.peek() == "+":
            self.pos += 1
            terms.append(self.cat())
        result = terms[-1]
        for t in reversed(terms[:-1]):
            result = Plus(t, result)
        return result

    def cat(self) -> Exp:
        factors = [self.star()]
        while True:
            c = self.peek()
            if c is None or c in "+)":
                break
            factors.append(self.star())
        result = factors[-1]
        for f in reversed(factors[:-1]):
            result = Comp(f, result)
        return result

    def star(self) -> Exp:
        e = self.atom()
        while self.peek() == "*":
            self.pos += 1
            e = Star(e)
        return e

    def atom(self) -> Exp:
        c = self.peek()
        if c is None or c in "+*)":
            raise self.fail(_ATOM_START)
        self.pos += 1
        if c == "0":
            return ZERO
        if c == "1":
            return ONE
        if c == "(":
            e = self.sum()
            if self.peek() != ")":
                raise self.fail({")", "+"} | _ATOM_START - {")"})
            self.pos += 1
            return e
        return Char(c)


def parse(text: str) -> Exp:
    """Parse concrete syntax into a term.

    >>> parse("(a+1)b*")
    Comp(left=Plus(left=Char(sym='a'), right=One()), right=Star(inner=Char(sym='b')))
    """
    return _Parser(text).parse()


def _atom_text(sym: Symbol) -> str:
    s = str(sym)
    if len(s) != 1 or s in _RESERVED or s.isspace():
        raise ValueError(f"symbol {sym!r} has no concrete syntax")
    return s


def show(e: Exp) -> str:
    """Render ``e`` with the fewest parentheses that still parse back to ``e``."""
    if isinstance(e, Zero):
        return "0"
    if isinstance(e, One):
        return "1"
    if isinstance(e, Char):
        return _atom_text(e.sym)
    if isinstance(e, Plus):
        left = show(e.left)
        if isinstance(e.left, Plus):
            left = f"({left})"
        return f"{left}+{show(e.right)}"
    if isinstance(e, Comp):
        left, right = show(e.left), show(e.right)
        if isinstance(e.left, (Plus, Comp)):
            left = f"({left})"
        if isinstance(e.right, Plus):
            right = f"({right})"
        return left + right
    inner = show(e.inner)
    if isinstance(e.inner, (Plus, Comp)):
        inner = f"({inner})"
    return inner + "*"


def tree_lines(e: Exp, indent: str = "  ") -> Iterator[str]:
    """Indented one-node-per-line rendering of the AST."""

    def walk(node: Exp, depth: int) -> Iterator[str]:
        pad = indent * depth
        if isinstance(node, Char):
            yield f"{pad}Char {node.sym!r}"
        elif isinstance(node, (Plus, Comp)):
            yield f"{pad}{type(node).__name__}"
            yield from walk(node.left, depth + 1)
            yield from walk(node.right, depth + 1)
        elif isinstance(node, Star):
            yield f"{pad}Star"
            yield from walk(node.inner, depth + 1)
        else:
            yield f"{pad}{type(node).__name__}"

    return walk(e, 0)
