"""Regular expressions with denotational and operational semantics.

The denotational semantics folds an expression into an algebra of lazily
observed languages; the operational semantics unfolds it through Brzozowski
derivatives. Both are exposed together with depth-bounded bisimilarity, an
equivalence decision procedure and derivative automata.
"""

from .automaton import Dfa, ExploreCapExceeded, explore, export_dot, run_dfa
from .bisim import (
    EquivResult,
    HomomorphismPreconditionError,
    StateBudgetExceeded,
    Verdict,
    agree_as_coalgebra_homomorphisms,
    bisimilar_k,
    decide_equiv,
)
from .language import Lang, enumerate_words, member
from .semantics import delta, delta_norm, denotational, eps, operational
from .syntax import ONE, ZERO, Char, Comp, Exp, One, ParseError, Plus, Star, Zero, compare, normalize, parse, show

__version__ = "0.1.0"

__all__ = [
    "Char",
    "Comp",
    "Dfa",
    "EquivResult",
    "Exp",
    "ExploreCapExceeded",
    "HomomorphismPreconditionError",
    "Lang",
    "ONE",
    "One",
    "ParseError",
    "Plus",
    "Star",
    "StateBudgetExceeded",
    "Verdict",
    "ZERO",
    "Zero",
    "agree_as_coalgebra_homomorphisms",
    "bisimilar_k",
    "compare",
    "decide_equiv",
    "delta",
    "delta_norm",
    "denotational",
    "enumerate_words",
    "eps",
    "explore",
    "export_dot",
    "member",
    "normalize",
    "operational",
    "parse",
    "run_dfa",
    "show",
]
