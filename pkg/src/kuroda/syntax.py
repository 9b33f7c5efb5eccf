"""First-order formulas: representation, parsing, printing and substitution.

Negation is not a node of its own: ``~A`` is ``Impl(A, Bottom)`` everywhere,
and the printer re-sugars it.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Union

__all__ = [
    "Var", "App", "Term", "Bottom", "BOTTOM", "Atom", "Conj", "Disj", "Impl",
    "Forall", "Exists", "Formula", "Sequent", "LogicId", "ParseError",
    "ArityError", "parse", "parse_term", "render", "substitute",
    "free_variables", "term_variables", "alpha_equal", "alpha_key",
    "in_clprime_fragment", "neg", "iff", "is_negation", "size", "depth",
    "is_quantifier_free", "atoms", "replace_atoms", "fresh_name",
]

IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


# --------------------------------------------------------------------- terms

@dataclass(frozen=True)
class Var:
    name: str

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class App:
    symbol: str
    args: tuple = ()

    def __str__(self) -> str:
        return f"{self.symbol}({', '.join(map(str, self.args))})"


Term = Union[Var, App]


# ------------------------------------------------------------------ formulas

@dataclass(frozen=True)
class Bottom:
    def __repr__(self) -> str:
        return "Bottom()"


BOTTOM = Bottom()


@dataclass(frozen=True)
class Atom:
    predicate: str
    args: tuple = ()


@dataclass(frozen=True)
class Conj:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Disj:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Impl:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Forall:
    variable: str
    body: "Formula"


@dataclass(frozen=True)
class Exists:
    variable: str
    body: "Formula"


Formula = Union[Bottom, Atom, Conj, Disj, Impl, Forall, Exists]
BINARY = (Conj, Disj, Impl)
QUANTIFIERS = (Forall, Exists)


def neg(a: Formula) -> Formula:
    return Impl(a, BOTTOM)


def iff(a: Formula, b: Formula) -> Formula:
    """``a <-> b`` as the conjunction of both implications."""
    return Conj(Impl(a, b), Impl(b, a))


def is_negation(a: Formula) -> bool:
    return isinstance(a, Impl) and isinstance(a.right, Bottom)


class LogicId(enum.Enum):
    ML = "ml"
    IL = "il"
    CL = "cl"

    @classmethod
    def parse(cls, text: str) -> "LogicId":
        try:
            return cls(text.strip().lower())
        except ValueError:
            raise ValueError(f"unknown logic {text!r} (expected ml, il or cl)") from None

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class Sequent:
    hypotheses: tuple = ()  # of (label, Formula)
    conclusion: Formula = BOTTOM

    def __post_init__(self):
        object.__setattr__(self, "hypotheses", tuple((l, f) for l, f in self.hypotheses))
        labels = [label for label, _ in self.hypotheses]
        if len(set(labels)) != len(labels):
            raise ValueError(f"duplicate hypothesis labels in {labels}")
        for label in labels:
            if not IDENT.match(label):
                raise ValueError(f"bad hypothesis label {label!r}")

    def map(self, fn) -> "Sequent":
        return Sequent(tuple((l, fn(f)) for l, f in self.hypotheses), fn(self.conclusion))

    def as_formula(self) -> Formula:
        """The sequent as a single implication ``G1 -> ... -> Gn -> A``."""
        out = self.conclusion
        for _, g in reversed(self.hypotheses):
            out = Impl(g, out)
        return out


# ------------------------------------------------------------------- parsing

class ParseError(ValueError):
    def __init__(self, message: str, line: int = 1, column: int = 1):
        super().__init__(f"{message} at line {line}, column {column}")
        self.line = line
        self.column = column


class ArityError(ValueError):
    pass


_TOKEN = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<iff><->|↔)
  | (?P<imp>->|→)
  | (?P<and>&|∧)
  | (?P<or>\||∨)
  | (?P<not>~|¬)
  | (?P<bot>⊥)
  | (?P<all>∀)
  | (?P<ex>∃)
  | (?P<lp>\()
  | (?P<rp>\))
  | (?P<comma>,)
  | (?P<dot>\.)
  | (?P<ident>[A-Za-z_][A-Za-z0-9_]*)
    """,
    re.VERBOSE,
)

_KEYWORDS = {"forall": "all", "exists": "ex", "false": "bot"}


def _tokenize(text: str) -> list:
    tokens = []
    pos, line, line_start = 0, 1, 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", line, pos - line_start + 1)
        kind, value = m.lastgroup, m.group()
        col = pos - line_start + 1
        if kind == "ws":
            for i, ch in enumerate(value):
                if ch == "\n":
                    line += 1
                    line_start = pos + i + 1
        else:
            if kind == "ident":
                kind = _KEYWORDS.get(value, "ident")
            tokens.append((kind, value, line, col))
        pos = m.end()
    tokens.append(("eof", "", line, pos - line_start + 1))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.i = 0
        self.pred_arity: dict = {}
        self.fun_arity: dict = {}

    def peek(self) -> str:
        return self.tokens[self.i][0]

    def next(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, kind: str):
        tok = self.next()
        if tok[0] != kind:
            shown = tok[1] or "end of input"
            raise ParseError(f"expected {kind}, found {shown!r}", tok[2], tok[3])
        return tok

    def error(self, what: str):
        tok = self.tokens[self.i]
        shown = tok[1] or "end of input"
        raise ParseError(f"{what}, found {shown!r}", tok[2], tok[3])

    def formula(self) -> Formula:
        left = self.implication()
        if self.peek() == "iff":
            self.next()
            right = self.implication()
            left = iff(left, right)
            if self.peek() == "iff":
                self.error("'<->' is not associative")
        return left

    def implication(self) -> Formula:
        left = self.disjunction()
        if self.peek() == "imp":
            self.next()
            return Impl(left, self.implication())
        return left

    def disjunction(self) -> Formula:
        left = self.conjunction()
        while self.peek() == "or":
            self.next()
            left = Disj(left, self.conjunction())
        return left

    def conjunction(self) -> Formula:
        left = self.unary()
        while self.peek() == "and":
            self.next()
            left = Conj(left, self.unary())
        return left

    def unary(self) -> Formula:
        kind = self.peek()
        if kind == "not":
            self.next()
            return neg(self.unary())
        if kind in ("all", "ex"):
            self.next()
            var = self.expect("ident")[1]
            self.expect("dot")
            body = self.formula()
            return Forall(var, body) if kind == "all" else Exists(var, body)
        return self.primary()

    def primary(self) -> Formula:
        kind = self.peek()
        if kind == "bot":
            self.next()
            return BOTTOM
        if kind == "lp":
            self.next()
            inner = self.formula()
            self.expect("rp")
            return inner
        if kind == "ident":
            tok = self.next()
            args = self.arguments()
            self.check_arity(self.pred_arity, "predicate", tok, len(args))
            return Atom(tok[1], args)
        self.error("expected a formula")

    def arguments(self) -> tuple:
        if self.peek() != "lp":
            return ()
        self.next()
        args = []
        if self.peek() != "rp":
            args.append(self.term())
            while self.peek() == "comma":
                self.next()
                args.append(self.term())
        self.expect("rp")
        return tuple(args)

    def term(self) -> Term:
        tok = self.expect("ident")
        if self.peek() != "lp":
            return Var(tok[1])
        args = self.arguments()
        self.check_arity(self.fun_arity, "function", tok, len(args))
        return App(tok[1], args)

    @staticmethod
    def check_arity(table: dict, kind: str, tok, arity: int) -> None:
        seen = table.setdefault(tok[1], arity)
        if seen != arity:
            raise ArityError(
                f"{kind} {tok[1]!r} used with arity {arity} at line {tok[2]}, "
                f"column {tok[3]} but earlier with arity {seen}"
            )


def parse(text: str) -> Formula:
    """Parse a formula.

    Precedence, tightest first: ``~``, ``&``, ``|``, ``->`` (right associative),
    ``<->`` (sugar for a conjunction of implications). Quantifier bodies extend
    as far right as possible.
    """
    p = _Parser(text)
    out = p.formula()
    if p.peek() != "eof":
        p.error("unexpected trailing input")
    _check_arities(out)
    return out


def parse_term(text: str) -> Term:
    p = _Parser(text)
    out = p.term()
    if p.peek() != "eof":
        p.error("unexpected trailing input")
    return out


def _check_arities(formula: Formula) -> None:
    """Arity consistency for formulas built programmatically as well as parsed ones."""
    preds: dict = {}
    funs: dict = {}

    def term(t):
        if isinstance(t, App):
            if funs.setdefault(t.symbol, len(t.args)) != len(t.args):
                raise ArityError(f"function {t.symbol!r} used with inconsistent arity")
            for a in t.args:
                term(a)

    for f in _walk(formula):
        if isinstance(f, Atom):
            if preds.setdefault(f.predicate, len(f.args)) != len(f.args):
                raise ArityError(f"predicate {f.predicate!r} used with inconsistent arity")
            for a in f.args:
                term(a)


def _walk(formula: Formula) -> Iterator[Formula]:
    stack = [formula]
    while stack:
        f = stack.pop()
        yield f
        if isinstance(f, BINARY):
            stack.append(f.right)
            stack.append(f.left)
        elif isinstance(f, QUANTIFIERS):
            stack.append(f.body)


# ------------------------------------------------------------------ printing

_SYMBOLS = {
    "ascii": {"bot": "false", "not": "~", "and": " & ", "or": " | ", "imp": " -> ",
              "all": "forall {}. ", "ex": "exists {}. "},
    "unicode": {"bot": "⊥", "not": "¬", "and": " ∧ ", "or": " ∨ ", "imp": " → ",
                "all": "∀{}. ", "ex": "∃{}. "},
}

_P_IMP, _P_OR, _P_AND, _P_NOT = 1, 2, 3, 4


def render(formula: Formula, style: str = "ascii") -> str:
    """Print a formula so that ``parse(render(f)) == f``."""
    try:
        sym = _SYMBOLS[style]
    except KeyError:
        raise ValueError(f"unknown style {style!r}") from None
    return _render(formula, sym, 0, True)


def _render_term(t: Term) -> str:
    return str(t)


def _render(f: Formula, sym: dict, ctx: int, tail: bool) -> str:
    # ctx: binding strength required by the context; tail: nothing follows
    # this formula before the enclosing bracket, so a quantifier may run on.
    if isinstance(f, Bottom):
        return sym["bot"]
    if isinstance(f, Atom):
        if f.args:
            return f"{f.predicate}({', '.join(map(_render_term, f.args))})"
        return f.predicate
    if is_negation(f):
        return sym["not"] + _render(f.left, sym, _P_NOT, tail)
    if isinstance(f, QUANTIFIERS):
        head = sym["all" if isinstance(f, Forall) else "ex"].format(f.variable)
        text = head + _render(f.body, sym, 0, True)
        return text if tail else f"({text})"
    if isinstance(f, Impl):
        prec, op = _P_IMP, sym["imp"]
        lctx, rctx = _P_IMP + 1, _P_IMP
    elif isinstance(f, Disj):
        prec, op = _P_OR, sym["or"]
        lctx, rctx = _P_OR, _P_OR + 1
    else:
        prec, op = _P_AND, sym["and"]
        lctx, rctx = _P_AND, _P_AND + 1
    wrap = prec < ctx
    inner_tail = True if wrap else tail
    text = _render(f.left, sym, lctx, False) + op + _render(f.right, sym, rctx, inner_tail)
    return f"({text})" if wrap else text


# -------------------------------------------------------------- variables

def term_variables(t: Term) -> set:
    if isinstance(t, Var):
        return {t.name}
    out: set = set()
    for a in t.args:
        out |= term_variables(a)
    return out


def free_variables(formula: Formula) -> set:
    if isinstance(formula, Bottom):
        return set()
    if isinstance(formula, Atom):
        out: set = set()
        for a in formula.args:
            out |= term_variables(a)
        return out
    if isinstance(formula, BINARY):
        return free_variables(formula.left) | free_variables(formula.right)
    return free_variables(formula.body) - {formula.variable}


def _all_names(formula: Formula) -> set:
    out: set = set()
    for f in _walk(formula):
        if isinstance(f, Atom):
            for a in f.args:
                out |= term_variables(a)
        elif isinstance(f, QUANTIFIERS):
            out.add(f.variable)
    return out


def fresh_name(base: str, avoid: Iterable[str]) -> str:
    avoid = set(avoid)
    stem = base.rstrip("0123456789") or base
    n = 1
    while f"{stem}{n}" in avoid:
        n += 1
    return f"{stem}{n}"


def _subst_term(t: Term, var: str, s: Term) -> Term:
    if isinstance(t, Var):
        return s if t.name == var else t
    return App(t.symbol, tuple(_subst_term(a, var, s) for a in t.args))


def substitute(formula: Formula, variable: str, term: Term) -> Formula:
    """Capture-avoiding substitution of ``term`` for free ``variable``."""
    if variable not in free_variables(formula):
        return formula
    return _subst(formula, variable, term, term_variables(term))


def _subst(f: Formula, var: str, t: Term, tvars: set) -> Formula:
    if isinstance(f, Bottom):
        return f
    if isinstance(f, Atom):
        return Atom(f.predicate, tuple(_subst_term(a, var, t) for a in f.args))
    if isinstance(f, BINARY):
        return type(f)(_subst(f.left, var, t, tvars), _subst(f.right, var, t, tvars))
    if f.variable == var or var not in free_variables(f.body):
        return f
    bound, body = f.variable, f.body
    if bound in tvars:
        new = fresh_name(bound, tvars | _all_names(body) | {var})
        body = _subst(body, bound, Var(new), {new})
        bound = new
    return type(f)(bound, _subst(body, var, t, tvars))


# ------------------------------------------------------- alpha-equivalence

def alpha_key(formula: Formula, _env: tuple = ()):
    """Canonical nested-tuple key; bound variables become de Bruijn indices."""
    f = formula
    if isinstance(f, Bottom):
        return ("bot",)
    if isinstance(f, Atom):
        return ("atom", f.predicate, tuple(_term_key(a, _env) for a in f.args))
    if isinstance(f, BINARY):
        return (type(f).__name__, alpha_key(f.left, _env), alpha_key(f.right, _env))
    return (type(f).__name__, alpha_key(f.body, (f.variable,) + _env))


def _term_key(t: Term, env: tuple):
    if isinstance(t, Var):
        if t.name in env:
            return ("#", env.index(t.name))
        return ("v", t.name)
    return ("f", t.symbol, tuple(_term_key(a, env) for a in t.args))


def alpha_equal(a: Formula, b: Formula) -> bool:
    return a == b or alpha_key(a) == alpha_key(b)


# ----------------------------------------------------------- misc queries

def in_clprime_fragment(formula: Formula) -> bool:
    """Built from non-bottom atoms with negation, disjunction and existentials only."""
    f = formula
    if isinstance(f, Atom):
        return True
    if isinstance(f, Disj):
        return in_clprime_fragment(f.left) and in_clprime_fragment(f.right)
    if isinstance(f, Exists):
        return in_clprime_fragment(f.body)
    if is_negation(f):
        return in_clprime_fragment(f.left)
    return False


def size(formula: Formula) -> int:
    return sum(1 for _ in _walk(formula))


def depth(formula: Formula) -> int:
    if isinstance(formula, (Bottom, Atom)):
        return 1
    if isinstance(formula, BINARY):
        return 1 + max(depth(formula.left), depth(formula.right))
    return 1 + depth(formula.body)


def is_quantifier_free(formula: Formula) -> bool:
    return not any(isinstance(f, QUANTIFIERS) for f in _walk(formula))


def atoms(formula: Formula) -> list:
    """Distinct atoms (not bottom) in order of first occurrence."""
    seen: dict = {}
    for f in _walk(formula):
        if isinstance(f, Atom):
            seen.setdefault(f, None)
    return list(seen)


def replace_atoms(formula: Formula, mapping: dict) -> Formula:
    """Replace whole atoms (and ``Bottom``, if it is a key) by formulas.

    No capture check: intended for quantifier-free formulas or closed
    replacement formulas.
    """
    f = formula
    if isinstance(f, (Atom, Bottom)):
        return mapping.get(f, f)
    if isinstance(f, BINARY):
        return type(f)(replace_atoms(f.left, mapping), replace_atoms(f.right, mapping))
    return type(f)(f.variable, replace_atoms(f.body, mapping))
