"""The Kuroda negative translation, its minimal-logic variants K1-K8 and the
auxiliary translations T1-T5 used to prove them sound.

Every translation is a structural recursion. Bottom counts as an atomic
formula in the atomic clauses unless ``bottom_atomic=False`` is passed.
"""

from __future__ import annotations

import contextlib
import contextvars
import enum
from typing import Callable, Optional

from .syntax import (
    BOTTOM, Atom, Bottom, Conj, Disj, Exists, Forall, Formula, Impl, neg,
    free_variables, _walk,
)

__all__ = [
    "TranslationId", "KURODA_VARIANTS", "LEIVANT", "inner_translate", "translate",
    "leivant_translate", "shoenfield_translate", "apply_translation",
    "default_witness", "MUTATIONS", "mutation", "active_mutation",
]


class TranslationId(enum.Enum):
    K = "k"
    K1 = "k1"
    K2 = "k2"
    K3 = "k3"
    K4 = "k4"
    K5 = "k5"
    K6 = "k6"
    K7 = "k7"
    K8 = "k8"
    T1 = "t1"
    T2 = "t2"
    T3 = "t3"
    T4 = "t4"
    T5 = "t5"

    @classmethod
    def parse(cls, text: str) -> "TranslationId":
        try:
            return cls(text.strip().lower())
        except ValueError:
            raise ValueError(f"unknown translation {text!r}") from None

    def __str__(self) -> str:
        return self.value

    @property
    def is_kuroda(self) -> bool:
        return self in KURODA_VARIANTS

    @property
    def index(self) -> int:
        """1 for K1/T1, ... ; 0 for K."""
        return int(self.value[1:] or 0)


T = TranslationId
KURODA_VARIANTS = (T.K, T.K1, T.K2, T.K3, T.K4, T.K5, T.K6, T.K7, T.K8)
LEIVANT = (T.T1, T.T2, T.T3, T.T4)

Clause = Callable[..., Formula]

_ATOM_CLAUSES: dict = {
    T.K1: lambda p: Disj(p, BOTTOM),
    T.K2: lambda p: neg(neg(p)),
    T.K3: lambda p: Impl(Impl(BOTTOM, p), p),
}

_IMPL_CLAUSES: dict = {
    T.K4: lambda a, b: Impl(a, Disj(b, BOTTOM)),
    T.K5: lambda a, b: Disj(neg(a), b),
    T.K6: lambda a, b: Impl(a, neg(neg(b))),
    T.K7: lambda a, b: Impl(neg(b), neg(a)),
    T.K8: lambda a, b: neg(Conj(a, neg(b))),
}


# ----------------------------------------------------------- mutation hook
#
# Test-only: a mutation swaps one propositional clause of one translation
# so the harness can show that its suites detect the change.

MUTATIONS: dict = {
    "k1-atom-plain": (T.K1, "atom", lambda p: p),
    "k2-atom-single-negation": (T.K2, "atom", lambda p: neg(p)),
    "k3-atom-plain": (T.K3, "atom", lambda p: p),
    "k4-impl-no-bottom": (T.K4, "impl", lambda a, b: Impl(a, b)),
    "k5-impl-no-negation": (T.K5, "impl", lambda a, b: Disj(a, b)),
    "k6-impl-no-double-negation": (T.K6, "impl", lambda a, b: Impl(a, b)),
    "k7-impl-uncontraposed": (T.K7, "impl", lambda a, b: Impl(neg(a), neg(b))),
    "k8-impl-missing-negation": (T.K8, "impl", lambda a, b: neg(Conj(a, b))),
}

_MUTATION: contextvars.ContextVar = contextvars.ContextVar("kuroda_mutation", default=None)


@contextlib.contextmanager
def mutation(name: Optional[str]):
    """Activate one entry of ``MUTATIONS`` for the current context."""
    if name is not None and name not in MUTATIONS:
        raise ValueError(f"unknown mutation {name!r}")
    token = _MUTATION.set(name)
    try:
        yield
    finally:
        _MUTATION.reset(token)


def active_mutation() -> Optional[str]:
    return _MUTATION.get()


def _clauses(tid: TranslationId):
    atom_clause = _ATOM_CLAUSES.get(tid)
    impl_clause = _IMPL_CLAUSES.get(tid)
    name = _MUTATION.get()
    if name is not None:
        target, kind, clause = MUTATIONS[name]
        if target is tid:
            if kind == "atom":
                atom_clause = clause
            else:
                impl_clause = clause
    return atom_clause, impl_clause


# ------------------------------------------------------ Kuroda and variants

def _require_kuroda(tid: TranslationId) -> None:
    if not isinstance(tid, TranslationId) or not tid.is_kuroda:
        raise ValueError(f"{tid} is not one of K, K1..K8")


def inner_translate(tid: TranslationId, formula: Formula, *, bottom_atomic: bool = True) -> Formula:
    """The body of the translation, before the outer double negation."""
    _require_kuroda(tid)
    atom_clause, impl_clause = _clauses(tid)

    def go(f: Formula) -> Formula:
        if isinstance(f, Atom) or (isinstance(f, Bottom) and bottom_atomic):
            return atom_clause(f) if atom_clause else f
        if isinstance(f, Bottom):
            return f
        if isinstance(f, Conj):
            return Conj(go(f.left), go(f.right))
        if isinstance(f, Disj):
            return Disj(go(f.left), go(f.right))
        if isinstance(f, Impl):
            a, b = go(f.left), go(f.right)
            return impl_clause(a, b) if impl_clause else Impl(a, b)
        if isinstance(f, Forall):
            return Forall(f.variable, neg(neg(go(f.body))))
        return Exists(f.variable, go(f.body))

    return go(formula)


def translate(tid: TranslationId, formula: Formula, *, bottom_atomic: bool = True) -> Formula:
    return neg(neg(inner_translate(tid, formula, bottom_atomic=bottom_atomic)))


# --------------------------------------------------------------- T1 - T4

_LEIVANT_ATOMS = {
    T.T1: lambda p: Disj(p, BOTTOM),
    T.T2: lambda p: neg(neg(p)),
    T.T3: lambda p: Impl(Impl(BOTTOM, p), p),
    T.T4: lambda p: Disj(p, BOTTOM),
}


def leivant_translate(tid: TranslationId, formula: Formula, *, bottom_atomic: bool = True) -> Formula:
    if tid not in LEIVANT:
        raise ValueError(f"{tid} is not one of T1..T4")
    atom_clause = _LEIVANT_ATOMS[tid]
    t4 = tid is T.T4

    def go(f: Formula) -> Formula:
        if isinstance(f, Atom) or (isinstance(f, Bottom) and bottom_atomic):
            return atom_clause(f)
        if isinstance(f, Bottom):
            return f
        if isinstance(f, Impl):
            a, b = go(f.left), go(f.right)
            return Impl(a, Disj(b, BOTTOM)) if t4 else Impl(a, b)
        if isinstance(f, (Conj, Disj)):
            return type(f)(go(f.left), go(f.right))
        return type(f)(f.variable, go(f.body))

    return go(formula)


# --------------------------------------------------------------------- T5

def default_witness(formula: Optional[Formula] = None) -> Atom:
    """The reserved nullary atom ``C0``, or ``C1``, ... if the name is taken."""
    used = set()
    if formula is not None:
        used = {f.predicate for f in _walk(formula) if isinstance(f, Atom)}
    n = 0
    while f"C{n}" in used:
        n += 1
    return Atom(f"C{n}")


def shoenfield_translate(formula: Formula, witness: Optional[Formula] = None) -> Formula:
    """Translation into the negation/disjunction/existential fragment."""
    if witness is None:
        witness = default_witness(formula)
    if free_variables(witness):
        raise ValueError("the T5 witness formula must be closed")
    falsum = neg(Disj(neg(witness), witness))

    def go(f: Formula) -> Formula:
        if isinstance(f, Bottom):
            return falsum
        if isinstance(f, Atom):
            return f
        if isinstance(f, Conj):
            return neg(Disj(neg(go(f.left)), neg(go(f.right))))
        if isinstance(f, Disj):
            return Disj(go(f.left), go(f.right))
        if isinstance(f, Impl):
            return Disj(neg(go(f.left)), go(f.right))
        if isinstance(f, Forall):
            return neg(Exists(f.variable, neg(go(f.body))))
        return Exists(f.variable, go(f.body))

    return go(formula)


def apply_translation(tid: TranslationId, formula: Formula, *, inner: bool = False,
                      witness: Optional[Formula] = None) -> Formula:
    """Dispatch on any translation id, as the CLI does."""
    if tid.is_kuroda:
        return inner_translate(tid, formula) if inner else translate(tid, formula)
    if tid is T.T5:
        return shoenfield_translate(formula, witness)
    return leivant_translate(tid, formula)
