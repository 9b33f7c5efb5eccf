"""Classical truth tables and finite Kripke models (refutation oracle)."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional

import numpy as np

from ..syntax import (
    BOTTOM, Atom, Bottom, Conj, Disj, Formula, Impl, LogicId, render,
)
from . import kernels
from .g4ip import QuantifierError

__all__ = [
    "KripkeModel", "classical_valid", "eval_model", "countermodel", "rooted_posets",
    "compile_formula",
]


def compile_formula(formula: Formula, bottom_atom: bool = False):
    """Flatten a quantifier-free formula into kernel arrays.

    Returns ``(ops, arg1, arg2, atom_list)``; the result is the last
    instruction. With ``bottom_atom`` bottom gets an atom slot of its own.
    """
    ops, a1, a2 = [], [], []
    atom_ix: dict = {}
    memo: dict = {}

    def emit(op, x, y):
        ops.append(op)
        a1.append(x)
        a2.append(y)
        return len(ops) - 1

    def go(f: Formula) -> int:
        if f in memo:
            return memo[f]
        if isinstance(f, Atom) or (isinstance(f, Bottom) and bottom_atom):
            k = atom_ix.setdefault(f, len(atom_ix))
            out = emit(kernels.OP_ATOM, k, 0)
        elif isinstance(f, Bottom):
            out = emit(kernels.OP_BOT, 0, 0)
        elif isinstance(f, (Conj, Disj, Impl)):
            x, y = go(f.left), go(f.right)
            op = {Conj: kernels.OP_AND, Disj: kernels.OP_OR, Impl: kernels.OP_IMP}[type(f)]
            out = emit(op, x, y)
        else:
            raise QuantifierError(f"quantifier in {render(f)}; semantics here is propositional")
        memo[f] = out
        return out

    go(formula)
    return (np.array(ops, dtype=np.int8), np.array(a1, dtype=np.int32),
            np.array(a2, dtype=np.int32), list(atom_ix))


def classical_valid(formula: Formula) -> bool:
    """Truth-table validity with bottom false."""
    ops, a1, a2, atom_list = compile_formula(formula)
    if len(atom_list) > 24:
        raise ValueError("too many atoms for a truth table")
    return kernels.falsifying_row(ops, a1, a2, len(atom_list)) < 0


# ------------------------------------------------------------ Kripke models

@dataclass(frozen=True)
class KripkeModel:
    """A finite rooted model. ``bottom_atom`` marks minimal-logic mode,
    where bottom is an ordinary (persistent) atom."""

    worlds: tuple
    order: frozenset  # pairs (w, v) with w <= v; reflexive and transitive
    valuation: dict = field(hash=False)  # world -> frozenset of atoms
    bottom_atom: bool = False

    def __post_init__(self):
        ws = set(self.worlds)
        for w in ws:
            if (w, w) not in self.order:
                raise ValueError(f"order is not reflexive at {w}")
        for (a, b) in self.order:
            if a not in ws or b not in ws:
                raise ValueError(f"order mentions unknown world in {(a, b)}")
            for (c, d) in self.order:
                if b == c and (a, d) not in self.order:
                    raise ValueError("order is not transitive")
                if a == d and b == c and a != b:
                    raise ValueError("order is not antisymmetric")
        for (a, b) in self.order:
            if not self.valuation.get(a, frozenset()) <= self.valuation.get(b, frozenset()):
                raise ValueError(f"valuation is not persistent from {a} to {b}")
        if not self.bottom_atom and any(BOTTOM in v for v in self.valuation.values()):
            raise ValueError("bottom may be forced only in minimal-logic models")

    def above(self, w) -> list:
        return [v for v in self.worlds if (w, v) in self.order]

    @property
    def root(self):
        for w in self.worlds:
            if all((w, v) in self.order for v in self.worlds):
                return w
        return None

    def to_json(self) -> dict:
        return {
            "worlds": list(self.worlds),
            "order": sorted([a, b] for a, b in self.order),
            "valuation": {str(w): sorted(render(p) for p in self.valuation.get(w, ()))
                          for w in self.worlds},
            "root": self.root,
            "bottom_atom": self.bottom_atom,
        }


def eval_model(model: KripkeModel, world, formula: Formula) -> bool:
    """The forcing relation, computed directly on the formula tree."""
    if world not in model.worlds:
        raise ValueError(f"unknown world {world!r}")
    f = formula
    if isinstance(f, Bottom):
        return model.bottom_atom and BOTTOM in model.valuation.get(world, ())
    if isinstance(f, Atom):
        return f in model.valuation.get(world, ())
    if isinstance(f, Conj):
        return eval_model(model, world, f.left) and eval_model(model, world, f.right)
    if isinstance(f, Disj):
        return eval_model(model, world, f.left) or eval_model(model, world, f.right)
    if isinstance(f, Impl):
        return all(not eval_model(model, v, f.left) or eval_model(model, v, f.right)
                   for v in model.above(world))
    raise QuantifierError(f"quantifier in {render(f)}; forcing here is propositional")


@lru_cache(maxsize=None)
def rooted_posets(n: int) -> tuple:
    """Rooted posets on worlds 0..n-1 (0 the root), one per isomorphism class.

    Each is a tuple of up-set bitmasks, ``up[w]`` = worlds above ``w``.
    Every finite poset has a natural labelling, so it suffices to choose
    relations ``i < j`` with ``i < j`` among the non-root worlds.
    """
    if n < 1:
        raise ValueError("need at least one world")
    rest = list(range(1, n))
    pairs = [(i, j) for i in rest for j in rest if i < j]
    perms = list(itertools.permutations(rest))
    seen = set()
    out = []
    for bits in range(1 << len(pairs)):
        rel = {p for k, p in enumerate(pairs) if bits >> k & 1}
        closure = _transitive(rel)
        if frozenset(closure) != frozenset(rel):
            continue  # count each transitive relation once
        canon = min(tuple(sorted((perm[i - 1], perm[j - 1]) for i, j in rel)) for perm in perms)
        if canon in seen:
            continue
        seen.add(canon)
        up = []
        for w in range(n):
            mask = 1 << w
            if w == 0:
                mask = (1 << n) - 1
            else:
                for (i, j) in rel:
                    if i == w:
                        mask |= 1 << j
            up.append(mask)
        out.append(tuple(up))
    return tuple(out)


def _transitive(rel: set) -> set:
    closure = set(rel)
    changed = True
    while changed:
        changed = False
        for (a, b) in list(closure):
            for (c, d) in list(closure):
                if b == c and (a, d) not in closure:
                    closure.add((a, d))
                    changed = True
    return closure


@lru_cache(maxsize=None)
def _upsets(up: tuple) -> np.ndarray:
    n = len(up)
    out = [s for s in range(1 << n)
           if all(up[w] & s == up[w] for w in range(n) if s >> w & 1)]
    return np.array(out, dtype=np.int64)


def countermodel(logic: LogicId, formula: Formula, max_worlds: int = 4) -> Optional[KripkeModel]:
    """Smallest rooted model with at most ``max_worlds`` worlds refuting the
    formula at its root, or None. None does not mean the formula is provable."""
    if logic not in (LogicId.ML, LogicId.IL):
        raise ValueError("countermodels are searched for ML and IL only")
    if max_worlds < 1:
        raise ValueError("max_worlds must be positive")
    ml = logic is LogicId.ML
    # In ML mode, models that never force bottom are tried first; they are
    # the more informative refutations and are also IL countermodels.
    passes = (False, True) if ml else (False,)
    for bottom_atom in passes:
        program = compile_formula(formula, bottom_atom=bottom_atom)
        found = _search(program, max_worlds, ml)
        if found is not None:
            return found
    return None


def _search(program, max_worlds: int, ml: bool) -> Optional[KripkeModel]:
    ops, a1, a2, atom_list = program
    for n in range(1, max_worlds + 1):
        for up in rooted_posets(n):
            ups = _upsets(up)
            up_arr = np.array(up, dtype=np.int64)
            idx = kernels.refuting_valuation(ops, a1, a2, len(atom_list), up_arr, ups)
            if idx >= 0:
                return _build_model(up, ups, atom_list, idx, ml)
    return None


def _build_model(up, ups, atom_list, idx: int, ml: bool) -> KripkeModel:
    n = len(up)
    valuation = {w: set() for w in range(n)}
    for k, atom in enumerate(atom_list):
        mask = int(ups[(idx // len(ups) ** k) % len(ups)])
        for w in range(n):
            if mask >> w & 1:
                valuation[w].add(atom)
    order = frozenset((w, v) for w in range(n) for v in range(n) if up[w] >> v & 1)
    return KripkeModel(tuple(range(n)), order,
                       {w: frozenset(s) for w, s in valuation.items()}, bottom_atom=ml)
