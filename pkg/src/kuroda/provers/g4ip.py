"""Contraction-free sequent search (Dyckhoff's G4ip) for propositional IL and ML.

One engine serves both logics. With ex falso enabled it is G4ip; with it
disabled, bottom is an inert atom and the engine decides minimal logic.
Successful searches return a derivation tree that can be turned into a
proof term.
"""

from __future__ import annotations

import enum
from typing import Optional, Union

from ..syntax import (
    BOTTOM, Atom, Bottom, Conj, Disj, Formula, Impl, LogicId, Sequent, atoms, neg, render,
)
from ..proofs.terms import (
    Abst, Apply, Case, ExFalso, FreshLabels, Hyp, InjL, InjR, Pair, ProjL, ProjR,
    ProofTerm, let,
)

__all__ = [
    "Decision", "QuantifierError", "decide", "prove", "derivation", "decide_classical_search",
]

ATOM, BOT, AND, OR, IMP = range(5)


class Decision(enum.Enum):
    PROVABLE = "provable"
    UNPROVABLE = "unprovable"

    def __bool__(self) -> bool:
        return self is Decision.PROVABLE

    def __str__(self) -> str:
        return self.value


class QuantifierError(ValueError):
    """Raised when a propositional procedure meets a quantifier."""


def as_sequent(x: Union[Sequent, Formula]) -> Sequent:
    return x if isinstance(x, Sequent) else Sequent((), x)


class Engine:
    def __init__(self, efq: bool):
        self.efq = efq
        self.nodes: list = []
        self.formulas: list = []
        self.index: dict = {}
        self.memo: dict = {}
        self.masks: Optional[list] = None
        self.bot = self._mk((BOT, None, None), BOTTOM)

    def _mk(self, key, formula=None) -> int:
        i = self.index.get(key)
        if i is None:
            i = len(self.nodes)
            self.index[key] = i
            self.nodes.append(key)
            if formula is None:
                tag, a, b = key
                cls = {AND: Conj, OR: Disj, IMP: Impl}[tag]
                formula = cls(self.formulas[a], self.formulas[b])
            self.formulas.append(formula)
            if self.masks is not None:
                self.masks.append(self._mask(key))
        return i

    # Classical pruning: a sequent that fails some truth-table row (bottom
    # read as an atom in ML mode) is unprovable, so it is rejected before
    # any search. Each node carries its truth table as an int bitmask.

    _MAX_PRUNE_ATOMS = 12

    def enable_pruning(self) -> None:
        atom_nodes = [i for i, (tag, _, _) in enumerate(self.nodes)
                      if tag == ATOM or (tag == BOT and not self.efq)]
        n = len(atom_nodes)
        if n > self._MAX_PRUNE_ATOMS:
            return
        rows = 1 << n
        self.full = (1 << rows) - 1
        self.atom_masks = {}
        for k, node in enumerate(atom_nodes):
            # row r makes atom k true iff bit k of r is set
            block = (1 << (1 << k)) - 1
            pattern, width = block << (1 << k), 1 << (k + 1)
            mask = 0
            for start in range(0, rows, width):
                mask |= pattern << start
            self.atom_masks[node] = mask
        self.masks = []
        for key in self.nodes:
            self.masks.append(self._mask(key))

    def _mask(self, key) -> int:
        tag, a, b = key
        if tag == ATOM or tag == BOT:
            return self.atom_masks.get(self.index[key], 0)
        ma, mb = self.masks[a], self.masks[b]
        if tag == AND:
            return ma & mb
        if tag == OR:
            return ma | mb
        return (self.full ^ ma) | mb

    def refuted(self, ctx: frozenset, goal: int) -> bool:
        masks = self.masks
        if masks is None:
            return False
        m = self.full
        for f in ctx:
            m &= masks[f]
        return bool(m & ~masks[goal])

    def intern(self, f: Formula) -> int:
        if isinstance(f, Bottom):
            return self.bot
        if isinstance(f, Atom):
            return self._mk((ATOM, f, None), f)
        if isinstance(f, Conj):
            tag = AND
        elif isinstance(f, Disj):
            tag = OR
        elif isinstance(f, Impl):
            tag = IMP
        else:
            raise QuantifierError(f"quantifier in {render(f)}; only propositional formulas are decidable here")
        return self._mk((tag, self.intern(f.left), self.intern(f.right)), f)

    def imp(self, a: int, b: int) -> int:
        return self._mk((IMP, a, b))

    # ------------------------------------------------------------ search

    def search(self, ctx: frozenset, goal: int):
        key = (ctx, goal)
        memo = self.memo
        if key in memo:
            return memo[key]
        memo[key] = None
        if self.refuted(ctx, goal):
            return None
        d = self._search(ctx, goal)
        memo[key] = d
        return d

    def _search(self, ctx: frozenset, goal: int):
        nodes = self.nodes
        if goal in ctx:
            return ("ax",)
        if self.efq and self.bot in ctx:
            return ("efq",)

        # invertible left rules that do not branch
        for f in ctx:
            tag, a, b = nodes[f]
            if tag == AND:
                d = self.search(ctx.difference((f,)).union((a, b)), goal)
                return d and ("andL", f, d)
            if tag != IMP:
                continue
            ta, c, e = nodes[a]
            if ta == ATOM or (ta == BOT and not self.efq):
                if a in ctx:
                    d = self.search(ctx.difference((f,)).union((b,)), goal)
                    return d and ("impAtom", f, d)
            elif ta == BOT:
                d = self.search(ctx.difference((f,)), goal)
                return d and ("impBot", f, d)
            elif ta == AND:
                g = self.imp(c, self.imp(e, b))
                d = self.search(ctx.difference((f,)).union((g,)), goal)
                return d and ("impAnd", f, g, d)
            elif ta == OR:
                g1, g2 = self.imp(c, b), self.imp(e, b)
                d = self.search(ctx.difference((f,)).union((g1, g2)), goal)
                return d and ("impOr", f, g1, g2, d)

        # invertible right rules
        tag, a, b = nodes[goal]
        if tag == IMP:
            d = self.search(ctx.union((a,)), b)
            return d and ("impR", d)
        if tag == AND:
            d1 = self.search(ctx, a)
            if not d1:
                return None
            d2 = self.search(ctx, b)
            return d2 and ("andR", d1, d2)

        # invertible, branching
        for f in ctx:
            ftag, a1, b1 = nodes[f]
            if ftag == OR:
                rest = ctx.difference((f,))
                d1 = self.search(rest.union((a1,)), goal)
                if not d1:
                    return None
                d2 = self.search(rest.union((b1,)), goal)
                return d2 and ("orL", f, d1, d2)

        # non-invertible choices
        if tag == OR:
            d = self.search(ctx, a)
            if d:
                return ("orR1", d)
            d = self.search(ctx, b)
            if d:
                return ("orR2", d)
        for f in sorted(ctx):
            ftag, cd, b1 = nodes[f]
            if ftag != IMP or nodes[cd][0] != IMP:
                continue
            _, c, dd = nodes[cd]
            g = self.imp(dd, b1)
            rest = ctx.difference((f,))
            d1 = self.search(rest.union((g,)), cd)
            if not d1:
                continue
            d2 = self.search(rest.union((b1,)), goal)
            if d2:
                return ("impImp", f, g, d1, d2)
        return None

    # -------------------------------------------------------- extraction

    def extract(self, d, goal: int, env: dict, fresh: FreshLabels) -> ProofTerm:
        F = self.formulas
        nodes = self.nodes
        rule = d[0]
        if rule == "ax":
            return env[goal]
        if rule == "efq":
            return ExFalso(env[self.bot], F[goal])
        if rule == "andL":
            _, f, sub = d
            _, a, b = nodes[f]
            la, lb = fresh("p"), fresh("p")
            body = self.extract(sub, goal, {**env, a: Hyp(la), b: Hyp(lb)}, fresh)
            return let(la, F[a], ProjL(env[f]), let(lb, F[b], ProjR(env[f]), body))
        if rule == "impAtom":
            _, f, sub = d
            _, a, b = nodes[f]
            lb = fresh("m")
            body = self.extract(sub, goal, {**env, b: Hyp(lb)}, fresh)
            return let(lb, F[b], Apply(env[f], env[a]), body)
        if rule == "impBot":
            return self.extract(d[2], goal, env, fresh)
        if rule == "impAnd":
            _, f, g, sub = d
            _, cd, b = nodes[f]
            _, c, e = nodes[cd]
            x, y, lg = fresh("x"), fresh("y"), fresh("g")
            value = Abst(x, F[c], Abst(y, F[e], Apply(env[f], Pair(Hyp(x), Hyp(y)))))
            body = self.extract(sub, goal, {**env, g: Hyp(lg)}, fresh)
            return let(lg, F[g], value, body)
        if rule == "impOr":
            _, f, g1, g2, sub = d
            _, cd, b = nodes[f]
            _, c, e = nodes[cd]
            x, y, l1, l2 = fresh("x"), fresh("y"), fresh("g"), fresh("g")
            v1 = Abst(x, F[c], Apply(env[f], InjL(Hyp(x), F[e])))
            v2 = Abst(y, F[e], Apply(env[f], InjR(F[c], Hyp(y))))
            body = self.extract(sub, goal, {**env, g1: Hyp(l1), g2: Hyp(l2)}, fresh)
            return let(l1, F[g1], v1, let(l2, F[g2], v2, body))
        if rule == "impR":
            _, a, b = nodes[goal]
            la = fresh("a")
            return Abst(la, F[a], self.extract(d[1], b, {**env, a: Hyp(la)}, fresh))
        if rule == "andR":
            _, a, b = nodes[goal]
            return Pair(self.extract(d[1], a, env, fresh), self.extract(d[2], b, env, fresh))
        if rule == "orL":
            _, f, d1, d2 = d
            _, a, b = nodes[f]
            la, lb = fresh("l"), fresh("r")
            return Case(env[f], la, self.extract(d1, goal, {**env, a: Hyp(la)}, fresh),
                        lb, self.extract(d2, goal, {**env, b: Hyp(lb)}, fresh))
        if rule == "orR1":
            _, a, b = nodes[goal]
            return InjL(self.extract(d[1], a, env, fresh), F[b])
        if rule == "orR2":
            _, a, b = nodes[goal]
            return InjR(F[a], self.extract(d[1], b, env, fresh))
        if rule == "impImp":
            _, f, g, d1, d2 = d
            _, cd, b = nodes[f]
            _, c, dd = nodes[cd]
            lg, y, z, lb = fresh("g"), fresh("y"), fresh("z"), fresh("m")
            g_value = Abst(y, F[dd], Apply(env[f], Abst(z, F[c], Hyp(y))))
            cd_proof = let(lg, F[g], g_value, self.extract(d1, cd, {**env, g: Hyp(lg)}, fresh))
            body = self.extract(d2, goal, {**env, b: Hyp(lb)}, fresh)
            return let(lb, F[b], Apply(env[f], cd_proof), body)
        raise AssertionError(f"unknown rule {rule}")


def _run(logic: LogicId, sequent: Sequent):
    engine = Engine(efq=logic is not LogicId.ML)
    env: dict = {}
    for label, f in sequent.hypotheses:
        env.setdefault(engine.intern(f), Hyp(label))
    goal = engine.intern(sequent.conclusion)
    engine.enable_pruning()
    return engine, env, goal, engine.search(frozenset(env), goal)


def derivation(logic: LogicId, sequent: Union[Sequent, Formula]):
    """The raw derivation tree found by the search, or None."""
    if logic is LogicId.CL:
        raise ValueError("derivations are only produced for ML and IL")
    return _run(logic, as_sequent(sequent))[3]


def prove(logic: LogicId, sequent: Union[Sequent, Formula]) -> Optional[ProofTerm]:
    """A proof term for the sequent under ML or IL, or None if unprovable."""
    if logic is LogicId.CL:
        raise ValueError("proof terms are only produced for ML and IL")
    sequent = as_sequent(sequent)
    engine, env, goal, d = _run(logic, sequent)
    if d is None:
        return None
    fresh = FreshLabels((label for label, _ in sequent.hypotheses), prefix="h")
    return engine.extract(d, goal, env, fresh)


def decide(logic: LogicId, sequent: Union[Sequent, Formula]) -> Decision:
    """Propositional derivability of the sequent in ML, IL or CL."""
    sequent = as_sequent(sequent)
    if logic is LogicId.CL:
        from .semantics import classical_valid
        return Decision.PROVABLE if classical_valid(sequent.as_formula()) else Decision.UNPROVABLE
    d = _run(logic, sequent)[3]
    return Decision.PROVABLE if d else Decision.UNPROVABLE


def decide_classical_search(sequent: Union[Sequent, Formula]) -> Decision:
    """CL derivability by proof search: the IL engine with a hypothesis
    ``p | ~p`` for every atom (stability ``~~p -> p`` would not reach
    disjunctions). Independent of the truth tables."""
    sequent = as_sequent(sequent)
    seen = []
    for f in [g for _, g in sequent.hypotheses] + [sequent.conclusion]:
        for a in atoms(f):
            if a not in seen:
                seen.append(a)
    fresh = FreshLabels((label for label, _ in sequent.hypotheses), prefix="lem")
    extra = tuple((fresh(), Disj(a, neg(a))) for a in seen)
    d = _run(LogicId.IL, Sequent(sequent.hypotheses + extra, sequent.conclusion))[3]
    return Decision.PROVABLE if d else Decision.UNPROVABLE
