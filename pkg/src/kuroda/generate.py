"""Deterministic random formulas for the verification suites."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Mapping

from .syntax import BOTTOM, Atom, Conj, Disj, Exists, Forall, Formula, Impl, Var, neg

CONNECTIVES = ("atom", "and", "or", "imp", "not", "forall", "exists")

DEFAULT_WEIGHTS = {"atom": 3, "and": 2, "or": 2, "imp": 3, "not": 1, "forall": 1, "exists": 1}


@dataclass(frozen=True)
class GeneratorConfig:
    max_depth: int = 5
    atoms: tuple = ("P", "Q", "R")
    include_bottom: bool = True
    connective_weights: Mapping = field(default_factory=lambda: dict(DEFAULT_WEIGHTS))
    quantifier_free: bool = True
    seed: int = 0
    variables: tuple = ("x", "y")

    def __post_init__(self):
        object.__setattr__(self, "atoms", tuple(self.atoms))
        object.__setattr__(self, "variables", tuple(self.variables))
        if self.max_depth < 1:
            raise ValueError("max_depth must be at least 1")
        if not self.atoms and not self.include_bottom:
            raise ValueError("need at least one atom or bottom")
        unknown = set(self.connective_weights) - set(CONNECTIVES)
        if unknown:
            raise ValueError(f"unknown connectives in weights: {sorted(unknown)}")
        if any(w < 0 for w in self.connective_weights.values()):
            raise ValueError("weights must be nonnegative")
        if not any(self._weights().values()):
            raise ValueError("weights must not all be zero")
        if not self.quantifier_free and not self.variables:
            raise ValueError("first-order generation needs variables")
        if not -(1 << 63) <= self.seed < (1 << 64):
            raise ValueError("seed must fit in 64 bits")

    def _weights(self) -> dict:
        w = {k: self.connective_weights.get(k, 0) for k in CONNECTIVES}
        if self.quantifier_free:
            w["forall"] = w["exists"] = 0
        return w

    def to_json(self) -> dict:
        return {
            "max_depth": self.max_depth,
            "atoms": list(self.atoms),
            "include_bottom": self.include_bottom,
            "connective_weights": dict(self.connective_weights),
            "quantifier_free": self.quantifier_free,
            "seed": self.seed,
            "variables": list(self.variables),
        }


def random_formula(config: GeneratorConfig, index: int) -> Formula:
    """The ``index``-th formula of the stream fixed by ``config.seed``."""
    rng = random.Random(f"{config.seed}:{index}")
    weights = config._weights()
    kinds = [k for k in CONNECTIVES if weights[k] > 0]
    kind_weights = [weights[k] for k in kinds]
    leaves = list(config.atoms) + ([None] if config.include_bottom else [])

    def leaf() -> Formula:
        name = rng.choice(leaves)
        if name is None:
            return BOTTOM
        if config.quantifier_free:
            return Atom(name)
        return Atom(name, (Var(rng.choice(config.variables)),))

    def gen(d: int) -> Formula:
        if d <= 1:
            return leaf()
        kind = rng.choices(kinds, kind_weights)[0]
        if kind == "atom":
            return leaf()
        if kind == "not":
            return neg(gen(d - 1))
        if kind in ("forall", "exists"):
            cls = Forall if kind == "forall" else Exists
            return cls(rng.choice(config.variables), gen(d - 1))
        cls = {"and": Conj, "or": Disj, "imp": Impl}[kind]
        return cls(gen(d - 1), gen(d - 1))

    return gen(config.max_depth)
