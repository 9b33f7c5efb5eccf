"""Propositional decision procedures and the Kripke refutation oracle."""

from .g4ip import Decision, QuantifierError, decide, prove
from .semantics import KripkeModel, classical_valid, countermodel, eval_model

__all__ = [
    "Decision", "QuantifierError", "decide", "prove", "KripkeModel", "classical_valid",
    "countermodel", "eval_model",
]
