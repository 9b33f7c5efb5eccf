"""Natural-deduction proof terms, their checker, synthesizers and transformers."""

from .checker import CheckResult, check_proof, infer
from .terms import (
    Abst, Apply, Case, DoubleNegElim, ExFalso, Gen, Hyp, Inst, InjL, InjR, Pair, ProjL,
    ProjR, ProofTerm, Unpack, Witness,
)

__all__ = [
    "CheckResult", "check_proof", "infer", "Abst", "Apply", "Case", "DoubleNegElim",
    "ExFalso", "Gen", "Hyp", "Inst", "InjL", "InjR", "Pair", "ProjL", "ProjR", "ProofTerm",
    "Unpack", "Witness",
]
