"""Evaluation kernels for truth tables and finite Kripke models.

Formulas are compiled to a flat program (postfix order, one instruction per
subformula). Each kernel exists twice: a numba ``@njit`` loop and a
vectorised numpy version. ``KF_NUMBA=0`` selects numpy; by default numba is
used when it imports.
"""

from __future__ import annotations

import os

import numpy as np

OP_ATOM, OP_BOT, OP_AND, OP_OR, OP_IMP = 0, 1, 2, 3, 4

try:
    import numba
except ImportError:  # pragma: no cover - numba is optional
    numba = None

USE_NUMBA = numba is not None and os.environ.get("KF_NUMBA", "1").strip().lower() not in (
    "0", "false", "no", "off")

_CHUNK = 1 << 15


# ---------------------------------------------------------- truth tables

def _truth_table_loop(ops, arg1, arg2, n_atoms):
    vals = np.zeros(ops.shape[0], dtype=np.uint8)
    last = ops.shape[0] - 1
    for row in range(1 << n_atoms):
        for i in range(ops.shape[0]):
            op = ops[i]
            if op == OP_ATOM:
                vals[i] = (row >> arg1[i]) & 1
            elif op == OP_BOT:
                vals[i] = 0
            elif op == OP_AND:
                vals[i] = vals[arg1[i]] & vals[arg2[i]]
            elif op == OP_OR:
                vals[i] = vals[arg1[i]] | vals[arg2[i]]
            else:
                vals[i] = (1 - vals[arg1[i]]) | vals[arg2[i]]
        if vals[last] == 0:
            return row
    return -1


def _truth_table_numpy(ops, arg1, arg2, n_atoms):
    rows = np.arange(1 << n_atoms, dtype=np.int64)
    vals = []
    for i in range(ops.shape[0]):
        op = ops[i]
        if op == OP_ATOM:
            v = ((rows >> arg1[i]) & 1).astype(bool)
        elif op == OP_BOT:
            v = np.zeros(rows.shape[0], dtype=bool)
        elif op == OP_AND:
            v = vals[arg1[i]] & vals[arg2[i]]
        elif op == OP_OR:
            v = vals[arg1[i]] | vals[arg2[i]]
        else:
            v = ~vals[arg1[i]] | vals[arg2[i]]
        vals.append(v)
    bad = np.flatnonzero(~vals[-1])
    return int(bad[0]) if bad.size else -1


# --------------------------------------------------------- Kripke models

def _kripke_loop(ops, arg1, arg2, n_atoms, up, upsets):
    # Returns the first valuation index (mixed radix over upsets) whose model
    # does not force the program at world 0, or -1.
    n_worlds = up.shape[0]
    full = (1 << n_worlds) - 1
    n_up = upsets.shape[0]
    total = 1
    for _ in range(n_atoms):
        total *= n_up
    vals = np.zeros(ops.shape[0], dtype=np.int64)
    last = ops.shape[0] - 1
    for idx in range(total):
        for i in range(ops.shape[0]):
            op = ops[i]
            if op == OP_ATOM:
                digit = idx
                for _ in range(arg1[i]):
                    digit //= n_up
                vals[i] = upsets[digit % n_up]
            elif op == OP_BOT:
                vals[i] = 0
            elif op == OP_AND:
                vals[i] = vals[arg1[i]] & vals[arg2[i]]
            elif op == OP_OR:
                vals[i] = vals[arg1[i]] | vals[arg2[i]]
            else:
                m = (~vals[arg1[i]] | vals[arg2[i]]) & full
                res = 0
                for w in range(n_worlds):
                    if (m & up[w]) == up[w]:
                        res |= 1 << w
                vals[i] = res
        if (vals[last] & 1) == 0:
            return idx
    return -1


def _kripke_numpy(ops, arg1, arg2, n_atoms, up, upsets):
    n_worlds = up.shape[0]
    full = (1 << n_worlds) - 1
    n_up = upsets.shape[0]
    total = n_up ** n_atoms
    for start in range(0, total, _CHUNK):
        idx = np.arange(start, min(total, start + _CHUNK), dtype=np.int64)
        vals = []
        for i in range(ops.shape[0]):
            op = ops[i]
            if op == OP_ATOM:
                v = upsets[(idx // (n_up ** int(arg1[i]))) % n_up]
            elif op == OP_BOT:
                v = np.zeros(idx.shape[0], dtype=np.int64)
            elif op == OP_AND:
                v = vals[arg1[i]] & vals[arg2[i]]
            elif op == OP_OR:
                v = vals[arg1[i]] | vals[arg2[i]]
            else:
                m = (~vals[arg1[i]] | vals[arg2[i]]) & full
                v = np.zeros(idx.shape[0], dtype=np.int64)
                for w in range(n_worlds):
                    v |= ((m & up[w]) == up[w]).astype(np.int64) << w
            vals.append(v)
        bad = np.flatnonzero((vals[-1] & 1) == 0)
        if bad.size:
            return int(idx[bad[0]])
    return -1


if numba is not None:
    _truth_table_jit = numba.njit(cache=True)(_truth_table_loop)
    _kripke_jit = numba.njit(cache=True)(_kripke_loop)
else:  # pragma: no cover
    _truth_table_jit = _kripke_jit = None


def falsifying_row(ops, arg1, arg2, n_atoms: int, use_numba: bool = None) -> int:
    """Index of the first truth-table row falsifying the program, or -1."""
    if use_numba is None:
        use_numba = USE_NUMBA
    if use_numba and _truth_table_jit is not None:
        return int(_truth_table_jit(ops, arg1, arg2, n_atoms))
    return _truth_table_numpy(ops, arg1, arg2, n_atoms)


def refuting_valuation(ops, arg1, arg2, n_atoms: int, up, upsets, use_numba: bool = None) -> int:
    """Index of the first up-set valuation refuting the program at world 0, or -1."""
    if use_numba is None:
        use_numba = USE_NUMBA
    if use_numba and _kripke_jit is not None:
        return int(_kripke_jit(ops, arg1, arg2, n_atoms, up, upsets))
    return _kripke_numpy(ops, arg1, arg2, n_atoms, up, upsets)
