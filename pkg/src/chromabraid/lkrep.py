"""Exact faithful matrix representation used to cross-validate equal_in_Bn.

The representation acts on the free Z[q^+-1, t^+-1] module with basis x_{j,k}
for 1 <= j < k <= n.  A generator sigma_i sends x_{j,k} to

    x_{j,k}                                       i not in {j-1, j, k-1, k}
    q x_{i,k} + (q^2-q) x_{i,j} + (1-q) x_{j,k}   i = j-1
    x_{j+1,k}                                     i = j != k-1
    q x_{j,i} + (1-q) x_{j,k} - (q^2-q) t x_{i,k}  i = k-1 != j
    x_{j,k+1}                                     i = k
    -t q^2 x_{j,k}                                i = j = k-1

and the rules for sigma_i^-1 are obtained by solving the six cases above.
Matrices are stored exactly: an entry is a Laurent polynomial held as an
integer window indexed by (q exponent, t exponent).  A word of length L
only ever reaches q exponents in [-2L, 2L] and t exponents in [-L, L], and
the coefficient magnitudes stay below 5^L, so int64 is exact up to L = 22;
longer words fall back to Python integers via an object array.

Only whole-matrix equality is consumed downstream, so the left/right action
convention is immaterial: word reversal preserves equality in B_n.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from .errors import StrandMismatchError
from .words import BraidWord

_INT64_MAX_LEN = 22

# Monomial lists as (coefficient, q exponent, t exponent).
_ONE = ((1, 0, 0),)
_Q = ((1, 1, 0),)
_Q2_MINUS_Q = ((1, 2, 0), (-1, 1, 0))
_ONE_MINUS_Q = ((1, 0, 0), (-1, 1, 0))
_MINUS_TQ2 = ((-1, 2, 1),)
_MINUS_Q2_MINUS_Q_T = ((-1, 2, 1), (1, 1, 1))
_QINV = ((1, -1, 0),)
_ONE_MINUS_QINV = ((1, 0, 0), (-1, -1, 0))
_MINUS_TQ2_INV = ((-1, -2, -1),)
_TINV_QINV_MINUS_QINV2 = ((1, -1, -1), (-1, -2, -1))
_MINUS_QINV_MINUS_QINV2 = ((-1, -1, 0), (1, -2, 0))


@lru_cache(maxsize=None)
def _pairs(n: int) -> tuple[tuple[int, int], ...]:
    return tuple((j, k) for j in range(1, n + 1) for k in range(j + 1, n + 1))


@lru_cache(maxsize=None)
def _pair_index(n: int) -> dict[tuple[int, int], int]:
    return {pair: idx for idx, pair in enumerate(_pairs(n))}


@lru_cache(maxsize=None)
def _column_rules(n: int, letter: int):
    """Non-identity columns of the matrix of sigma_letter: a list of
    (column index, ((row index, monomials), ...)) entries."""
    i = abs(letter)
    idx = _pair_index(n)
    rules = []
    for (j, k), c in idx.items():
        if letter > 0:
            if i == j and i == k - 1:
                terms = (((j, k), _MINUS_TQ2),)
            elif i == j - 1:
                terms = (((i, k), _Q), ((i, j), _Q2_MINUS_Q), ((j, k), _ONE_MINUS_Q))
            elif i == j:
                terms = (((j + 1, k), _ONE),)
            elif i == k - 1:
                terms = (
                    ((j, k - 1), _Q),
                    ((j, k), _ONE_MINUS_Q),
                    ((k - 1, k), _MINUS_Q2_MINUS_Q_T),
                )
            elif i == k:
                terms = (((j, k + 1), _ONE),)
            else:
                continue
        else:
            if j == i and k == i + 1:
                terms = (((i, i + 1), _MINUS_TQ2_INV),)
            elif j == i + 1:
                terms = (((i, k), _ONE),)
            elif j == i:
                terms = (
                    ((i, k), _ONE_MINUS_QINV),
                    ((i + 1, k), _QINV),
                    ((i, i + 1), _TINV_QINV_MINUS_QINV2),
                )
            elif k == i + 1:
                terms = (((j, i), _ONE),)
            elif k == i:
                terms = (
                    ((j, i), _ONE_MINUS_QINV),
                    ((j, i + 1), _QINV),
                    ((i, i + 1), _MINUS_QINV_MINUS_QINV2),
                )
            else:
                continue
        rules.append((c, tuple((idx[row], monos) for row, monos in terms)))
    return tuple(rules)


def _shift_add(dst: np.ndarray, src: np.ndarray, coef: int, dq: int, dt: int):
    """dst += coef * q^dq t^dt * src, on exponent-window arrays (..., NQ, NT)."""
    nq, nt = src.shape[-2], src.shape[-1]
    qd = slice(max(0, dq), nq + min(0, dq))
    qs = slice(max(0, -dq), nq + min(0, -dq))
    td = slice(max(0, dt), nt + min(0, dt))
    ts = slice(max(0, -dt), nt + min(0, -dt))
    dst[..., qd, td] += coef * src[..., qs, ts]


def lk_matrix(w: BraidWord, length_budget: int | None = None) -> np.ndarray:
    """Exact matrix of w, shape (m, m, 4B+1, 2B+1) with B the length budget.

    Entry [r, c, 2B + eq, B + et] is the coefficient of q^eq t^et in the
    (x_r, x_c) matrix entry.  Words compared for equality must be rendered
    with the same budget so the windows line up.
    """
    n = w.strands
    if n < 2:
        raise StrandMismatchError("representation needs at least 2 strands")
    budget = max(len(w.letters), 1) if length_budget is None else length_budget
    if budget < len(w.letters):
        raise ValueError("length budget smaller than the word")
    m = n * (n - 1) // 2
    nq, nt = 4 * budget + 1, 2 * budget + 1
    dtype = np.int64 if budget <= _INT64_MAX_LEN else object
    mat = np.zeros((m, m, nq, nt), dtype=dtype)
    q0, t0 = 2 * budget, budget
    for r in range(m):
        mat[r, r, q0, t0] = 1
    for letter in w.letters:
        new_cols = []
        for c, terms in _column_rules(n, letter):
            acc = np.zeros((m, nq, nt), dtype=dtype)
            for s, monos in terms:
                for coef, dq, dt in monos:
                    _shift_add(acc, mat[:, s], coef, dq, dt)
            new_cols.append((c, acc))
        for c, acc in new_cols:
            mat[:, c] = acc
    return mat


def equal_via_representation(u: BraidWord, v: BraidWord) -> bool:
    """Exact comparison of representation matrices; agrees with equal_in_Bn."""
    if u.strands != v.strands:
        raise StrandMismatchError(
            f"comparing words on {u.strands} and {v.strands} strands"
        )
    if u.strands == 1:
        return True
    budget = max(len(u.letters), len(v.letters), 1)
    return np.array_equal(
        lk_matrix(u, length_budget=budget), lk_matrix(v, length_budget=budget)
    )
