"""Structured matrices driving the state-vector recursion.

All builders are generic over the scalar ring: ``m`` may be a ``Fraction``
or a :class:`~recipcircle.arith.RationalFunction`.  Matrices are plain
row-major lists of lists; indices are 0-based throughout the code.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any, List, Sequence

Matrix = List[List[Any]]


class SingularStep(ArithmeticError):
    """``P_k(m)`` is singular because ``m == 0`` (only possible for ``k >= 1``)."""

    def __init__(self, k: int):
        super().__init__(f"P_{k}(m) is singular at m = 0")
        self.k = k


def _zeros(rows: int, cols: int) -> Matrix:
    return [[Fraction(0)] * cols for _ in range(rows)]


def _v_plus_rows(k: int) -> list[list[int]]:
    """Rows of ``V_k^+`` as lists of length ``k+1``."""
    rows = []
    first = [0] * (k + 1)
    first[0] = 1
    rows.append(first)
    for r in range(1, (k + 1) // 2 + 1):
        row = [0] * (k + 1)
        row[r] += 1
        if k + 1 - r != r:
            row[k + 1 - r] += 1
        rows.append(row)
    return rows


def _v_minus_rows(k: int) -> list[list[int]]:
    rows = []
    first = [0] * (k + 1)
    first[0] = 1
    rows.append(first)
    for r in range(1, k // 2 + 1):
        row = [0] * (k + 1)
        row[r] = 1
        row[k + 1 - r] = -1
        rows.append(row)
    return rows


def build_P(k: int, m) -> Matrix:
    """The ``(2k+2) x (2k+2)`` matrix ``P_k(m)``.

    ``P_0`` is the identity and does not depend on ``m``.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    n = 2 * k + 2
    P = _zeros(n, n)
    row = 0
    for vr in _v_plus_rows(k):
        for j, x in enumerate(vr):
            if x:
                P[row][j] = Fraction(x)
        row += 1
    for vr in _v_minus_rows(k):
        for j, x in enumerate(vr):
            if x:
                P[row][k + 1 + j] = Fraction(x)
        row += 1
    for r in range(k):
        P[row][r + 1] = Fraction(1)
        P[row][k + 2 + r] = -m
        row += 1
    assert row == n
    return P


def build_Q(k: int) -> Matrix:
    """The ``(2k+2) x (2k+4)`` matrix ``Q_k``.

    The first row of ``W_k^+`` gains ``+1`` in the appended column and the
    first row of ``W_k^-`` gains ``-1``; the bottom ``k`` rows vanish.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    Q = _zeros(2 * k + 2, 2 * k + 4)
    row = 0
    for i, vr in enumerate(_v_plus_rows(k)):
        for j, x in enumerate(vr):
            if x:
                Q[row][j] = Fraction(x)
        if i == 0:
            Q[row][k + 1] = Fraction(1)
        row += 1
    for i, vr in enumerate(_v_minus_rows(k)):
        for j, x in enumerate(vr):
            if x:
                Q[row][k + 2 + j] = Fraction(x)
        if i == 0:
            Q[row][2 * k + 3] = Fraction(-1)
        row += 1
    return Q


def build_step(k: int, m) -> Matrix:
    """``P_k(m)^{-1} Q_k`` assembled from its closed-form blocks.

    Rows ``0..k`` are ``[M1 | M2]`` and rows ``k+1..2k+1`` are ``[M3 | M4]``;
    ``M2`` carries ``m/2`` and ``M3`` carries ``1/(2m)``.  Row 0 of each half
    is free of ``m``.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k >= 1 and m == 0:
        raise SingularStep(k)
    w = k + 2
    S = _zeros(2 * k + 2, 2 * w)
    half = Fraction(1, 2)
    S[0][0] += 1
    S[0][k + 1] += 1
    S[k + 1][w] += 1
    S[k + 1][w + k + 1] -= 1
    if k >= 1:
        m_half = m * half
        inv_2m = 1 / (2 * m)
    for i in range(1, k + 1):
        j = k + 1 - i
        top, bot = S[i], S[k + 1 + i]
        top[i] += half
        top[j] += half
        top[w + i] += m_half
        top[w + j] -= m_half
        bot[i] += inv_2m
        bot[j] += inv_2m
        bot[w + i] += half
        bot[w + j] -= half
    return S


def det_P_closed_form(k: int, m):
    """Closed-form determinant of ``P_k(m)`` for ``k >= 1``."""
    if k < 1:
        raise ValueError("closed form is stated for k >= 1")
    j, odd = divmod(k, 2)
    if odd:
        eps = -1 if j % 4 in (0, 1) else 1
        return eps * 2**j * m ** (j + 1)
    eps = 1 if j % 4 in (0, 1) else -1
    return eps * 2**j * m**j


def mat_vec(M: Sequence[Sequence[Any]], v: Sequence[Any]) -> list:
    """Exact matrix-vector product that skips structural zeros."""
    out = []
    for row in M:
        acc = None
        for a, x in zip(row, v):
            if a == 0 or x == 0:
                continue
            term = x if a == 1 else (-x if a == -1 else a * x)
            acc = term if acc is None else acc + term
        out.append(Fraction(0) if acc is None else acc)
    return out


def mat_mul(A: Sequence[Sequence[Any]], B: Sequence[Sequence[Any]]) -> Matrix:
    cols = list(zip(*B))
    return [mat_vec(cols, row) for row in A]


def apply_step(k: int, m, v: Sequence[Any]) -> list:
    """``build_step(k, m) @ v`` without materializing the matrix.

    Writes ``v = (a, b)`` with halves of length ``k+2``; the result halves are
    ``a'_i = (a_i + a_{k+1-i})/2 + m (b_i - b_{k+1-i})/2`` and
    ``b'_i = (a_i + a_{k+1-i})/(2m) + (b_i - b_{k+1-i})/2`` for ``i >= 1``,
    with ``a'_0 = a_0 + a_{k+1}`` and ``b'_0 = b_0 - b_{k+1}``.
    """
    if len(v) != 2 * k + 4:
        raise ValueError(f"expected a vector of length {2 * k + 4}, got {len(v)}")
    if k >= 1 and m == 0:
        raise SingularStep(k)
    a, b = v[: k + 2], v[k + 2 :]
    top = [a[0] + a[k + 1]]
    bot = [b[0] - b[k + 1]]
    if k >= 1:
        inv_2m = 1 / (2 * m)
        half_m = m / 2
    for i in range(1, k + 1):
        j = k + 1 - i
        sa = a[i] + a[j]
        db = b[i] - b[j]
        top.append(sa / 2 + half_m * db if db != 0 else sa / 2)
        bot.append(sa * inv_2m + db / 2 if sa != 0 else db / 2)
    return top + bot
