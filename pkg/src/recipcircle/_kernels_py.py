"""Pure-Python implementations of the numeric hot loops.

The compiled module ``_kernels`` exposes the same functions with the same
signatures; :mod:`recipcircle.kernels` picks one at import time.
"""

from __future__ import annotations

import cmath
import math
import sys
from typing import Sequence

_EPS = sys.float_info.epsilon


def gcd_mod_p(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    """Monic gcd over GF(p) of two ascending coefficient lists (``p < 2**31``)."""
    a = [x % p for x in a]
    b = [x % p for x in b]
    while a and a[-1] == 0:
        a.pop()
    while b and b[-1] == 0:
        b.pop()
    while b:
        inv = pow(b[-1], p - 2, p)
        db = len(b) - 1
        while a and len(a) - 1 >= db:
            f = a[-1] * inv % p
            shift = len(a) - 1 - db
            for j in range(db + 1):
                a[shift + j] = (a[shift + j] - f * b[j]) % p
            while a and a[-1] == 0:
                a.pop()
        a, b = b, a
    if not a:
        return a
    inv = pow(a[-1], p - 2, p)
    return [x * inv % p for x in a]


def trig_pair(va: Sequence[float], vb: Sequence[float], kvals: Sequence[float],
              log_q: float, log_a: float, z: complex) -> tuple[complex, complex]:
    """``(sum va_j cos(z th_j), sum vb_j sin(z th_j))`` with ``th_j = k_j log q - log a``."""
    z = complex(z)
    A = 0j
    B = 0j
    for x, y, k in zip(va, vb, kvals):
        w = z * (k * log_q - log_a)
        if x:
            A += x * cmath.cos(w)
        if y:
            B += y * cmath.sin(w)
    return A, B


def rotation_product(thetas: Sequence[float], ms: Sequence[float], z: complex) -> tuple[complex, complex]:
    """``R(th_0, m_0) R(th_1, m_1) ... (1, 0)^T`` with ``R = [[cos, -m sin], [sin/m, cos]](z th)``."""
    z = complex(z)
    x, y = 1 + 0j, 0j
    for th, m in zip(reversed(list(thetas)), reversed(list(ms))):
        c = cmath.cos(z * th)
        s = cmath.sin(z * th)
        x, y = c * x - m * s * y, s / m * x + c * y
    return x, y


def _kernel_integrand(va, vb, kvals, log_q, m, z, w, u):
    Az, Bz = trig_pair(va, vb, kvals, log_q, u, z)
    Aw, Bw = trig_pair(va, vb, kvals, log_q, u, w)
    return Aw.conjugate() * Az / m + Bw.conjugate() * Bz * m


def simpson_kernel(va: Sequence[float], vb: Sequence[float], kvals: Sequence[float],
                   log_q: float, m: float, z: complex, w: complex,
                   u0: float, u1: float, tol: float = 1e-9, max_depth: int = 48) -> complex:
    """Adaptive Simpson integral over ``u = log a`` in ``[u0, u1]`` of
    ``conj(A(w)) A(z) / m + conj(B(w)) B(z) m`` on one Hamiltonian step."""
    if u1 == u0:
        return 0j

    def f(u):
        return _kernel_integrand(va, vb, kvals, log_q, m, z, w, u)

    fa, fb = f(u0), f(u1)
    mid = 0.5 * (u0 + u1)
    fm = f(mid)
    whole = (u1 - u0) / 6.0 * (fa + 4.0 * fm + fb)
    # explicit stack keeps the recursion shape identical to the compiled version
    total = 0j
    stack = [(u0, u1, fa, fm, fb, whole, tol, 0)]
    while stack:
        a, b, fa, fm, fb, whole, eps, depth = stack.pop()
        m_ = 0.5 * (a + b)
        lm, rm = 0.5 * (a + m_), 0.5 * (m_ + b)
        flm, frm = f(lm), f(rm)
        left = (m_ - a) / 6.0 * (fa + 4.0 * flm + fm)
        right = (b - m_) / 6.0 * (fm + 4.0 * frm + fb)
        delta = left + right - whole
        if depth >= max_depth or abs(delta) <= 15.0 * eps:
            total += left + right + delta / 15.0
        else:
            stack.append((m_, b, fm, frm, fb, right, eps / 2.0, depth + 1))
            stack.append((a, m_, fa, flm, fm, left, eps / 2.0, depth + 1))
    return total


def aberth(coeffs: Sequence[complex], init: Sequence[complex], tol: float = 1e-14,
           max_iter: int = 500) -> tuple[list[complex], bool, int]:
    """Aberth-Ehrlich simultaneous iteration for all roots of a polynomial.

    ``coeffs`` are ascending; returns ``(roots, converged, iterations)``.
    """
    n = len(coeffs) - 1
    c = [complex(x) for x in coeffs]
    dc = [i * c[i] for i in range(1, n + 1)]
    roots = [complex(r) for r in init]
    done = [False] * n
    for it in range(1, max_iter + 1):
        all_done = True
        for i in range(n):
            if done[i]:
                continue
            zi = roots[i]
            pv = 0j
            scale = 0.0
            azi = abs(zi)
            for x in reversed(c):
                pv = pv * zi + x
                scale = scale * azi + abs(x)
            dv = 0j
            for x in reversed(dc):
                dv = dv * zi + x
            # stop once |p(z)| is below the rounding error of Horner's rule
            if abs(pv) <= 4 * _EPS * (n + 1) * scale:
                done[i] = True
                continue
            ratio = pv / dv if dv != 0 else complex(1e-3, 1e-3)
            acc = 0j
            for j in range(n):
                if j != i:
                    diff = zi - roots[j]
                    if diff != 0:
                        acc += 1.0 / diff
            denom = 1.0 - ratio * acc
            step = ratio / denom if denom != 0 else ratio
            roots[i] = zi - step
            if abs(step) <= tol * max(1.0, abs(roots[i])):
                done[i] = True
            else:
                all_done = False
        if all_done:
            return roots, True, it
    return roots, all(done), max_iter


def _self_check() -> None:
    # used by the benchmark to make sure the kernels import cleanly
    assert math.isclose(trig_pair([1.0], [0.0], [0.0], 1.0, 0.0, 0.0)[0].real, 1.0)
