# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the numeric hot loops in ``_kernels_py``."""

from libc.stdlib cimport malloc, free
from libc.stdint cimport int64_t
from libc.float cimport DBL_EPSILON
from array import array

cdef extern from "complex.h" nogil:
    double complex ccos(double complex)
    double complex csin(double complex)
    double cabs(double complex)
    double complex conj(double complex)


cdef int64_t _powmod(int64_t b, int64_t e, int64_t p) nogil:
    cdef int64_t r = 1
    b %= p
    while e > 0:
        if e & 1:
            r = r * b % p
        b = b * b % p
        e >>= 1
    return r


def gcd_mod_p(a, b, long long p):
    """Monic gcd over GF(p) of two ascending coefficient lists (``p < 2**31``)."""
    cdef Py_ssize_t na = len(a), nb = len(b), i, j, shift, db
    cdef int64_t *A = <int64_t *> malloc((na + 1) * sizeof(int64_t))
    cdef int64_t *B = <int64_t *> malloc((nb + 1) * sizeof(int64_t))
    cdef int64_t *T
    cdef int64_t inv, f, P = p
    cdef Py_ssize_t ta
    if A == NULL or B == NULL:
        free(A)
        free(B)
        raise MemoryError()
    try:
        for i in range(na):
            A[i] = a[i] % p
        for i in range(nb):
            B[i] = b[i] % p
        with nogil:
            while na > 0 and A[na - 1] == 0:
                na -= 1
            while nb > 0 and B[nb - 1] == 0:
                nb -= 1
            while nb > 0:
                inv = _powmod(B[nb - 1], P - 2, P)
                db = nb - 1
                while na > 0 and na - 1 >= db:
                    f = A[na - 1] * inv % P
                    shift = na - 1 - db
                    for j in range(db + 1):
                        A[shift + j] = (A[shift + j] - f * B[j]) % P
                        if A[shift + j] < 0:
                            A[shift + j] += P
                    while na > 0 and A[na - 1] == 0:
                        na -= 1
                T = A
                A = B
                B = T
                ta = na
                na = nb
                nb = ta
        if na == 0:
            return []
        inv = _powmod(A[na - 1], P - 2, P)
        return [A[i] * inv % P for i in range(na)]
    finally:
        free(A)
        free(B)


cdef inline void _trig(double[::1] va, double[::1] vb, double[::1] kv, double log_q,
                       double log_a, double complex z, double complex *A,
                       double complex *B) nogil:
    cdef Py_ssize_t j, n = va.shape[0]
    cdef double complex w
    A[0] = 0
    B[0] = 0
    for j in range(n):
        w = z * (kv[j] * log_q - log_a)
        if va[j] != 0:
            A[0] += va[j] * ccos(w)
        if vb[j] != 0:
            B[0] += vb[j] * csin(w)


def _as_array(x):
    return array("d", x)


def trig_pair(va, vb, kvals, double log_q, double log_a, double complex z):
    """``(sum va_j cos(z th_j), sum vb_j sin(z th_j))`` with ``th_j = k_j log q - log a``."""
    cdef double[::1] a = _as_array(va), b = _as_array(vb), k = _as_array(kvals)
    cdef double complex A, B
    _trig(a, b, k, log_q, log_a, z, &A, &B)
    return complex(A), complex(B)


def rotation_product(thetas, ms, double complex z):
    """``R(th_0, m_0) R(th_1, m_1) ... (1, 0)^T`` with ``R = [[cos, -m sin], [sin/m, cos]](z th)``."""
    cdef double[::1] th = _as_array(thetas), m = _as_array(ms)
    cdef Py_ssize_t i
    cdef double complex x = 1, y = 0, c, s, nx
    for i in range(th.shape[0] - 1, -1, -1):
        c = ccos(z * th[i])
        s = csin(z * th[i])
        nx = c * x - m[i] * s * y
        y = s / m[i] * x + c * y
        x = nx
    return complex(x), complex(y)


cdef inline double complex _integrand(double[::1] va, double[::1] vb, double[::1] kv,
                                      double log_q, double m, double complex z,
                                      double complex w, double u) nogil:
    cdef double complex Az, Bz, Aw, Bw
    _trig(va, vb, kv, log_q, u, z, &Az, &Bz)
    _trig(va, vb, kv, log_q, u, w, &Aw, &Bw)
    return conj(Aw) * Az / m + conj(Bw) * Bz * m


cdef struct _Seg:
    double a, b, eps
    double complex fa, fm, fb, whole
    int depth


def simpson_kernel(va, vb, kvals, double log_q, double m, double complex z,
                   double complex w, double u0, double u1, double tol=1e-9,
                   int max_depth=48):
    """Adaptive Simpson integral over ``u = log a`` in ``[u0, u1]`` of
    ``conj(A(w)) A(z) / m + conj(B(w)) B(z) m`` on one Hamiltonian step."""
    cdef double[::1] A = _as_array(va), B = _as_array(vb), K = _as_array(kvals)
    if u1 == u0:
        return 0j
    cdef Py_ssize_t cap = 4 * (max_depth + 2), top = 0
    cdef _Seg *stack = <_Seg *> malloc(cap * sizeof(_Seg))
    cdef _Seg s
    cdef double mid, lm, rm
    cdef double complex flm, frm, left, right, delta, total = 0
    if stack == NULL:
        raise MemoryError()
    try:
        with nogil:
            s.a = u0
            s.b = u1
            s.eps = tol
            s.depth = 0
            s.fa = _integrand(A, B, K, log_q, m, z, w, u0)
            s.fb = _integrand(A, B, K, log_q, m, z, w, u1)
            s.fm = _integrand(A, B, K, log_q, m, z, w, 0.5 * (u0 + u1))
            s.whole = (u1 - u0) / 6.0 * (s.fa + 4.0 * s.fm + s.fb)
            stack[0] = s
            top = 1
            while top > 0:
                top -= 1
                s = stack[top]
                mid = 0.5 * (s.a + s.b)
                lm = 0.5 * (s.a + mid)
                rm = 0.5 * (mid + s.b)
                flm = _integrand(A, B, K, log_q, m, z, w, lm)
                frm = _integrand(A, B, K, log_q, m, z, w, rm)
                left = (mid - s.a) / 6.0 * (s.fa + 4.0 * flm + s.fm)
                right = (s.b - mid) / 6.0 * (s.fm + 4.0 * frm + s.fb)
                delta = left + right - s.whole
                if s.depth >= max_depth or cabs(delta) <= 15.0 * s.eps:
                    total += left + right + delta / 15.0
                else:
                    stack[top].a = mid
                    stack[top].b = s.b
                    stack[top].fa = s.fm
                    stack[top].fm = frm
                    stack[top].fb = s.fb
                    stack[top].whole = right
                    stack[top].eps = s.eps / 2.0
                    stack[top].depth = s.depth + 1
                    top += 1
                    stack[top].a = s.a
                    stack[top].b = mid
                    stack[top].fa = s.fa
                    stack[top].fm = flm
                    stack[top].fb = s.fm
                    stack[top].whole = left
                    stack[top].eps = s.eps / 2.0
                    stack[top].depth = s.depth + 1
                    top += 1
        return complex(total)
    finally:
        free(stack)


def aberth(coeffs, init, double tol=1e-14, int max_iter=500):
    """Aberth-Ehrlich simultaneous iteration for all roots of a polynomial.

    ``coeffs`` are ascending; returns ``(roots, converged, iterations)``.
    """
    cdef Py_ssize_t n = len(coeffs) - 1, i, j
    cdef double complex *c = <double complex *> malloc((n + 1) * sizeof(double complex))
    cdef double complex *r = <double complex *> malloc((n + 1) * sizeof(double complex))
    cdef char *done = <char *> malloc(n + 1)
    cdef double complex zi, pv, dv, ratio, acc, diff, denom, step
    cdef double scale, azi
    cdef int it, all_done, result_it = max_iter, ok = 0
    if c == NULL or r == NULL or done == NULL:
        free(c)
        free(r)
        free(done)
        raise MemoryError()
    try:
        for i in range(n + 1):
            c[i] = complex(coeffs[i])
        for i in range(n):
            r[i] = complex(init[i])
            done[i] = 0
        with nogil:
            for it in range(1, max_iter + 1):
                all_done = 1
                for i in range(n):
                    if done[i]:
                        continue
                    zi = r[i]
                    pv = 0
                    scale = 0
                    azi = cabs(zi)
                    for j in range(n, -1, -1):
                        pv = pv * zi + c[j]
                        scale = scale * azi + cabs(c[j])
                    dv = 0
                    for j in range(n, 0, -1):
                        dv = dv * zi + j * c[j]
                    if cabs(pv) <= 4 * DBL_EPSILON * (n + 1) * scale:
                        done[i] = 1
                        continue
                    if dv != 0:
                        ratio = pv / dv
                    else:
                        ratio = 1e-3 + 1e-3j
                    acc = 0
                    for j in range(n):
                        if j != i:
                            diff = zi - r[j]
                            if diff != 0:
                                acc += 1.0 / diff
                    denom = 1.0 - ratio * acc
                    if denom != 0:
                        step = ratio / denom
                    else:
                        step = ratio
                    r[i] = zi - step
                    if cabs(step) <= tol * (cabs(r[i]) if cabs(r[i]) > 1.0 else 1.0):
                        done[i] = 1
                    else:
                        all_done = 0
                if all_done:
                    ok = 1
                    result_it = it
                    break
        if not ok:
            ok = 1
            for i in range(n):
                if not done[i]:
                    ok = 0
        return [complex(r[i]) for i in range(n)], bool(ok), result_it
    finally:
        free(c)
        free(r)
        free(done)
