"""Test-only oracles: generic exact linear algebra and small utilities."""

from fractions import Fraction

from hypothesis import strategies as st


def det(M):
    """Determinant by fraction Gaussian elimination with row pivoting."""
    A = [[Fraction(x) for x in row] for row in M]
    n = len(A)
    sign = 1
    out = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if A[r][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            A[c], A[piv] = A[piv], A[c]
            sign = -sign
        out *= A[c][c]
        for r in range(c + 1, n):
            f = A[r][c] / A[c][c]
            if f:
                A[r] = [a - f * b for a, b in zip(A[r], A[c])]
    return sign * out


def matmul(A, B):
    return [[sum((a * b for a, b in zip(row, col)), Fraction(0)) for col in zip(*B)] for row in A]


def rationals(bound=20, max_den=12, nonzero=False):
    s = st.fractions(min_value=-bound, max_value=bound, max_denominator=max_den)
    return s.filter(lambda x: x != 0) if nonzero else s


def coeff_lists(min_g=1, max_g=3, bound=20):
    return st.integers(min_g, max_g).flatmap(
        lambda g: st.tuples(rationals(bound, nonzero=True),
                            st.lists(rationals(bound), min_size=g, max_size=g))
        .map(lambda t: (t[0], *t[1]))
    )


def refined_roots(coeffs, init, dps=100, max_iter=80):
    """Aberth iteration in multiprecision, started from ``init``.

    A k-fold root computed at ``dps`` digits splits by about ``10**(-dps/k)``,
    so at 100 digits clusters of multiple roots shrink far below 1e-6 while
    simple roots stay at their true separation.
    """
    import mpmath

    with mpmath.workdps(dps):
        c = [mpmath.mpf(v.numerator) / v.denominator for v in map(Fraction, coeffs)]
        n = len(c) - 1
        z = [mpmath.mpc(r.real, r.imag) for r in init]
        tiny = mpmath.mpf(10) ** (-dps // 4)
        for _ in range(max_iter):
            step = 0
            for i in range(n):
                pv = dv = mpmath.mpc(0)
                for x in reversed(c):
                    dv = dv * z[i] + pv
                    pv = pv * z[i] + x
                if pv == 0:
                    continue
                r = pv / dv
                s = sum(1 / (z[i] - z[j]) for j in range(n) if j != i)
                w = r / (1 - r * s)
                z[i] -= w
                step = max(step, abs(w))
            if step < tiny:
                break
        return [complex(v) for v in z]
