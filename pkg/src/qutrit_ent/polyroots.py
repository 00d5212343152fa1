"""Characteristic polynomials and closed-form roots up to degree four.

These are cross-check oracles for the Jacobi eigensolver: nothing here calls
into :mod:`qutrit_ent.linalg`.
"""

import cmath

import numpy as np


def charpoly(m):
    """Monic characteristic polynomial coefficients, highest degree first.

    Faddeev-LeVerrier recursion; works for any square matrix.
    """
    m = np.asarray(m, dtype=complex)
    n = m.shape[0]
    coeffs = [1.0 + 0j]
    mk = np.zeros_like(m)
    eye = np.eye(n, dtype=complex)
    for k in range(1, n + 1):
        mk = m @ (mk + coeffs[-1] * eye)
        coeffs.append(-np.trace(mk) / k)
    return np.array(coeffs)


def _cbrt(z):
    if z == 0:
        return 0j
    return cmath.exp(cmath.log(z) / 3)


def _quadratic(a, b, c):
    # stable form, a != 0
    disc = cmath.sqrt(b * b - 4 * a * c)
    if abs(b + disc) >= abs(b - disc):
        q = -(b + disc) / 2
    else:
        q = -(b - disc) / 2
    if q == 0:
        return [0j, 0j]
    return [q / a, c / q]


def _cubic(a, b, c, d):
    """Roots of a z^3 + b z^2 + c z + d by Cardano."""
    b, c, d = b / a, c / a, d / a
    shift = b / 3
    p = c - b * b / 3
    q = 2 * b**3 / 27 - b * c / 3 + d
    disc = cmath.sqrt(q * q / 4 + p**3 / 27)
    u = _cbrt(-q / 2 + disc)
    if abs(u) < 1e-300:
        u = _cbrt(-q / 2 - disc)
    omega = complex(-0.5, 3**0.5 / 2)
    roots = []
    for k in range(3):
        uk = u * omega**k
        vk = -p / (3 * uk) if uk != 0 else 0j
        roots.append(uk + vk - shift)
    return roots


def _polish(coeffs, root, steps=3):
    dcoeffs = np.polyder(coeffs)
    for _ in range(steps):
        f = np.polyval(coeffs, root)
        df = np.polyval(dcoeffs, root)
        if df == 0:
            break
        step = f / df
        root = root - step
        if abs(step) <= 1e-17 * max(1.0, abs(root)):
            break
    return root


def quartic_roots(coeffs):
    """All four complex roots of c0 x^4 + c1 x^3 + c2 x^2 + c3 x + c4.

    Ferrari's method through the resolvent cubic, followed by a few Newton
    steps on the original polynomial.
    """
    c0, c1, c2, c3, c4 = (complex(c) for c in coeffs)
    if c0 == 0:
        raise ValueError("leading coefficient is zero")
    a, b, c, d = c1 / c0, c2 / c0, c3 / c0, c4 / c0
    shift = a / 4
    # depressed quartic y^4 + p y^2 + q y + r, x = y - a/4
    p = b - 3 * a * a / 8
    q = c - a * b / 2 + a**3 / 8
    r = d - a * c / 4 + a * a * b / 16 - 3 * a**4 / 256

    scale = max(abs(p), abs(q) ** (2 / 3), abs(r) ** 0.5, 1e-300)
    if abs(q) <= 1e-14 * scale ** 1.5:
        # biquadratic
        ys = []
        for w in _quadratic(1, p, r):
            s = cmath.sqrt(w)
            ys += [s, -s]
    else:
        zs = _cubic(8, 8 * p, 2 * p * p - 8 * r, -q * q)
        z = max(zs, key=abs)
        s = cmath.sqrt(2 * z)
        ys = _quadratic(1, -s, p / 2 + z + q / (2 * s)) + _quadratic(1, s, p / 2 + z - q / (2 * s))
    poly = np.array([c0, c1, c2, c3, c4])
    return [_polish(poly, y - shift) for y in ys]


def hermitian_roots_oracle(m):
    """Eigenvalues of a Hermitian matrix of dimension <= 4 from its polynomial.

    Returned as real numbers sorted in decreasing order.
    """
    m = np.asarray(m, dtype=complex)
    n = m.shape[0]
    coeffs = charpoly(m)
    if n == 1:
        roots = [-coeffs[1]]
    elif n == 2:
        roots = _quadratic(*coeffs)
    elif n == 3:
        roots = [_polish(coeffs, z) for z in _cubic(*coeffs)]
    elif n == 4:
        roots = quartic_roots(coeffs)
    else:
        raise ValueError(f"closed-form roots only up to degree 4, got {n}")
    return sorted((z.real for z in roots), reverse=True)
