"""Skew polynomials L<tau> with ``tau * u = u^q * tau``.

A skew polynomial is a list of field elements, little-endian in ``tau`` and
with no trailing zero coefficients (``[]`` is zero).  Functions that need
the Drinfeld structure take a module object exposing ``field``,
``gamma_x``, ``g`` and ``delta``.
"""

from __future__ import annotations

from math import isqrt

from . import polynomials as P


class PhiInversionError(ArithmeticError):
    """The given skew polynomial is not the image of a polynomial of the expected degree."""


def strip(u, L):
    u = list(u)
    while u and L.is_zero(u[-1]):
        u.pop()
    return u


def skew_add(u, v, L):
    if len(u) < len(v):
        u, v = v, u
    out = list(u)
    for i, c in enumerate(v):
        out[i] = L.add(out[i], c)
    return strip(out, L)


def skew_sub(u, v, L):
    zero = L.zero()
    out = list(u) + [zero] * (len(v) - len(u))
    for i, c in enumerate(v):
        out[i] = L.sub(out[i], c)
    return strip(out, L)


def skew_scale(u, c, L):
    """Left multiplication by the field element ``c``."""
    return strip([L.mul(c, x) for x in u], L)


def frobenius_all(u, L, i=1):
    return [L.frobenius(x, i) for x in u]


def skew_mul(u, v, L):
    """Twisted product: ``(a tau^i)(b tau^j) = a pi^i(b) tau^(i+j)``."""
    if not u or not v:
        return []
    zero = L.zero()
    out = [zero] * (len(u) + len(v) - 1)
    twisted = list(v)  # pi^i applied to every coefficient of v
    for i, a in enumerate(u):
        if i:
            twisted = frobenius_all(twisted, L)
        if L.is_zero(a):
            continue
        for j, b in enumerate(twisted):
            out[i + j] = L.add(out[i + j], L.mul(a, b))
    return strip(out, L)


def skew_divmod_right(u, v, L):
    """Right Euclidean division: ``u == Q*v + R`` with ``deg R < deg v``."""
    v = strip(v, L)
    if not v:
        raise ZeroDivisionError("skew division by zero")
    rem = strip(u, L)
    dv = len(v) - 1
    if len(rem) <= dv:
        return [], rem
    quo = [L.zero()] * (len(rem) - dv)
    while len(rem) > dv:
        shift = len(rem) - 1 - dv
        # c tau^shift v has leading coefficient c * pi^shift(lc v)
        c = L.div(rem[-1], L.frobenius(v[-1], shift))
        quo[shift] = c
        for j, b in enumerate(v):
            rem[shift + j] = L.sub(rem[shift + j], L.mul(c, L.frobenius(b, shift)))
        rem = strip(rem, L)
    return strip(quo, L), rem


def skew_apply(u, a, L):
    """Evaluate the operator ``sum u_j pi^j`` at ``a``."""
    acc = L.zero()
    cur = a
    for j, c in enumerate(u):
        if j:
            cur = L.frobenius(cur, 1)
        acc = L.add(acc, L.mul(c, cur))
    return acc


def phi_x(dm):
    return strip([dm.gamma_x, dm.g, dm.delta], dm.field)


def phi_x_power(k, dm):
    """``phi_{x^k}`` by binary powering."""
    L = dm.field
    base = phi_x(dm)
    result = [L.one()]
    for bit in bin(k)[2:] if k else "":
        result = skew_mul(result, result, L)
        if bit == "1":
            result = skew_mul(base, result, L)
    return result


def phi_of_poly(c, dm, _cache=None):
    """``phi_C = C(phi_x)`` by splitting ``C = C0 + x^(k/2) C1`` recursively."""
    L = dm.field
    c = P.trim(list(c))
    if not c:
        return []
    if len(c) == 1:
        return strip([L.const(c[0])], L)
    if _cache is None:
        _cache = {1: phi_x(dm)}
    half = 1
    while 2 * half <= len(c) - 1:
        half *= 2
    # now half <= deg C < 2*half
    if half not in _cache:
        _cache[half] = _phi_x_pow2(half, dm, _cache)
    low = phi_of_poly(c[:half], dm, _cache)
    high = phi_of_poly(c[half:], dm, _cache)
    return skew_add(low, skew_mul(_cache[half], high, L), L)


def _phi_x_pow2(k, dm, cache):
    if k in cache:
        return cache[k]
    half = _phi_x_pow2(k // 2, dm, cache)
    cache[k] = skew_mul(half, half, dm.field)
    return cache[k]


def build_phi_table(k, dm):
    """Rows ``f[i] = (f_{i,0}, ..., f_{i,2i})``: the coefficients of ``phi_{x^i}`` for ``i <= k``.

    Built with ``f_{i+1,j} = gamma f_{i,j} + g f_{i,j-1}^q + Delta f_{i,j-2}^(q^2)``.
    """
    L = dm.field
    gamma, g, delta = dm.gamma_x, dm.g, dm.delta
    rows = [[L.one()]]
    for _ in range(k):
        row = rows[-1]
        pi1 = [L.frobenius(x, 1) for x in row]
        pi2 = [L.frobenius(x, 1) for x in pi1]
        new = []
        for j in range(len(row) + 2):
            acc = L.mul(gamma, row[j]) if j < len(row) else L.zero()
            if 1 <= j <= len(row):
                acc = L.add(acc, L.mul(g, pi1[j - 1]))
            if j >= 2:
                acc = L.add(acc, L.mul(delta, pi2[j - 2]))
            new.append(acc)
        rows.append(new)
    return rows


def table_combination(c, table, L):
    """``sum c_i * table[i]`` as a skew polynomial (``phi_C`` from the table rows)."""
    if not c:
        return []
    out = []
    for j in range(2 * len(c) - 1):
        # row i reaches tau^j only when 2i >= j
        idx = [i for i in range((j + 1) // 2, len(c)) if c[i]]
        out.append(L.lincomb([c[i] for i in idx], [table[i][j] for i in idx]))
    return strip(out, L)


def invert_phi(image, table, k, L):
    """Recover ``C`` (``deg C <= k``) from ``phi_C`` by back-substitution on the even rows."""
    q = L.q
    image = strip(image, L)
    if len(image) > 2 * k + 1:
        raise PhiInversionError(f"image of degree {len(image) - 1} exceeds 2*{k}")
    alpha = image + [L.zero()] * (2 * k + 1 - len(image))
    coeffs = [0] * (k + 1)
    for t in range(k, -1, -1):
        acc = alpha[2 * t]
        for i in range(t + 1, k + 1):
            if coeffs[i]:
                acc = L.sub(acc, L.scale(table[i][2 * t], coeffs[i]))
        c = L.div(acc, table[t][2 * t])
        if not L.is_base(c):
            raise PhiInversionError(f"coefficient {t} is not in GF(q)")
        coeffs[t] = c[0] % q
    coeffs = P.trim(coeffs)
    if table_combination(coeffs, table, L) != image:
        raise PhiInversionError("odd-index coefficients are inconsistent")
    return coeffs


def skew_multipoint_eval(u, points, L):
    """Evaluate ``u`` at every point with a baby-step / giant-step scheme."""
    u = strip(u, L)
    points = list(points)
    if not points:
        return []
    s = max(1, isqrt(max(len(u), 1) - 1) + 1)
    zero = L.zero()
    coeffs = u + [zero] * (s * s - len(u))
    # u = sum_i tau^(s i) U*_i with U*_{i,l} = pi^(-s i)(u_{s i + l})
    ustar = [[L.frobenius(coeffs[s * i + l], -s * i) for l in range(s)] for i in range(s)]
    # grid[l][j] = pi^l(alpha_j)
    grid = [points]
    for _ in range(1, s):
        grid.append([L.frobenius(a, 1) for a in grid[-1]])
    beta = [[_dot(ustar[i], [grid[l][j] for l in range(s)], L) for j in range(len(points))]
            for i in range(s)]
    out = []
    for j in range(len(points)):
        acc = beta[s - 1][j]
        for i in range(s - 2, -1, -1):
            acc = L.add(beta[i][j], L.frobenius(acc, s))
        out.append(acc)
    return out


def _dot(row, col, L):
    acc = L.zero()
    for a, b in zip(row, col):
        if not L.is_zero(a):
            acc = L.add(acc, L.mul(a, b))
    return acc
