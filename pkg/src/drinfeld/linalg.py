"""Field-agnostic linear algebra over GF(q) used by the solvers.

Matrices are lists of rows (lists of ints reduced mod ``q``).
"""

from __future__ import annotations

from . import polynomials as P


class SingularMatrix(ArithmeticError):
    """Raised when a linear system has no unique solution."""


def identity(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def mat_mul(a, b, q):
    cols = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) % q for col in cols] for row in a]


def mat_vec(a, v, q):
    return [sum(x * y for x, y in zip(row, v)) % q for row in a]


def companion(p, q):
    """Companion matrix of the monic polynomial ``p`` (last column holds ``-p_i``)."""
    n = len(p) - 1
    m = [[0] * n for _ in range(n)]
    for i in range(1, n):
        m[i][i - 1] = 1
    for i in range(n):
        m[i][n - 1] = -p[i] % q
    return m


def solve(a, b, q):
    """Solve the square system ``a x = b`` by Gaussian elimination."""
    n = len(a)
    rows = [list(r) + [v] for r, v in zip(a, b)]
    for col in range(n):
        piv = next((r for r in range(col, n) if rows[r][col]), None)
        if piv is None:
            raise SingularMatrix(f"no pivot in column {col}")
        rows[col], rows[piv] = rows[piv], rows[col]
        prow = rows[col]
        inv = pow(prow[col], -1, q)
        for j in range(col, n + 1):
            prow[j] = prow[j] * inv % q
        for r in range(n):
            if r != col and rows[r][col]:
                f = rows[r][col]
                row = rows[r]
                for j in range(col, n + 1):
                    row[j] = (row[j] - f * prow[j]) % q
    return [r[n] for r in rows]


def hankel_solve(seq, rhs, q):
    """Solve ``H a = rhs`` where ``H[i][j] = seq[i + j]`` is a square Hankel matrix.

    ``seq`` has ``2*len(rhs) - 1`` entries.  Raises :class:`SingularMatrix`
    when ``H`` is singular.
    """
    nu = len(rhs)
    if len(seq) < 2 * nu - 1:
        raise ValueError("Hankel sequence too short")
    h = [[seq[i + j] % q for j in range(nu)] for i in range(nu)]
    return solve(h, rhs, q)


def berlekamp_massey(seq, q):
    """Minimal generating polynomial of ``seq`` (monic, recurrence-annihilating form).

    Returns ``G = x**L - c_{L-1} x**(L-1) - ... - c_0`` such that
    ``seq[k + L] == sum(c_i * seq[k + i])`` for every valid ``k``.
    """
    conn = [1]  # connection polynomial C(x) = 1 + c_1 x + ...
    prev = [1]
    length = 0
    gap = 1
    last = 1
    for k, s in enumerate(seq):
        disc = s % q
        for i in range(1, min(len(conn), length + 1)):
            disc = (disc + conn[i] * seq[k - i]) % q
        if not disc:
            gap += 1
            continue
        coef = disc * pow(last, -1, q) % q
        new = conn + [0] * max(0, len(prev) + gap - len(conn))
        for i, c in enumerate(prev):
            new[i + gap] = (new[i + gap] - coef * c) % q
        if 2 * length <= k:
            prev, length, last, gap = conn, k + 1 - length, disc, 1
        else:
            gap += 1
        conn = new
    conn = conn + [0] * (length + 1 - len(conn))
    return P.trim(list(reversed(conn[:length + 1])))


def hessenberg(m, q):
    """Upper Hessenberg form similar to ``m`` (returns a new matrix)."""
    n = len(m)
    h = [list(r) for r in m]
    for k in range(1, n - 1):
        piv = next((i for i in range(k, n) if h[i][k - 1]), None)
        if piv is None:
            continue
        if piv != k:
            h[k], h[piv] = h[piv], h[k]
            for row in h:
                row[k], row[piv] = row[piv], row[k]
        inv = pow(h[k][k - 1], -1, q)
        for i in range(k + 1, n):
            u = h[i][k - 1] * inv % q
            if not u:
                continue
            hi, hk = h[i], h[k]
            for j in range(n):
                hi[j] = (hi[j] - u * hk[j]) % q
            for row in h:
                row[k] = (row[k] + u * row[i]) % q
    return h


def matrix_charpoly(m, q):
    """``det(x I - m)`` via Hessenberg reduction."""
    n = len(m)
    h = hessenberg(m, q)
    polys = [[1]]
    for k in range(1, n + 1):
        # charpoly of the leading k x k block
        cur = P.mul([-h[k - 1][k - 1] % q, 1], polys[k - 1], q)
        t = 1
        for i in range(1, k):
            t = t * h[k - i][k - i - 1] % q
            if not t:
                break
            c = h[k - i - 1][k - 1] * t % q
            if c:
                cur = P.sub(cur, P.scale(polys[k - i - 1], c, q), q)
        polys.append(cur)
    return polys[n]


def _krylov_minpoly(m, v, q):
    """Minimal polynomial of the sequence ``v, m v, m^2 v, ...``."""
    n = len(m)
    basis = []  # reduced rows: (pivot, vector, combination)
    vec = list(v)
    k = 0
    while True:
        combo = [0] * (k + 1)
        combo[k] = 1
        vec_r = list(vec)
        for piv, bvec, bcomb in basis:
            c = vec_r[piv]
            if c:
                vec_r = [(x - c * y) % q for x, y in zip(vec_r, bvec)]
                combo = [(x - c * y) % q for x, y in zip(combo, bcomb + [0] * (len(combo) - len(bcomb)))]
        piv = next((i for i in range(n) if vec_r[i]), None)
        if piv is None:
            return P.trim(combo)
        inv = pow(vec_r[piv], -1, q)
        basis.append((piv, [x * inv % q for x in vec_r], [x * inv % q for x in combo]))
        vec = mat_vec(m, vec, q)
        k += 1


def matrix_minpoly(m, q):
    """Minimal polynomial of ``m`` as the lcm of the Krylov minimal polynomials of the unit vectors."""
    n = len(m)
    result = [1]
    for i in range(n):
        e = [0] * n
        e[i] = 1
        result = P.lcm(result, _krylov_minpoly(m, e, q), q)
    return result
