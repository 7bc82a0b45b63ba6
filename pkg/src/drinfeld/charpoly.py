"""Solvers for the Frobenius trace ``A`` and norm ``B`` of a rank-two Drinfeld module.

Every solver returns a :class:`CharPolyResult`; the pair satisfies
``tau^(2n) - phi_A tau^n + phi_B = 0`` with ``deg A <= n/2`` and ``deg B = n``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from . import linalg
from . import polynomials as P
from . import skew as S
from .module import DrinfeldModule

ALGORITHMS = ("gekeler", "deterministic", "monte_carlo", "oracle")


class RetriesExhausted(RuntimeError):
    """The Monte Carlo solver failed on every attempt."""


@dataclass
class CharPolyResult:
    A: list
    B: list
    algorithm: str
    retries: int = 0
    nu: int | None = None
    nu_history: list = field(default_factory=list)

    def check_degrees(self, n):
        return len(self.A) - 1 <= n // 2 and len(self.B) - 1 == n


def rng_stream(seed, label):
    """Independent, reproducible stream derived from one integer seed."""
    return random.Random(f"{seed}/{label}")


# -- Gekeler ----------------------------------------------------------------

def solve_gekeler(dm: DrinfeldModule) -> CharPolyResult:
    """Build every ``phi_{x^i}`` for ``i <= n``, read off ``phi_A`` from ``tau^(2n) + phi_B``, invert."""
    L, n = dm.field, dm.n
    table = S.build_phi_table(n, dm)
    B = dm.frobenius_norm()
    w = S.table_combination(B, table, L)
    w = w + [L.zero()] * (2 * n + 1 - len(w))
    w[2 * n] = L.add(w[2 * n], L.one())
    # tau^n phi_A = tau^(2n) + phi_B and pi^n is the identity
    if any(not L.is_zero(c) for c in w[:n]):
        raise ArithmeticError("tau^(2n) + phi_B has non-zero coefficients below tau^n")
    A = S.invert_phi(w[n:], table, n // 2, L)
    return CharPolyResult(A, B, "gekeler")


# -- deterministic (CRT over small moduli) ----------------------------------

class TOperator:
    """The map ``U -> tau U mod F`` on skew polynomials of degree ``< delta``, with ``F = phi_E``.

    Coefficient vectors transform as ``v -> M pi(v)`` where ``M`` is the
    companion matrix of ``F``; the inverse is ``v -> N pi^-1(v)`` with
    ``N = pi^-1(M^-1)``.
    """

    def __init__(self, dm, E):
        L = dm.field
        self.field = L
        self.E = P.trim(list(E))
        F = S.phi_of_poly(self.E, dm)
        if L.is_zero(F[0]) if F else True:
            raise ValueError("E(gamma(x)) = 0: phi_E has zero constant coefficient")
        F = S.skew_scale(F, L.inv(F[-1]), L)
        self.F = F
        self.delta = delta = len(F) - 1
        M = [[L.zero() for _ in range(delta)] for _ in range(delta)]
        for k in range(delta):
            if k:
                M[k][k - 1] = L.one()
            M[k][delta - 1] = L.neg(F[k])
        self.M = M
        self.N = mat_frobenius(mat_inv(M, L), -1, L)

    def apply(self, v, r=1, direction="forward"):
        """Coefficient vector of ``T^r(v)`` (or ``T^-r(v)`` for ``direction="inverse"``)."""
        L = self.field
        if r == 0:
            return list(v)
        sign = 1 if direction == "forward" else -1
        mat = self.M if sign > 0 else self.N
        chain = _twisted_power(mat, r, sign, L)
        return mat_vec(chain, [L.frobenius(x, sign * r) for x in v], L)


def _twisted_power(mat, r, sign, L):
    """``mat pi^s(mat) ... pi^(s(r-1))(mat)`` with ``s = sign``, by square-and-multiply."""
    result = mat
    done = 1
    for bit in bin(r)[3:]:
        # P_{2k} = P_k pi^(s k)(P_k)
        result = mat_mul(result, mat_frobenius(result, sign * done, L), L)
        done *= 2
        if bit == "1":
            # P_{k+1} = P_k pi^(s k)(mat)
            result = mat_mul(result, mat_frobenius(mat, sign * done, L), L)
            done += 1
    return result


def mat_mul(a, b, L):
    cols = list(zip(*b))
    return [[L.dot(row, col) for col in cols] for row in a]


def mat_vec(a, v, L):
    return [L.dot(row, v) for row in a]


def mat_frobenius(a, i, L):
    return [[L.frobenius(x, i) for x in row] for row in a]


def mat_inv(a, L):
    """Inverse of a square matrix over L by Gauss-Jordan elimination."""
    size = len(a)
    rows = [list(r) + [L.one() if i == j else L.zero() for j in range(size)]
            for i, r in enumerate(a)]
    for col in range(size):
        piv = next((r for r in range(col, size) if not L.is_zero(rows[r][col])), None)
        if piv is None:
            raise linalg.SingularMatrix("matrix over L is singular")
        rows[col], rows[piv] = rows[piv], rows[col]
        inv = L.inv(rows[col][col])
        rows[col] = [L.mul(inv, x) for x in rows[col]]
        for r in range(size):
            if r != col and not L.is_zero(rows[r][col]):
                f = rows[r][col]
                rows[r] = [L.sub(x, L.mul(f, y)) for x, y in zip(rows[r], rows[col])]
    return [r[size:] for r in rows]


def trace_mod(dm: DrinfeldModule, E, B, table=None):
    """``A mod E`` from ``phi_{A mod E} = T^-n(phi_{B mod E} + T^(2n)(1))``."""
    L, n, q = dm.field, dm.n, dm.q
    op = TOperator(dm, E)
    k = len(op.E) - 2  # deg E - 1
    if table is None or len(table) <= k:
        table = S.build_phi_table(k, dm)
    v0 = S.phi_of_poly(P.rem(B, op.E, q), dm)
    v0 = S.skew_divmod_right(v0, op.F, L)[1]
    v0 = v0 + [L.zero()] * (op.delta - len(v0))
    one = [L.one()] + [L.zero()] * (op.delta - 1)
    v1 = op.apply(one, 2 * n)
    image = op.apply([L.add(a, b) for a, b in zip(v0, v1)], n, "inverse")
    return S.invert_phi(image, table, k, L)


def solve_deterministic(dm: DrinfeldModule) -> CharPolyResult:
    """``A`` by Chinese remaindering of ``A mod E_i`` over small irreducible moduli."""
    n, q = dm.n, dm.q
    B = dm.frobenius_norm()
    need = n // 2 + 1
    moduli, total = [], 0
    for E in P.enumerate_moduli(q, n):
        if total >= need:
            break
        if E == dm.p:  # the one modulus with E(gamma(x)) = 0
            continue
        moduli.append(E)
        total += len(E) - 1
    if total < need:
        raise ArithmeticError("not enough CRT moduli")
    table = S.build_phi_table(max(len(E) for E in moduli) - 2, dm)
    residues = [(trace_mod(dm, E, B, table), E) for E in moduli]
    A = P.crt_combine(residues, q)
    if len(A) - 1 > n // 2:
        raise ArithmeticError(f"CRT result has degree {len(A) - 1} > n/2")
    return CharPolyResult(A, B, "deterministic")


# -- Monte Carlo (Wiedemann + Hankel) ---------------------------------------

def _project(ell, a, q):
    return sum(x * y for x, y in zip(ell, a)) % q


def solve_monte_carlo(dm: DrinfeldModule, seed=0, max_retries=20, verify_trials=2) -> CharPolyResult:
    """``A`` from the minimal polynomial of a projected ``Phi_x``-orbit and a Hankel system."""
    L, n, q = dm.field, dm.n, dm.q
    B = dm.frobenius_norm()
    half = n // 2
    history = []
    leading = dm.leading_trace_coefficient() if n % 2 == 0 else None
    for attempt in range(max_retries + 1):
        rng = rng_stream(seed, f"mc/{attempt}")
        alpha = L.random(rng)
        ell = [rng.randrange(q) for _ in range(n)]
        orbit = dm.orbit(alpha, 2 * n)
        seq = [_project(ell, a, q) for a in orbit]
        gamma = linalg.berlekamp_massey(seq, q)
        nu = len(gamma) - 1
        history.append(nu)
        if 2 * nu < n:
            continue
        if n % 2 == 0 and nu == half:
            candidates = leading.candidates
        else:
            candidates = (0,)
        # r0 = alpha + Phi_B(alpha); the sequence for r~ = r0 - a_nu Phi^nu(alpha)
        # is l(Phi^j r0) - a_nu * seq[j + nu] by linearity
        r0 = L.add(alpha, L.lincomb(B, orbit))
        base = [_project(ell, a, q) for a in dm.orbit(r0, nu)] if nu else []
        for a_nu in candidates:
            rhs = [(b - a_nu * seq[j + nu]) % q for j, b in enumerate(base)]
            try:
                low = linalg.hankel_solve(seq[:2 * nu - 1], rhs, q) if nu else []
            except linalg.SingularMatrix:
                break
            A = P.trim(low + [a_nu])
            if len(A) - 1 > half:
                continue
            # the identity at alpha itself costs nothing extra
            check = L.sub(L.add(alpha, L.lincomb(B, orbit)), L.lincomb(A, orbit))
            if not L.is_zero(check):
                continue
            if not verify_charpoly(dm, A, B, verify_trials, rng):
                continue
            return CharPolyResult(A, B, "monte_carlo", retries=attempt, nu=nu, nu_history=history)
    raise RetriesExhausted(f"Monte Carlo solver failed after {max_retries + 1} attempts")


# -- brute-force oracle -----------------------------------------------------

def phi_x_matrix(dm: DrinfeldModule):
    """Matrix of ``Phi_x`` on the power basis (column ``j`` is ``Phi_x(zeta^j)``)."""
    L = dm.field
    cols = []
    basis = L.one()
    zeta = L.zeta()
    for j in range(dm.n):
        if j:
            basis = L.mul(basis, zeta)
        cols.append(dm.apply_phi_x(basis))
    return [list(r) for r in zip(*cols)]


def solve_oracle(dm: DrinfeldModule) -> CharPolyResult:
    """``1 - A + B = lc(B) * charpoly(Phi_x)``, with the characteristic polynomial from Hessenberg form."""
    n, q = dm.n, dm.q
    chi = linalg.matrix_charpoly(phi_x_matrix(dm), q)
    if len(chi) != n + 1 or chi[-1] != 1:
        raise ArithmeticError("characteristic polynomial is not monic of degree n")
    B = dm.frobenius_norm()
    A = P.sub(P.add([1], B, q), P.scale(chi, B[-1], q), q)
    if len(A) - 1 > n // 2:
        raise ArithmeticError(f"oracle trace has degree {len(A) - 1} > n/2")
    return CharPolyResult(A, B, "oracle")


# -- verification -----------------------------------------------------------

def verify_charpoly(dm: DrinfeldModule, A, B, trials=10, rng=None) -> bool:
    """Check degrees and that ``Id - Phi_A + Phi_B`` vanishes at ``trials`` random points."""
    L, n, q = dm.field, dm.n, dm.q
    A, B = P.from_coeffs(A, q), P.from_coeffs(B, q)
    if len(A) - 1 > n // 2 or len(B) - 1 != n:
        return False
    rng = rng or random.Random()
    diff = P.sub(B, A, q)
    for _ in range(trials):
        beta = L.random(rng)
        orbit = dm.orbit(beta, max(len(diff), 1))
        if not L.is_zero(L.add(beta, L.lincomb(diff, orbit))):
            return False
    return True


SOLVERS = {
    "gekeler": solve_gekeler,
    "deterministic": solve_deterministic,
    "monte_carlo": solve_monte_carlo,
    "oracle": solve_oracle,
}


def solve(dm: DrinfeldModule, algorithm="monte_carlo", seed=0, **kwargs) -> CharPolyResult:
    if algorithm == "monte_carlo":
        return solve_monte_carlo(dm, seed=seed, **kwargs)
    try:
        return SOLVERS[algorithm](dm)
    except KeyError:
        raise ValueError(f"unknown algorithm {algorithm!r}") from None
