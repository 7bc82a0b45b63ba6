"""Rank-two Drinfeld modules ``phi_x = gamma(x) + g tau + Delta tau^2`` over a finite field L."""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from . import polynomials as P
from .field import ExtField

# Sign in front of Tr(N_{L/GF(q^2)}(Delta)^-1) giving the coefficient of x^(n/2)
# in the Frobenius trace.  Measured against the brute-force solver on a seed
# corpus (see tests/test_module.py::test_leading_trace_sign_against_oracle).
LEADING_TRACE_SIGN = 1


@dataclass(frozen=True)
class LeadingTrace:
    value: int
    candidates: tuple


@dataclass(eq=False)
class DrinfeldModule:
    """The Drinfeld module given by ``(gamma(x), g, Delta)`` over ``field``.

    The characteristic ``p`` (minimal polynomial of ``gamma(x)``), its degree
    ``d`` and ``m = n / d`` are derived on construction.
    """

    field: ExtField
    gamma_x: list
    g: list
    delta: list
    p: list = field(init=False)
    d: int = field(init=False)
    m: int = field(init=False)

    def __post_init__(self):
        L = self.field
        self.gamma_x = L.elem(self.gamma_x)
        self.g = L.elem(self.g)
        self.delta = L.elem(self.delta)
        if L.is_zero(self.delta):
            raise ValueError("Delta must be non-zero for a rank-two module")
        self.p = L.minpoly(self.gamma_x)
        self.d = len(self.p) - 1
        if L.n % self.d:
            raise ArithmeticError("degree of the characteristic does not divide n")
        self.m = L.n // self.d

    @property
    def q(self):
        return self.field.q

    @property
    def n(self):
        return self.field.n

    def __repr__(self):
        return (f"DrinfeldModule(q={self.q}, n={self.n}, m={self.m}, "
                f"gamma={self.field.residue(self.gamma_x)}, g={self.field.residue(self.g)}, "
                f"delta={self.field.residue(self.delta)})")

    @classmethod
    def random(cls, q, n, m, rng=None, f=None, frobenius_backend="auto"):
        """A random module over a random degree-``n`` field with ``[L : K] = m``.

        ``gamma(x)`` is the norm of a random element into GF(q^d), redrawn until
        its minimal polynomial has degree exactly ``d = n/m``.
        """
        P.check_prime(q)
        if n < 1 or m < 1 or n % m:
            raise ValueError(f"m={m} must divide n={n}")
        rng = rng or random.Random()
        if f is None:
            f = random_irreducible(q, n, rng)
        L = ExtField(q, f, check=False, frobenius_backend=frobenius_backend)
        d = n // m
        exponent = (q**n - 1) // (q**d - 1)
        while True:
            gamma = L.pow(L.random_nonzero(rng), exponent)
            if len(L.minpoly(gamma)) - 1 == d:
                break
        return cls(L, gamma, L.random(rng), L.random_nonzero(rng))

    # -- the operator Phi_x ---------------------------------------------

    def apply_phi_x(self, a):
        """``Phi_x(a) = gamma(x) a + g pi(a) + Delta pi^2(a)``."""
        L = self.field
        pa = L.frobenius(a, 1)
        ppa = L.frobenius(pa, 1)
        return L.dot((self.gamma_x, self.g, self.delta), (a, pa, ppa))

    def orbit(self, a, count):
        """``[a, Phi_x(a), ..., Phi_x^(count-1)(a)]``."""
        if count < 1:
            raise ValueError("orbit length must be positive")
        out = [list(a)]
        for _ in range(count - 1):
            out.append(self.apply_phi_x(out[-1]))
        return out

    def apply_poly(self, c, a, orbit=None):
        """``Phi_C(a) = sum c_i Phi_x^i(a)`` for ``C`` in GF(q)[x]."""
        if orbit is None:
            orbit = self.orbit(a, max(len(c), 1))
        return self.field.lincomb(c, orbit)

    # -- Frobenius norm and the leading trace coefficient ---------------

    def frobenius_norm(self):
        """``B = (-1)^n N_{L/GF(q)}(Delta)^-1 p^m``."""
        q, n = self.q, self.n
        unit = pow(self.field.norm(self.delta), -1, q)
        if n % 2:
            unit = -unit
        return P.scale(P.power(self.p, self.m, q), unit, q)

    def leading_trace_coefficient(self):
        """Candidates ``+-Tr(N_{L/GF(q^2)}(Delta)^-1)`` for the coefficient of ``x^(n/2)`` in A."""
        L, q = self.field, self.q
        if self.n % 2:
            raise ValueError("leading trace coefficient formula needs even n")
        t = L.trace_quadratic_to_base(L.inv(L.norm_to_quadratic(self.delta)))
        value = LEADING_TRACE_SIGN * t % q
        return LeadingTrace(value, (value, -value % q))


def random_irreducible(q, n, rng):
    """Random monic irreducible polynomial of degree ``n`` over GF(q)."""
    while True:
        f = [rng.randrange(q) for _ in range(n)] + [1]
        if P.irreducible_test(f, q):
            return f
