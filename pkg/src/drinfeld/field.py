"""The finite field L = GF(q)[z]/(f) and its Frobenius engine.

Elements are lists of exactly ``n`` ints (the residue modulo ``f`` on the
power basis ``1, zeta, ..., zeta^(n-1)``).  They are never mutated once
returned, so they can be shared freely.
"""

from __future__ import annotations

from math import isqrt

from . import polynomials as P


class ModRing:
    """Arithmetic in GF(q)[x]/(h) for a monic ``h`` of degree ``n >= 1``.

    Products use Kronecker substitution followed by a Barrett reduction, both
    carried out on Python big integers.
    """

    DOT_TERMS = 4

    def __init__(self, q, h):
        if not h or h[-1] != 1:
            raise ValueError("modulus must be monic")
        self.q = q
        self.h = list(h)
        self.n = n = len(h) - 1
        if n < 1:
            raise ValueError("modulus must have positive degree")
        # slots hold sums of up to DOT_TERMS full products
        self._code, self._width = P._slot(self.DOT_TERMS * n * (q - 1) ** 2 + 1)
        # mu = floor(x^(2n-2) / h)
        mu = P.divmod_([0] * (2 * n - 2) + [1], h, q)[0] if n >= 2 else []
        self._mu = self._pack(mu)
        self._hlow = self._pack([-c % q for c in h[:n]])

    def _pack(self, a):
        return P.pack(a, self._code, self._width)

    def _unpack(self, x, lo, hi):
        return P.unpack(x, lo, hi, self._code, self._width)

    def elem(self, coeffs):
        """Reduce an arbitrary coefficient list into a length-``n`` residue."""
        q, n = self.q, self.n
        a = [c % q for c in coeffs]
        if len(a) > n:
            a = P.rem(P.trim(a), self.h, q)
        return a + [0] * (n - len(a))

    def _reduce_packed(self, prod):
        q, n = self.q, self.n
        c = [v % q for v in self._unpack(prod, 0, 2 * n - 1)]
        if n == 1:
            return c
        quo = [v % q for v in self._unpack(self._pack(c[n:]) * self._mu, n - 2, 2 * n - 3)]
        low = self._unpack(self._pack(quo) * self._hlow, 0, n)
        return [(x + y) % q for x, y in zip(c, low)]

    def mul(self, a, b):
        return self._reduce_packed(self._pack(a) * self._pack(b))

    def sqr(self, a):
        x = self._pack(a)
        return self._reduce_packed(x * x)

    def dot(self, xs, ys):
        """``sum(x * y)`` over paired elements, with a single reduction per chunk."""
        xs, ys = list(xs), list(ys)
        out = None
        for k in range(0, len(xs), self.DOT_TERMS):
            acc = sum(self._pack(x) * self._pack(y)
                      for x, y in zip(xs[k:k + self.DOT_TERMS], ys[k:k + self.DOT_TERMS]))
            part = self._reduce_packed(acc)
            out = part if out is None else [(u + v) % self.q for u, v in zip(out, part)]
        return out if out is not None else [0] * self.n

    def pow(self, a, e):
        result = None
        base = a
        while e:
            if e & 1:
                result = base if result is None else self.mul(result, base)
            e >>= 1
            if e:
                base = self.sqr(base)
        return self.one() if result is None else result

    def one(self):
        return [1] + [0] * (self.n - 1)

    def lincomb(self, coeffs, elems):
        """``sum(c_i * elems[i])`` for scalars ``c_i``."""
        q = self.q
        acc = [0] * self.n
        for c, e in zip(coeffs, elems):
            c %= q
            if c:
                acc = [x + c * y for x, y in zip(acc, e)]
        return [x % q for x in acc]

    def compose(self, f, g):
        """``f(g) mod h`` by Brent and Kung's baby-step / giant-step method.

        ``f`` is any coefficient list; ``g`` is a residue of length ``n``.
        """
        q, n = self.q, self.n
        f = P.trim([c % q for c in f])
        if len(f) <= 1:
            return self.elem(f)
        s = max(1, isqrt(len(f) - 1) + 1)
        # baby steps g^0 .. g^s, packed with slots wide enough for s products
        powers = [self.one(), list(g)]
        for _ in range(2, s + 1):
            powers.append(self.mul(powers[-1], g))
        giant = powers[s]
        code, width = P._slot(s * (q - 1) ** 2 + 1)
        packed = [P.pack(p, code, width) for p in powers[:s]]
        blocks = []
        for start in range(0, len(f), s):
            acc = 0
            for c, pw in zip(f[start:start + s], packed):
                if c:
                    acc += c * pw
            blocks.append([v % q for v in P.unpack(acc, 0, n, code, width)])
        result = blocks[-1]
        for blk in reversed(blocks[:-1]):
            result = self.mul(result, giant)
            result = [(x + y) % q for x, y in zip(result, blk)]
        return result


def modcomp(f, g, h, q):
    """``f(g) mod h`` for a monic ``h``, using :meth:`ModRing.compose`."""
    ring = ModRing(q, h)
    return P.trim(ring.compose(f, ring.elem(g)))


class ExtField(ModRing):
    """The extension L = GF(q)[z]/(f) of degree ``n = deg f``.

    ``frobenius_backend`` selects how ``pi^i`` is applied: ``"squaring"``
    raises to the ``q``-th power ``i`` times, ``"modcomp"`` composes with the
    cached ``z^(q^i) mod f``, and ``"auto"`` uses squaring for ``|i| <= 2``.
    """

    SQUARING_CUTOFF = 2

    def __init__(self, q, f, check=True, frobenius_backend="auto"):
        P.check_prime(q)
        f = P.from_coeffs(f, q)
        super().__init__(q, f)
        if check and not P.irreducible_test(f, q):
            raise ValueError("defining polynomial is not irreducible")
        if frobenius_backend not in ("auto", "squaring", "modcomp"):
            raise ValueError(f"unknown Frobenius backend {frobenius_backend!r}")
        self.backend = frobenius_backend
        self.f = self.h
        zeta = self.elem([0, 1])
        self._xi = {0: zeta, 1: self.pow(zeta, q)}
        k = 1
        while 2 * k <= self.n:
            self._xi[2 * k] = self.compose(self._xi[k], self._xi[k])
            k *= 2
        if self.n > 1:
            self.xi(self.n - 1)

    def __repr__(self):
        return f"ExtField(q={self.q}, f={P.trim(list(self.f))})"

    # -- elements ---------------------------------------------------------

    def zero(self):
        return [0] * self.n

    def const(self, c):
        return [c % self.q] + [0] * (self.n - 1)

    def zeta(self):
        return self.elem([0, 1])

    def random(self, rng):
        return [rng.randrange(self.q) for _ in range(self.n)]

    def random_nonzero(self, rng):
        while True:
            a = self.random(rng)
            if any(a):
                return a

    def is_zero(self, a):
        return not any(a)

    def is_base(self, a):
        return not any(a[1:])

    def add(self, a, b):
        q = self.q
        return [(x + y) % q for x, y in zip(a, b)]

    def sub(self, a, b):
        q = self.q
        return [(x - y) % q for x, y in zip(a, b)]

    def neg(self, a):
        q = self.q
        return [-x % q for x in a]

    def scale(self, a, c):
        q = self.q
        c %= q
        return [c * x % q for x in a]

    def inv(self, a):
        r = P.trim(list(a))
        if not r:
            raise ZeroDivisionError("inverse of zero in L")
        g, s, _ = P.xgcd(r, self.f, self.q)
        assert g == [1]
        return self.elem(s)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def residue(self, a):
        """The element as a canonical (trimmed) polynomial in z."""
        return P.trim(list(a))

    # -- Frobenius --------------------------------------------------------

    def xi(self, i):
        """``z^(q^i) mod f`` for ``0 <= i < n`` (memoized)."""
        i %= self.n
        cached = self._xi.get(i)
        if cached is not None:
            return cached
        result = None
        done = 0
        bit = 1
        while bit <= i:
            if i & bit:
                part = self._xi[bit]
                # xi_{done + bit} = xi_bit(xi_done)
                result = part if result is None else self.compose(part, result)
                done += bit
                self._xi.setdefault(done, result)
            bit <<= 1
        self._xi[i] = result
        return result

    def frobenius(self, a, i=1, backend=None):
        """``pi^i(a) = a^(q^i)``; negative ``i`` applies the inverse automorphism."""
        n = self.n
        k = i % n
        if k == 0:
            return list(a)
        backend = backend or self.backend
        if backend == "auto":
            backend = "squaring" if abs(i) <= self.SQUARING_CUTOFF and i > 0 else "modcomp"
        if backend == "squaring":
            q = self.q
            for _ in range(k):
                a = self.pow(a, q)
            return a
        return self.compose(a, self.xi(k))

    # -- norms, traces, minimal polynomials -------------------------------

    def norm(self, a):
        """``N_{L/GF(q)}(a)`` as ``resultant(f, a)``."""
        return P.resultant(self.f, self.residue(a), self.q)

    def norm_to_quadratic(self, a):
        """``N_{L/GF(q^2)}(a) = a^((q^n - 1)/(q^2 - 1))`` for even ``n``."""
        if self.n % 2:
            raise ValueError("L has no quadratic subfield when n is odd")
        if self.is_zero(a):
            raise ZeroDivisionError("norm of zero requested")
        q = self.q
        return self.pow(a, (q**self.n - 1) // (q * q - 1))

    def trace_quadratic_to_base(self, b):
        """``Tr_{GF(q^2)/GF(q)}(b) = b + pi(b)`` for ``b`` in the quadratic subfield."""
        if self.frobenius(b, 2) != list(b):
            raise ValueError("element does not lie in GF(q^2)")
        t = self.add(b, self.frobenius(b, 1))
        if not self.is_base(t):
            raise ArithmeticError("trace did not land in GF(q)")
        return t[0]

    def minpoly(self, a):
        """Monic minimal polynomial of ``a`` over GF(q)."""
        q, n = self.q, self.n
        basis = []  # (pivot, reduced vector, combination over powers)
        power = self.one()
        k = 0
        while True:
            vec = list(power)
            combo = [0] * k + [1]
            for piv, bvec, bcomb in basis:
                c = vec[piv]
                if c:
                    vec = [(x - c * y) % q for x, y in zip(vec, bvec)]
                    for j, y in enumerate(bcomb):
                        combo[j] = (combo[j] - c * y) % q
            piv = next((j for j in range(n) if vec[j]), None)
            if piv is None:
                return P.trim(combo)
            inv = pow(vec[piv], -1, q)
            basis.append((piv, [x * inv % q for x in vec], [x * inv % q for x in combo]))
            power = self.mul(power, a)
            k += 1

    def eval_poly(self, c, a):
        """Horner evaluation of the GF(q)-polynomial ``c`` at ``a``."""
        acc = self.zero()
        for coef in reversed(c):
            acc = self.mul(acc, a)
            acc[0] = (acc[0] + coef) % self.q
        return acc
