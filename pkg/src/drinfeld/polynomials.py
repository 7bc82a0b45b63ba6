"""Dense univariate polynomials over a prime field GF(q).

Polynomials are plain lists of ints in ``range(q)``, little-endian
(``a[i]`` is the coefficient of ``x**i``), with no trailing zeros; the zero
polynomial is ``[]``.  Every function takes the modulus ``q`` explicitly and
returns a fresh list in canonical form.
"""

from __future__ import annotations

from array import array
from functools import lru_cache
from math import ceil, log

KARATSUBA_THRESHOLD = 32


@lru_cache(maxsize=None)
def check_prime(q: int) -> int:
    """Return ``q`` if it is a prime fitting in a 64-bit word, else raise."""
    from sympy import isprime

    if not isinstance(q, int) or q < 2 or q >= 2**64 or not isprime(q):
        raise ValueError(f"q must be a word-size prime, got {q!r}")
    return q


def trim(a):
    """Strip trailing zeros in place and return ``a``."""
    while a and not a[-1]:
        a.pop()
    return a


def degree(a) -> float:
    """Degree of ``a``; ``-inf`` for the zero polynomial."""
    return len(a) - 1 if a else float("-inf")


def from_coeffs(coeffs, q):
    return trim([c % q for c in coeffs])


def x_minus(c, q):
    return trim([-c % q, 1])


def add(a, b, q):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = (out[i] + c) % q
    return trim(out)


def sub(a, b, q):
    out = list(a) + [0] * (len(b) - len(a))
    for i, c in enumerate(b):
        out[i] = (out[i] - c) % q
    return trim(out)


def neg(a, q):
    return [-c % q for c in a]


def scale(a, c, q):
    c %= q
    if not c:
        return []
    return [c * x % q for x in a]


def shift(a, k):
    """Multiply by ``x**k``."""
    return [0] * k + list(a) if a else []


def monic(a, q):
    if not a:
        return []
    return scale(a, pow(a[-1], -1, q), q)


def _mul_schoolbook(a, b, q):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return trim([c % q for c in out])


def _slot(bound):
    """Array typecode and byte width able to hold nonnegative ints <= bound."""
    if bound < 2**32:
        return "I", 4
    if bound < 2**64:
        return "Q", 8
    return None, (bound.bit_length() + 8) // 8


def pack(a, code, width):
    """Kronecker substitution: coefficients -> one big int, ``width`` bytes each."""
    if code:
        return int.from_bytes(array(code, a).tobytes(), "little")
    return int.from_bytes(b"".join(c.to_bytes(width, "little") for c in a), "little")


def unpack(x, lo, hi, code, width):
    """Slots ``lo..hi-1`` of a Kronecker-packed big int, as a list of ints."""
    raw = x.to_bytes(max(width * hi, (x.bit_length() + 7) // 8), "little")
    raw = raw[width * lo:width * hi]
    if code:
        out = array(code)
        out.frombytes(raw)
        return out.tolist()
    return [int.from_bytes(raw[i:i + width], "little") for i in range(0, len(raw), width)]


def _mul_kronecker(a, b, q):
    code, width = _slot(min(len(a), len(b)) * (q - 1) ** 2)
    prod = pack(a, code, width) * pack(b, code, width)
    return trim([c % q for c in unpack(prod, 0, len(a) + len(b) - 1, code, width)])


def mul(a, b, q, threshold=None):
    """Product of ``a`` and ``b``.

    Below ``threshold`` (default ``KARATSUBA_THRESHOLD``) terms the schoolbook
    product is used; above it the operands are packed into big integers and
    multiplied by CPython's Karatsuba routine.
    """
    if not a or not b:
        return []
    if threshold is None:
        threshold = KARATSUBA_THRESHOLD
    if min(len(a), len(b)) < threshold:
        return _mul_schoolbook(a, b, q)
    return _mul_kronecker(a, b, q)


def divmod_(a, b, q):
    """Euclidean division: ``(quo, rem)`` with ``a == quo*b + rem``."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if len(a) < len(b):
        return [], list(a)
    rem = list(a)
    db = len(b) - 1
    inv = pow(b[-1], -1, q)
    quo = [0] * (len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        c = rem[i] * inv % q
        if c:
            k = i - db
            quo[k] = c
            for j in range(db + 1):
                rem[k + j] = (rem[k + j] - c * b[j]) % q
    return trim(quo), trim(rem[:db])


def rem(a, b, q):
    return divmod_(a, b, q)[1]


def mulmod(a, b, m, q):
    return rem(mul(a, b, q), m, q)


def powmod(a, e, m, q):
    """``a**e mod m`` by square-and-multiply."""
    result = [1] if len(m) > 1 else []
    base = rem(a, m, q)
    while e:
        if e & 1:
            result = mulmod(result, base, m, q)
        e >>= 1
        if e:
            base = mulmod(base, base, m, q)
    return result


def power(a, e, q):
    result = [1]
    base = list(a)
    while e:
        if e & 1:
            result = mul(result, base, q)
        e >>= 1
        if e:
            base = mul(base, base, q)
    return result


def evaluate(a, x, q):
    acc = 0
    for c in reversed(a):
        acc = (acc * x + c) % q
    return acc


def xgcd(a, b, q):
    """Extended gcd: ``(g, s, t)`` with ``g`` monic and ``g == s*a + t*b``."""
    if not a and not b:
        raise ValueError("xgcd of two zero polynomials")
    r0, r1 = list(a), list(b)
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        quo, r = divmod_(r0, r1, q)
        r0, r1 = r1, r
        s0, s1 = s1, sub(s0, mul(quo, s1, q), q)
        t0, t1 = t1, sub(t0, mul(quo, t1, q), q)
    inv = pow(r0[-1], -1, q)
    return scale(r0, inv, q), scale(s0, inv, q), scale(t0, inv, q)


def gcd(a, b, q):
    return xgcd(a, b, q)[0]


def lcm(a, b, q):
    if not a or not b:
        return []
    return monic(divmod_(mul(a, b, q), gcd(a, b, q), q)[0], q)


def resultant(a, b, q):
    """Resultant ``res(a, b)``; for monic ``a`` this is the product of ``b`` at the roots of ``a``."""
    if not a:
        raise ValueError("resultant with zero first argument")
    sign = 1
    acc = 1
    while True:
        da = len(a) - 1
        if not b:
            return 0 if da > 0 else 1
        db = len(b) - 1
        if db == 0:
            return sign * acc * pow(b[0], da, q) % q
        r = rem(a, b, q)
        if not r:
            return 0
        # res(a, b) = (-1)^(da*db) * lc(b)^(da - deg r) * res(b, r)
        if (da * db) & 1:
            sign = -sign
        acc = acc * pow(b[-1], da - (len(r) - 1), q) % q
        a, b = b, r


def _prime_factors(t):
    out, p = [], 2
    while p * p <= t:
        if t % p == 0:
            out.append(p)
            while t % p == 0:
                t //= p
        p += 1
    if t > 1:
        out.append(t)
    return out


def irreducible_test(e, q):
    """Rabin's irreducibility test for a monic ``e`` of positive degree."""
    t = len(e) - 1
    if t < 1:
        raise ValueError("irreducible_test needs positive degree")
    if t == 1:
        return True
    x = [0, 1]
    # frob[k] = x^(q^k) mod e
    frob = {0: x}
    cur = x
    for k in range(1, t + 1):
        cur = powmod(cur, q, e, q)
        frob[k] = cur
    if frob[t] != x:
        return False
    for r in _prime_factors(t):
        h = sub(frob[t // r], x, q)
        if len(gcd(h, e, q)) != 1:
            return False
    return True


def _monic_polys(q, t):
    """All monic polynomials of degree ``t``, in lexicographic order of coefficients."""
    for idx in range(q**t):
        coeffs = []
        for _ in range(t):
            idx, c = divmod(idx, q)
            coeffs.append(c)
        yield coeffs + [1]


def enumerate_moduli(q, n):
    """Pairwise distinct monic irreducibles with degree sum > n/2, plus a spare.

    When ``q`` has enough elements these are ``x, x-1, x-2, ...``; otherwise
    they are all monic irreducibles of degree ``ceil(log_q(n+1))``.
    """
    need = n // 2 + 1
    if q >= need + 1:
        return [x_minus(e, q) for e in range(need + 1)]
    t = max(1, ceil(log(n + 1, q) - 1e-12))
    while q**t < n + 1:
        t += 1
    out = []
    total = 0
    deg = t
    while True:
        for e in _monic_polys(q, deg):
            if irreducible_test(e, q):
                out.append(e)
                total += deg
        if total >= need + t:
            return out
        deg += 1


def crt_combine(residues, q):
    """Chinese remaindering: ``residues`` is a sequence of ``(value, modulus)`` pairs."""
    residues = list(residues)
    if not residues:
        return []
    acc, mod = rem(residues[0][0], residues[0][1], q), list(residues[0][1])
    for value, modulus in residues[1:]:
        g, s, _ = xgcd(mod, modulus, q)
        if g != [1]:
            raise ValueError("CRT moduli are not coprime")
        # acc + mod * (s * (value - acc) mod modulus)
        k = mulmod(s, sub(value, acc, q), modulus, q)
        acc = add(acc, mul(mod, k, q), q)
        mod = mul(mod, modulus, q)
    return acc
