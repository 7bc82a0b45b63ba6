"""Plain-text instance files.

One record per line, coefficients little-endian::

    q 5
    f 2 4 4 0 1
    gamma 0 1 0 0
    g 1 0 0 0
    delta 1 0 0 0

Blank lines and ``#`` comments are ignored.  ``gamma``, ``g`` and ``delta``
carry exactly ``n = deg f`` residues in ``[0, q)``.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import polynomials as P
from .field import ExtField
from .module import DrinfeldModule

KEYS = ("q", "f", "gamma", "g", "delta")


class InstanceError(ValueError):
    def __init__(self, msg, line=None):
        self.line = line
        super().__init__(f"line {line}: {msg}" if line is not None else msg)


@dataclass
class Instance:
    q: int
    f: list
    gamma: list
    g: list
    delta: list

    @property
    def n(self):
        return len(self.f) - 1

    def to_module(self, frobenius_backend="auto"):
        L = ExtField(self.q, self.f, frobenius_backend=frobenius_backend)
        return DrinfeldModule(L, self.gamma, self.g, self.delta)

    @classmethod
    def from_module(cls, dm):
        L = dm.field
        return cls(L.q, list(L.f), list(dm.gamma_x), list(dm.g), list(dm.delta))


def format_instance(inst: Instance) -> str:
    lines = [f"q {inst.q}"]
    for key in KEYS[1:]:
        lines.append(" ".join([key] + [str(c) for c in getattr(inst, key)]))
    return "\n".join(lines) + "\n"


def parse_instance(text: str) -> Instance:
    fields, where = {}, {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, *rest = line.split()
        if key not in KEYS:
            raise InstanceError(f"unknown key {key!r}", lineno)
        if key in fields:
            raise InstanceError(f"duplicate key {key!r}", lineno)
        try:
            fields[key] = [int(tok) for tok in rest]
        except ValueError:
            raise InstanceError(f"non-integer coefficient in {key!r}", lineno) from None
        where[key] = lineno
    for key in KEYS:
        if key not in fields:
            raise InstanceError(f"missing key {key!r}")

    if len(fields["q"]) != 1:
        raise InstanceError("q takes exactly one value", where["q"])
    q = fields["q"][0]
    try:
        P.check_prime(q)
    except ValueError as exc:
        raise InstanceError(str(exc), where["q"]) from None

    def residues(key):
        vals = fields[key]
        bad = [c for c in vals if not 0 <= c < q]
        if bad:
            raise InstanceError(f"{key} coefficient {bad[0]} outside [0, {q})", where[key])
        return vals

    f = residues("f")
    if len(f) < 2 or f[-1] != 1:
        raise InstanceError("f must be monic of positive degree", where["f"])
    if not P.irreducible_test(f, q):
        raise InstanceError("f is not irreducible", where["f"])
    n = len(f) - 1
    out = {}
    for key in ("gamma", "g", "delta"):
        vals = residues(key)
        if len(vals) != n:
            raise InstanceError(f"{key} needs {n} coefficients, got {len(vals)}", where[key])
        out[key] = vals
    if not any(out["delta"]):
        raise InstanceError("delta must be non-zero", where["delta"])
    return Instance(q, f, out["gamma"], out["g"], out["delta"])


def read_instance(path) -> Instance:
    with open(path) as fh:
        return parse_instance(fh.read())


def write_instance(inst: Instance, path):
    with open(path, "w") as fh:
        fh.write(format_instance(inst))
