"""Finite abelian decoration groups Z/n1 x ... x Z/nk, written multiplicatively.

Specs and elements are interned, so equality is identity and products are
table lookups.
"""

from __future__ import annotations

import itertools
import re

from .errors import ParseError, SpecMismatch


class GammaSpec:
    __slots__ = ("moduli", "elements", "_by_res", "_mul", "_inv", "identity")

    _interned: dict = {}

    def __new__(cls, moduli):
        moduli = tuple(int(n) for n in moduli)
        if not moduli or any(n < 1 for n in moduli):
            raise ValueError("moduli must be a nonempty list of positive integers")
        obj = cls._interned.get(moduli)
        if obj is not None:
            return obj
        obj = object.__new__(cls)
        obj.moduli = moduli
        residues = list(itertools.product(*[range(n) for n in moduli]))
        obj.elements = tuple(GammaElem._make(obj, r, i) for i, r in enumerate(residues))
        obj._by_res = {e.residues: e for e in obj.elements}
        obj.identity = obj._by_res[tuple(0 for _ in moduli)]
        n = len(obj.elements)
        obj._mul = [[None] * n for _ in range(n)]
        for a in obj.elements:
            for b in obj.elements:
                r = tuple((x + y) % m for x, y, m in zip(a.residues, b.residues, moduli))
                obj._mul[a.index][b.index] = obj._by_res[r]
        obj._inv = [obj._by_res[tuple((-x) % m for x, m in zip(a.residues, moduli))] for a in obj.elements]
        cls._interned[moduli] = obj
        return obj

    def __reduce__(self):
        return (GammaSpec, (self.moduli,))

    @property
    def order(self) -> int:
        return len(self.elements)

    def elem(self, *residues) -> "GammaElem":
        if len(residues) == 1 and isinstance(residues[0], (tuple, list)):
            residues = tuple(residues[0])
        if len(residues) != len(self.moduli):
            raise ValueError("expected %d residues" % len(self.moduli))
        return self._by_res[tuple(int(r) % m for r, m in zip(residues, self.moduli))]

    def vectors(self, r: int):
        """All sigma-vectors of length r in mixed-radix order (last position fastest)."""
        return itertools.product(self.elements, repeat=r)

    def render(self) -> str:
        return "x".join("z%d" % n for n in self.moduli)

    @classmethod
    def parse(cls, text: str) -> "GammaSpec":
        t = text.strip().lower()
        if t in ("trivial", "1"):
            return cls((1,))
        parts = t.split("x")
        moduli = []
        for p in parts:
            m = re.fullmatch(r"z(\d+)", p.strip())
            if not m:
                raise ParseError("bad group %r (expected e.g. z2 or z3xz4)" % text)
            moduli.append(int(m.group(1)))
        try:
            return cls(moduli)
        except ValueError as exc:
            raise ParseError(str(exc)) from exc

    def parse_elem(self, text: str) -> "GammaElem":
        t = text.strip()
        if t.startswith("(") and t.endswith(")"):
            t = t[1:-1]
        try:
            vals = [int(x) for x in t.split(",")]
        except ValueError as exc:
            raise ParseError("bad group element %r" % text) from exc
        if len(vals) != len(self.moduli):
            raise ParseError("group element %r has wrong arity for %s" % (text, self.render()))
        if any(not (0 <= v < m) for v, m in zip(vals, self.moduli)):
            raise ParseError("group element %r out of range for %s" % (text, self.render()))
        return self.elem(*vals)

    def __repr__(self):
        return "GammaSpec(%s)" % self.render()

    def __lt__(self, other):
        return self.moduli < other.moduli


class GammaElem:
    __slots__ = ("spec", "residues", "index")

    @classmethod
    def _make(cls, spec, residues, index):
        obj = object.__new__(cls)
        obj.spec = spec
        obj.residues = residues
        obj.index = index
        return obj

    def __reduce__(self):
        return (_elem, (self.spec.moduli, self.residues))

    def __mul__(self, other: "GammaElem") -> "GammaElem":
        if other.spec is not self.spec:
            raise SpecMismatch("group elements from %s and %s" % (self.spec.render(), other.spec.render()))
        return self.spec._mul[self.index][other.index]

    def inv(self) -> "GammaElem":
        return self.spec._inv[self.index]

    def __truediv__(self, other: "GammaElem") -> "GammaElem":
        return self * other.inv()

    def is_identity(self) -> bool:
        return self is self.spec.identity

    def __lt__(self, other: "GammaElem"):
        return self.index < other.index

    def __le__(self, other: "GammaElem"):
        return self.index <= other.index

    def __hash__(self):
        return hash((self.spec.moduli, self.index))

    def render(self) -> str:
        if len(self.residues) == 1:
            return str(self.residues[0])
        return "(" + ",".join(str(r) for r in self.residues) + ")"

    def __repr__(self):
        return "g" + self.render()


def _elem(moduli, residues):
    return GammaSpec(moduli).elem(*residues)


def g_op(a: GammaElem, b: GammaElem | None = None, op: str = "mul") -> GammaElem:
    if op == "mul":
        return a * b
    if op == "inv":
        return a.inv()
    if op == "id":
        return a.spec.identity
    raise ValueError("unknown op %r" % op)


TRIVIAL = GammaSpec((1,))
Z2 = GammaSpec((2,))
