from __future__ import annotations

from .kernels import FIELD_BITS

FAMILIES = ("x", "u", "v")


class VarId:
    """A variable. Identity is the index alone; the family letter is display only."""

    __slots__ = ("index", "family")

    def __init__(self, index: int, family: str = "x"):
        if index < 1:
            raise ValueError("variable index must be >= 1")
        if family not in FAMILIES:
            raise ValueError("unknown variable family %r" % family)
        self.index = index
        self.family = family

    def __eq__(self, other):
        return isinstance(other, VarId) and other.index == self.index

    def __lt__(self, other):
        return self.index < other.index

    def __hash__(self):
        return hash(("VarId", self.index))

    def __repr__(self):
        return "%s%d" % (self.family, self.index)


def mono_of(index: int) -> int:
    """Packed monomial of the single variable x_index."""
    return 1 << (FIELD_BITS * (index - 1))


class LinForm:
    """Integer linear combination of variables, stored as sorted (index, coef) pairs."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms=()):
        if isinstance(terms, dict):
            items = terms.items()
        else:
            items = terms
        acc: dict[int, int] = {}
        for k, c in items:
            if isinstance(k, VarId):
                k = k.index
            acc[k] = acc.get(k, 0) + c
        self.terms = tuple(sorted((k, c) for k, c in acc.items() if c))
        self._hash = hash(self.terms)

    @classmethod
    def _raw(cls, terms: tuple) -> "LinForm":
        obj = cls.__new__(cls)
        obj.terms = terms
        obj._hash = hash(terms)
        return obj

    @classmethod
    def var(cls, index: int, coef: int = 1) -> "LinForm":
        return cls._raw(((index, coef),))

    def is_zero(self) -> bool:
        return not self.terms

    def is_single_var(self) -> bool:
        return len(self.terms) == 1 and self.terms[0][1] == 1

    def variables(self):
        return [k for k, _ in self.terms]

    def coef(self, index: int) -> int:
        for k, c in self.terms:
            if k == index:
                return c
        return 0

    def __add__(self, other: "LinForm") -> "LinForm":
        if not other.terms:
            return self
        if not self.terms:
            return other
        return LinForm(self.terms + other.terms)

    def __sub__(self, other: "LinForm") -> "LinForm":
        return self + (-other)

    def __neg__(self) -> "LinForm":
        return LinForm._raw(tuple((k, -c) for k, c in self.terms))

    def scale(self, k: int) -> "LinForm":
        if k == 0:
            return LinForm._raw(())
        return LinForm._raw(tuple((i, c * k) for i, c in self.terms))

    def shift_vars(self, offset: int) -> "LinForm":
        return LinForm._raw(tuple((i + offset, c) for i, c in self.terms))

    def to_poly(self) -> dict:
        return {mono_of(k): c for k, c in self.terms}

    def __eq__(self, other):
        return isinstance(other, LinForm) and self.terms == other.terms

    def __hash__(self):
        return self._hash

    def __lt__(self, other: "LinForm"):
        return self.terms < other.terms

    def __le__(self, other: "LinForm"):
        return self.terms <= other.terms

    def render(self, family: str = "v") -> str:
        if not self.terms:
            return "0"
        out = []
        for k, c in self.terms:
            if c == 1:
                s = "+%s%d" % (family, k)
            elif c == -1:
                s = "-%s%d" % (family, k)
            elif c > 0:
                s = "+%d*%s%d" % (c, family, k)
            else:
                s = "%d*%s%d" % (c, family, k)
            out.append(s)
        text = "".join(out)
        return text[1:] if text.startswith("+") else text

    def __repr__(self):
        return "LinForm(%s)" % self.render("x")
