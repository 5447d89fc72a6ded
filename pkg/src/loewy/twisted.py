"""Frobenius-twisted semidirect product over a field of characteristic p.

Carrier elements are finitely supported deviation maps on natural-number
coordinates plus a tail parameter k; the coordinate value at t is
deviation(t) + k^p and the tail value is k^p.  Thus tails multiply through
the Frobenius a -> a^p while the stored parameter is k itself, which is
what makes the carrier a proper subring of the full product when the field
is imperfect.
"""

from __future__ import annotations

from typing import Dict, Optional, Tuple

from .fields import Field, FieldMismatch, FieldValue
from .ordinals import Ordinal, ONE
from .algebra import DimensionSequence, Element


class TwistedElement:
    """dev: finite map natural -> nonzero FieldValue; tail: FieldValue k."""

    __slots__ = ("dev", "tail")

    def __init__(self, dev: Tuple[Tuple[int, FieldValue], ...], tail: FieldValue):
        self.dev = dev
        self.tail = tail

    @property
    def field(self) -> Field:
        return self.tail.field

    def is_zero(self) -> bool:
        return not self.dev and self.tail.is_zero()

    def deviation(self, coord: int) -> Optional[FieldValue]:
        for c, v in self.dev:
            if c == coord:
                return v
        return None

    def coordinate_value(self, coord: int) -> FieldValue:
        d = self.deviation(coord)
        tv = self.tail_value()
        return tv if d is None else d + tv

    def tail_value(self) -> FieldValue:
        return self.tail ** self.field.characteristic

    def _check(self, other: "TwistedElement"):
        if self.field != other.field:
            raise FieldMismatch("mixed fields %r / %r" % (self.field, other.field))

    def __add__(self, other: "TwistedElement") -> "TwistedElement":
        self._check(other)
        dev = dict(self.dev)
        for c, v in other.dev:
            cur = dev.get(c)
            s = v if cur is None else cur + v
            if s.is_zero():
                dev.pop(c, None)
            else:
                dev[c] = s
        return TwistedElement(_sorted(dev), self.tail + other.tail)

    def __neg__(self) -> "TwistedElement":
        return TwistedElement(tuple((c, -v) for c, v in self.dev), -self.tail)

    def __sub__(self, other: "TwistedElement") -> "TwistedElement":
        return self + (-other)

    def __mul__(self, other: "TwistedElement") -> "TwistedElement":
        self._check(other)
        ts, to = self.tail_value(), other.tail_value()
        dev: Dict[int, FieldValue] = {}
        for c, v in self.dev:
            dev[c] = v * to
        for c, v in other.dev:
            d = self.deviation(c)
            term = v * ts if d is None else d * v + d * to + v * ts
            dev[c] = term
        dev = {c: v for c, v in dev.items() if not v.is_zero()}
        return TwistedElement(_sorted(dev), self.tail * other.tail)

    def __eq__(self, other):
        return (isinstance(other, TwistedElement)
                and self.dev == other.dev and self.tail == other.tail)

    def __hash__(self):
        return hash((self.dev, self.tail))

    def __repr__(self):
        return "TwistedElement(%r, tail=%r)" % (dict(self.dev), self.tail)


def _sorted(mapping: Dict[int, FieldValue]) -> Tuple[Tuple[int, FieldValue], ...]:
    return tuple(sorted(mapping.items()))


def t_zero(field: Field) -> TwistedElement:
    return TwistedElement((), field.zero())


def t_one(field: Field) -> TwistedElement:
    return TwistedElement((), field.one())


def t_quasi_inverse(a: TwistedElement) -> TwistedElement:
    """Reflexive quasi-inverse: a*s*a = a and s*a*s = s."""
    f = a.field
    s_tail = f.zero() if a.tail.is_zero() else a.tail.inv()
    s_tail_value = s_tail ** f.characteristic
    dev: Dict[int, FieldValue] = {}
    for c, v in a.dev:
        cv = a.coordinate_value(c)
        inv = f.zero() if cv.is_zero() else cv.inv()
        d = inv - s_tail_value
        if not d.is_zero():
            dev[c] = d
    return TwistedElement(_sorted(dev), s_tail)


def t_membership(x: Element) -> bool:
    """Whether a level-1 element of the full product lies in the twisted
    carrier: its constant tail must be a p-th power."""
    return x.const.pth_root() is not None


def psi_embed(x: Element) -> TwistedElement:
    """Ring monomorphism from the level-1 algebra into the twisted carrier:
    coordinate values map through Frobenius, tail c maps to parameter c."""
    if x.level != ONE:
        raise ValueError("psi_embed expects a level-1 element")
    p = x.field.characteristic
    c = x.const
    cp = c ** p
    dev: Dict[int, FieldValue] = {}
    for t, d in x.dev:
        nd = (d.const + c) ** p - cp
        if not nd.is_zero():
            dev[t] = nd
    return TwistedElement(_sorted(dev), c)


def psi_preimage(a: TwistedElement) -> Optional[Element]:
    """Inverse of psi_embed where it exists (always, over a perfect field)."""
    f = a.field
    c = a.tail
    cp = c ** f.characteristic
    dev = {}
    for t, v in a.dev:
        r = (v + cp).pth_root()
        if r is None:
            return None
        d = r - c
        if not d.is_zero():
            dev[t] = Element(Ordinal(0), (), d)
    return Element(ONE, tuple(sorted(dev.items())), c)


def t_dimension_sequence(field: Field) -> DimensionSequence:
    return DimensionSequence(ONE, field, 1)
