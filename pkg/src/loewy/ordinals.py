"""Cantor normal form ordinals below epsilon_0.

Ordinals index socle layers and the coordinates of limit-level
constructions.  Values are immutable and totally ordered; addition is the
usual (non-commutative) ordinal sum.
"""

from __future__ import annotations

import functools
from typing import Iterator, Optional, Tuple


class OrdinalParseError(ValueError):
    pass


@functools.total_ordering
class Ordinal:
    """An ordinal below epsilon_0, stored in Cantor normal form.

    ``terms`` is a tuple of ``(exponent, coefficient)`` pairs with strictly
    decreasing exponents (themselves ordinals) and positive integer
    coefficients.  The empty tuple denotes 0.  Structural equality is
    ordinal equality.
    """

    __slots__ = ("terms", "_hash")

    def __init__(self, value: int = 0):
        if not isinstance(value, int) or value < 0:
            raise ValueError("finite ordinal literal must be a non-negative int")
        self.terms: Tuple[Tuple["Ordinal", int], ...]
        if value == 0:
            object.__setattr__(self, "terms", ())
        else:
            object.__setattr__(self, "terms", ((_ZERO_SENTINEL, value),))
        object.__setattr__(self, "_hash", None)

    @classmethod
    def _from_terms(cls, terms) -> "Ordinal":
        o = cls.__new__(cls)
        object.__setattr__(o, "terms", tuple(terms))
        object.__setattr__(o, "_hash", None)
        return o

    @classmethod
    def omega(cls, exponent: "Ordinal | int" = 1, coefficient: int = 1) -> "Ordinal":
        """omega**exponent * coefficient."""
        e = exponent if isinstance(exponent, Ordinal) else Ordinal(exponent)
        if coefficient <= 0:
            raise ValueError("coefficient must be positive")
        if e.is_zero():
            return cls(coefficient)
        return cls._from_terms(((e, coefficient),))

    # -- predicates ---------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_finite(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and self.terms[0][0].is_zero())

    def finite_value(self) -> int:
        if not self.is_finite():
            raise ValueError("not a finite ordinal: %s" % self)
        return self.terms[0][1] if self.terms else 0

    def is_limit(self) -> bool:
        return bool(self.terms) and not self.terms[-1][0].is_zero()

    def is_successor(self) -> bool:
        return bool(self.terms) and self.terms[-1][0].is_zero()

    def classify(self) -> Tuple[str, Optional["Ordinal"]]:
        """Return ('zero', None), ('successor', predecessor) or ('limit', None)."""
        if not self.terms:
            return ("zero", None)
        exp, coeff = self.terms[-1]
        if not exp.is_zero():
            return ("limit", None)
        if coeff > 1:
            pred = Ordinal._from_terms(self.terms[:-1] + ((exp, coeff - 1),))
        else:
            pred = Ordinal._from_terms(self.terms[:-1])
        return ("successor", pred)

    def predecessor(self) -> "Ordinal":
        kind, pred = self.classify()
        if kind != "successor":
            raise ValueError("%s has no predecessor" % self)
        return pred

    # -- order and arithmetic -----------------------------------------

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, Ordinal):
            return NotImplemented
        return self.terms == other.terms

    def __lt__(self, other):
        if not isinstance(other, Ordinal):
            return NotImplemented
        for (e1, c1), (e2, c2) in zip(self.terms, other.terms):
            if e1 != e2:
                return e1 < e2
            if c1 != c2:
                return c1 < c2
        return len(self.terms) < len(other.terms)

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash(self.terms)
            object.__setattr__(self, "_hash", h)
        return h

    def __add__(self, other: "Ordinal | int") -> "Ordinal":
        if isinstance(other, int):
            other = Ordinal(other)
        if not isinstance(other, Ordinal):
            return NotImplemented
        if not other.terms:
            return self
        if not self.terms:
            return other
        lead = other.terms[0][0]
        kept = [t for t in self.terms if t[0] > lead]
        if len(kept) < len(self.terms) and self.terms[len(kept)][0] == lead:
            merged = (lead, self.terms[len(kept)][1] + other.terms[0][1])
            return Ordinal._from_terms(tuple(kept) + (merged,) + other.terms[1:])
        return Ordinal._from_terms(tuple(kept) + other.terms)

    def __radd__(self, other):
        if isinstance(other, int):
            return Ordinal(other) + self
        return NotImplemented

    # -- text form ----------------------------------------------------

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for exp, coeff in self.terms:
            if exp.is_zero():
                parts.append(str(coeff))
                continue
            if exp == _ONE:
                s = "w"
            elif exp.is_finite():
                s = "w^%d" % exp.finite_value()
            else:
                s = "w^(%s)" % exp
            if coeff != 1:
                s += "*%d" % coeff
            parts.append(s)
        return "+".join(parts)

    def __repr__(self):
        return "Ordinal(%s)" % self


def ord_cmp(a: Ordinal, b: Ordinal) -> int:
    """-1, 0 or 1 for a < b, a = b, a > b."""
    if a == b:
        return 0
    return -1 if a < b else 1


# Sentinel zero used inside term tuples; created without going through
# __init__ to break the recursion Ordinal(0) -> terms containing Ordinal(0).
_ZERO_SENTINEL = Ordinal.__new__(Ordinal)
object.__setattr__(_ZERO_SENTINEL, "terms", ())
object.__setattr__(_ZERO_SENTINEL, "_hash", None)

ZERO = _ZERO_SENTINEL
_ONE = Ordinal(1)
ONE = _ONE
OMEGA = Ordinal.omega()


def parse_ordinal(text: str) -> Ordinal:
    """Parse a CNF literal in `w` notation, e.g. ``w^2*3+w+4``."""
    s = text.replace(" ", "")
    if not s:
        raise OrdinalParseError("empty ordinal literal")
    value, pos = _parse_sum(s, 0)
    if pos != len(s):
        raise OrdinalParseError("trailing input at %d in %r" % (pos, text))
    return value


def _parse_sum(s: str, pos: int) -> Tuple[Ordinal, int]:
    total, pos = _parse_monomial(s, pos)
    while pos < len(s) and s[pos] == "+":
        term, pos = _parse_monomial(s, pos + 1)
        combined = total + term
        # In a normal-form literal each new term has a strictly smaller
        # exponent, so adding it must leave the earlier terms untouched.
        if combined != total and combined.terms[: len(total.terms)] != total.terms:
            raise OrdinalParseError("terms not in Cantor normal form order at %d" % pos)
        total = combined
    return total, pos


def _parse_monomial(s: str, pos: int) -> Tuple[Ordinal, int]:
    if pos >= len(s):
        raise OrdinalParseError("unexpected end of ordinal literal")
    if s[pos].isdigit():
        n, pos = _parse_int(s, pos)
        return Ordinal(n), pos
    if s[pos] != "w":
        raise OrdinalParseError("expected 'w' or digit at %d" % pos)
    pos += 1
    exponent = _ONE
    if pos < len(s) and s[pos] == "^":
        pos += 1
        if pos < len(s) and s[pos] == "(":
            exponent, pos = _parse_sum(s, pos + 1)
            if pos >= len(s) or s[pos] != ")":
                raise OrdinalParseError("unclosed '(' in exponent")
            pos += 1
        elif pos < len(s) and s[pos].isdigit():
            n, pos = _parse_int(s, pos)
            exponent = Ordinal(n)
        elif pos < len(s) and s[pos] == "w":
            exponent, pos = _parse_monomial(s, pos)
        else:
            raise OrdinalParseError("bad exponent at %d" % pos)
    coeff = 1
    if pos < len(s) and s[pos] == "*":
        coeff, pos = _parse_int(s, pos + 1)
    return Ordinal.omega(exponent, coeff), pos


def _parse_int(s: str, pos: int) -> Tuple[int, int]:
    start = pos
    while pos < len(s) and s[pos].isdigit():
        pos += 1
    if start == pos:
        raise OrdinalParseError("expected integer at %d" % start)
    return int(s[start:pos]), pos


def default_limit_cap(level: Ordinal, max_coord: int) -> Ordinal:
    """Default coordinate cap when sampling at a limit level: the level's
    CNF with the last coefficient decremented, plus max_coord copies of each
    exponent block strictly below the last one.  Always below ``level`` and
    touching every exponent block of it."""
    if not level.is_limit():
        raise ValueError("cap is defined for limit levels")
    terms = list(level.terms)
    e, c = terms[-1]
    dec = ZERO
    for ee, cc in terms[:-1]:
        dec = dec + Ordinal.omega(ee, cc)
    if c > 1:
        dec = dec + Ordinal.omega(e, c - 1)
    tail = ZERO
    if e.is_finite():
        for k in range(e.finite_value() - 1, -1, -1):
            tail = tail + Ordinal.omega(Ordinal(k), max_coord)
    else:
        tail = Ordinal(max_coord)
    return dec + tail


def ordinals_below(cap: Ordinal, strict_bound: Ordinal) -> Iterator[Ordinal]:
    """Enumerate the ordinals b with b <= cap and b < strict_bound whose CNF
    exponents occur in cap's CNF (0 included), in increasing order.

    This is the deterministic coordinate pool used when sampling elements at
    limit levels.
    """
    exps = sorted({e for e, _ in cap.terms} | {ZERO}, reverse=True)
    maxc = {e: c for e, c in cap.terms}
    candidates = [ZERO]
    for e in exps:
        top = maxc.get(e, 0)
        new = []
        for base in candidates:
            for c in range(0, top + 1):
                new.append(base + Ordinal.omega(e, c) if c else base)
        candidates = new
    seen = set()
    out = []
    for o in candidates:
        if o <= cap and o < strict_bound and o not in seen:
            seen.add(o)
            out.append(o)
    out.sort()
    return iter(out)
