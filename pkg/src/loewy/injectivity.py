"""Symbolic Baer-criterion checker for the modules M_lambda inside K^kappa.

Cardinals come from a fixed finite vocabulary (finite numbers, the alephs,
kappa, kappa-plus); ideals are either finitely generated by level-1
elements or symbolic direct sums of coordinate socles; homomorphisms are
either the inclusion into K^kappa or a finite table of prescribed images.
Verdicts carry verified witnesses or the exact cardinality comparison that
blocked the extension.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dfield
from typing import Dict, Optional, Sequence, Tuple, Union

from .fields import Field, FieldValue
from .ordinals import ONE
from .algebra import Algebra, Element, ideal_idempotent


class BadCardinal(ValueError):
    pass


class BadDescriptor(ValueError):
    pass


LT, EQ, GT = -1, 0, 1


class SymbolicCardinal:
    """Fin(n) < Aleph(0) < Aleph(1) < ... < Kappa < KappaPlus."""

    __slots__ = ("kind", "n")

    FIN, ALEPH, KAPPA, KAPPA_PLUS = "fin", "aleph", "kappa", "kappa+"
    _RANK = {FIN: 0, ALEPH: 1, KAPPA: 2, KAPPA_PLUS: 3}

    def __init__(self, kind: str, n: int = 0):
        if kind not in self._RANK:
            raise BadCardinal("unknown cardinal kind %r" % kind)
        if n < 0:
            raise BadCardinal("negative cardinal index")
        self.kind = kind
        self.n = n

    @classmethod
    def fin(cls, n: int) -> "SymbolicCardinal":
        return cls(cls.FIN, n)

    @classmethod
    def aleph(cls, k: int) -> "SymbolicCardinal":
        return cls(cls.ALEPH, k)

    @classmethod
    def kappa(cls) -> "SymbolicCardinal":
        return cls(cls.KAPPA)

    @classmethod
    def kappa_plus(cls) -> "SymbolicCardinal":
        return cls(cls.KAPPA_PLUS)

    def is_infinite(self) -> bool:
        return self.kind != self.FIN

    def _key(self):
        return (self._RANK[self.kind], self.n)

    def __eq__(self, other):
        return isinstance(other, SymbolicCardinal) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def literal(self) -> str:
        if self.kind == self.FIN:
            return "fin:%d" % self.n
        if self.kind == self.ALEPH:
            return "aleph:%d" % self.n
        return self.kind

    def __str__(self):
        return self.literal()

    def __repr__(self):
        return "SymbolicCardinal(%s)" % self.literal()

    @classmethod
    def parse(cls, text: str) -> "SymbolicCardinal":
        t = text.strip()
        if t == "kappa":
            return cls.kappa()
        if t == "kappa+":
            return cls.kappa_plus()
        kind, _, arg = t.partition(":")
        if kind in (cls.FIN, cls.ALEPH) and arg.isdigit():
            return cls(kind, int(arg))
        raise BadCardinal("bad cardinal literal %r" % text)


def card_cmp(a: SymbolicCardinal, b: SymbolicCardinal) -> int:
    ka, kb = a._key(), b._key()
    return LT if ka < kb else GT if ka > kb else EQ


# -- supports and module elements ---------------------------------------------


class SupportDescriptor:
    __slots__ = ("coords", "card", "tag")

    def __init__(self, coords=None, card: Optional[SymbolicCardinal] = None,
                 tag: str = ""):
        if (coords is None) == (card is None):
            raise BadDescriptor("support is explicit or symbolic, not both")
        if card is not None and not card.is_infinite():
            raise BadDescriptor("symbolic support cardinality must be infinite")
        self.coords = frozenset(coords) if coords is not None else None
        self.card = card
        self.tag = tag

    @classmethod
    def explicit(cls, coords) -> "SupportDescriptor":
        return cls(coords=coords)

    @classmethod
    def symbolic(cls, card: SymbolicCardinal, tag: str = "A") -> "SupportDescriptor":
        return cls(card=card, tag=tag)

    def is_explicit(self) -> bool:
        return self.coords is not None

    def cardinality(self) -> SymbolicCardinal:
        if self.is_explicit():
            return SymbolicCardinal.fin(len(self.coords))
        return self.card

    def __eq__(self, other):
        return (isinstance(other, SupportDescriptor)
                and (self.coords, self.card, self.tag)
                == (other.coords, other.card, other.tag))

    def __hash__(self):
        return hash((self.coords, self.card, self.tag))

    def __repr__(self):
        if self.is_explicit():
            return "SupportDescriptor(%s)" % sorted(self.coords)
        return "SupportDescriptor(%s|%s)" % (self.card, self.tag)


class MElement:
    """Element of M_lambda <= K^kappa: explicit finite support with values,
    or a purely symbolic support."""

    __slots__ = ("support", "values")

    def __init__(self, support: SupportDescriptor,
                 values: Optional[Dict[int, FieldValue]] = None):
        if support.is_explicit():
            values = values or {}
            if set(values) != set(support.coords):
                raise BadDescriptor("values must cover the explicit support")
            if any(v.is_zero() for v in values.values()):
                raise BadDescriptor("explicit values must be nonzero")
        elif values:
            raise BadDescriptor("symbolic elements carry no explicit values")
        self.support = support
        self.values = dict(values) if values else {}

    @classmethod
    def explicit(cls, values: Dict[int, FieldValue]) -> "MElement":
        return cls(SupportDescriptor.explicit(values.keys()), values)

    def __eq__(self, other):
        return (isinstance(other, MElement) and self.support == other.support
                and self.values == other.values)

    def __repr__(self):
        if self.support.is_explicit():
            return "MElement(%r)" % self.values
        return "MElement(%r)" % self.support


def m_membership(m: MElement, lam: SymbolicCardinal) -> bool:
    """m in M_lambda iff the support cardinality is strictly below lambda."""
    if not lam.is_infinite():
        raise BadCardinal("lambda must be at least aleph:0")
    return card_cmp(m.support.cardinality(), lam) == LT


def gamma() -> SymbolicCardinal:
    """The injectivity threshold of the base ring: kappa-plus."""
    return SymbolicCardinal.kappa_plus()


# -- ideals, homs, verdicts -----------------------------------------------------


class IdealDescriptor:
    __slots__ = ("generators", "index_set")

    def __init__(self, generators: Optional[Sequence[Element]] = None,
                 index_set: Optional[SupportDescriptor] = None):
        if (generators is None) == (index_set is None):
            raise BadDescriptor("ideal is finitely generated or a socle sum")
        self.generators = tuple(generators) if generators is not None else None
        self.index_set = index_set

    @classmethod
    def finitely_generated(cls, generators: Sequence[Element]) -> "IdealDescriptor":
        for g in generators:
            if g.level != ONE:
                raise BadDescriptor("generators must be level-1 elements")
        return cls(generators=generators)

    @classmethod
    def socle_direct_sum(cls, index_set: SupportDescriptor) -> "IdealDescriptor":
        return cls(index_set=index_set)

    def is_fg(self) -> bool:
        return self.generators is not None


class HomDescriptor:
    __slots__ = ("table",)

    def __init__(self, table: Optional[Dict[int, MElement]] = None):
        self.table = dict(table) if table is not None else None

    @classmethod
    def inclusion(cls) -> "HomDescriptor":
        return cls()

    @classmethod
    def finite_table(cls, table: Dict[int, MElement]) -> "HomDescriptor":
        return cls(table)

    def is_inclusion(self) -> bool:
        return self.table is None


@dataclass(frozen=True)
class Verdict:
    kind: str  # "extends" | "fails" | "invalid-hom"
    witness: Optional[MElement] = None
    required: Optional[SymbolicCardinal] = None
    allowed: Optional[SymbolicCardinal] = None
    coordinate: Optional[int] = None

    EXTENDS = "extends"
    FAILS = "fails"
    INVALID = "invalid-hom"

    def to_json(self) -> dict:
        out = {"verdict": self.kind}
        if self.kind == self.EXTENDS and self.witness is not None:
            if self.witness.support.is_explicit():
                out["witness"] = {str(c): v.literal()
                                  for c, v in sorted(self.witness.values.items())}
            else:
                out["witness"] = {"symbolic_support": self.witness.support.cardinality().literal()}
        if self.kind == self.FAILS:
            out["required"] = self.required.literal()
            out["allowed"] = "< " + self.allowed.literal()
        if self.kind == self.INVALID:
            out["coordinate"] = self.coordinate
        return out


def _validate_table(table: Dict[int, MElement]) -> Optional[int]:
    """A prescribed image m_a must satisfy m_a . e_a = m_a, i.e. have
    support inside {a}.  Returns a bad coordinate or None."""
    for a, m in table.items():
        if not m.support.is_explicit() or not set(m.support.coords) <= {a}:
            return a
    return None


def baer_extend(lam: SymbolicCardinal, ideal: IdealDescriptor,
                hom: HomDescriptor, field: Optional[Field] = None) -> Verdict:
    """Decide whether the homomorphism extends to the whole ring with image
    in M_lambda, in the sense of the Baer criterion.  ``field`` supplies
    witness values when the descriptors carry none (explicit socle sums
    under inclusion); it defaults to the rationals."""
    field = field or Field.rationals()
    if not lam.is_infinite():
        raise BadCardinal("lambda must be at least aleph:0")

    if ideal.is_fg():
        if hom.is_inclusion():
            # The inclusion of a finitely generated ideal into K^kappa only
            # stays inside the socle part when the ideal's idempotent has
            # zero tail; a unit tail drags in the whole ring, which lives in
            # M_lambda only at lambda = kappa+.
            if not ideal.generators:
                return Verdict(Verdict.EXTENDS, witness=MElement.explicit({}))
            field = ideal.generators[0].field
            e = ideal_idempotent(Algebra(field, ONE, 1), ideal.generators)
            if e.const.is_zero():
                values = {c: v.const for c, v in e.dev}
                return Verdict(Verdict.EXTENDS, witness=MElement.explicit(values))
            if lam == SymbolicCardinal.kappa_plus():
                return Verdict(Verdict.EXTENDS,
                               witness=MElement(SupportDescriptor.symbolic(
                                   SymbolicCardinal.kappa(), "1")))
            return Verdict(Verdict.INVALID, coordinate=-1)
        bad = _validate_table(hom.table)
        if bad is not None:
            return Verdict(Verdict.INVALID, coordinate=bad)
        if not ideal.generators:
            if hom.table:
                return Verdict(Verdict.INVALID, coordinate=min(hom.table))
            return Verdict(Verdict.EXTENDS, witness=MElement.explicit({}))
        field = ideal.generators[0].field
        e = ideal_idempotent(Algebra(field, ONE, 1), ideal.generators)
        support = {c for c, _ in e.dev}
        if not e.const.is_zero():
            # a unit-tail idempotent prescribes images on every coordinate;
            # a finite table can only pin finitely many, the rest are zero
            support |= set(hom.table)
        extra = set(hom.table) - support if e.const.is_zero() else set()
        if extra:
            return Verdict(Verdict.INVALID, coordinate=min(extra))
        values = {}
        for a in support:
            m = hom.table.get(a)
            if m is not None and a in m.values:
                values[a] = m.values[a]
        witness = MElement.explicit(values)
        # verify: witness . e_a = prescribed value for all listed a
        for a, m in hom.table.items():
            got = values.get(a)
            want = m.values.get(a)
            if got != want:
                return Verdict(Verdict.INVALID, coordinate=a)
        return Verdict(Verdict.EXTENDS, witness=witness)

    # socle direct sum
    index_set = ideal.index_set
    if hom.is_inclusion():
        required = index_set.cardinality()
        if card_cmp(required, lam) == LT:
            if index_set.is_explicit():
                witness = MElement.explicit({c: field.one()
                                             for c in index_set.coords})
            else:
                witness = MElement(SupportDescriptor.symbolic(required, index_set.tag))
            return Verdict(Verdict.EXTENDS, witness=witness)
        return Verdict(Verdict.FAILS, required=required, allowed=lam)
    # finite table on a socle sum: finitely many pinned coordinates plus an
    # inclusion-like remainder on the rest of the index set
    bad = _validate_table(hom.table)
    if bad is not None:
        return Verdict(Verdict.INVALID, coordinate=bad)
    if index_set.is_explicit():
        extra = set(hom.table) - set(index_set.coords)
        if extra:
            return Verdict(Verdict.INVALID, coordinate=min(extra))
        values = {}
        for a in index_set.coords:
            m = hom.table.get(a)
            if m is not None and a in m.values:
                values[a] = m.values[a]
        return Verdict(Verdict.EXTENDS, witness=MElement.explicit(values))
    # symbolic remainder keeps its cardinality: the table only changes
    # finitely many coordinates
    required = index_set.cardinality()
    if card_cmp(required, lam) == LT:
        return Verdict(Verdict.EXTENDS,
                       witness=MElement(SupportDescriptor.symbolic(
                           required, index_set.tag)))
    return Verdict(Verdict.FAILS, required=required, allowed=lam)


def strictness_witness(lam: SymbolicCardinal
                       ) -> Tuple[IdealDescriptor, HomDescriptor]:
    """An ideal/hom pair showing M_lambda is not lambda-plus-injective:
    the inclusion of a socle direct sum indexed by a set of size lambda."""
    if not lam.is_infinite() or lam == SymbolicCardinal.kappa_plus():
        raise BadCardinal("lambda must satisfy aleph:0 <= lambda <= kappa")
    return (IdealDescriptor.socle_direct_sum(
        SupportDescriptor.symbolic(lam, "A")),
        HomDescriptor.inclusion())


# -- JSON query format ------------------------------------------------------------


def query_from_json(data: dict, field: Field):
    """{"lambda": literal, "ideal": ..., "hom": ...} -> arguments for
    baer_extend.  Ideals: {"fg": [element-json, ...]} or
    {"socle_sum": cardinal-literal | [coords]}.  Homs: "inclusion" or
    {"table": {"a": {"b": value-literal, ...}}}."""
    from .algebra import element_from_json
    lam = SymbolicCardinal.parse(data["lambda"])
    ideal_data = data["ideal"]
    if "fg" in ideal_data:
        gens = [element_from_json(field, g) for g in ideal_data["fg"]]
        ideal = IdealDescriptor.finitely_generated(gens)
    elif "socle_sum" in ideal_data:
        desc = ideal_data["socle_sum"]
        if isinstance(desc, list):
            ideal = IdealDescriptor.socle_direct_sum(
                SupportDescriptor.explicit(int(c) for c in desc))
        else:
            ideal = IdealDescriptor.socle_direct_sum(
                SupportDescriptor.symbolic(SymbolicCardinal.parse(desc)))
    else:
        raise BadDescriptor("ideal must be 'fg' or 'socle_sum'")
    hom_data = data["hom"]
    if hom_data == "inclusion":
        hom = HomDescriptor.inclusion()
    elif isinstance(hom_data, dict) and "table" in hom_data:
        table = {}
        for a, row in hom_data["table"].items():
            values = {int(b): field.parse(v) for b, v in row.items()}
            table[int(a)] = MElement.explicit(values)
        hom = HomDescriptor.finite_table(table)
    else:
        raise BadDescriptor("hom must be 'inclusion' or a finite table")
    return lam, ideal, hom
