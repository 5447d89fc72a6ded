"""Elements and ring operations of the level-indexed algebras B(level, width).

An element of the width-1 algebra at level 0 is a scalar.  At a successor
level b+1 it is a finitely supported family of level-b elements, one per
natural coordinate, over a constant scalar tail; at a limit level a the
coordinates are the ordinals below a and the component at coordinate b
lives at level b.  Only the deviations from the constant tail are stored,
which makes the representation canonical and equality structural.
"""

from __future__ import annotations

import json
import random
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from .fields import Field, FieldValue, FieldMismatch
from .ordinals import Ordinal, ZERO, ONE, parse_ordinal, ordinals_below, default_limit_cap


class LevelMismatch(ValueError):
    pass


class BadOrdinals(ValueError):
    pass


Coord = Union[int, Ordinal]


class Algebra:
    """Descriptor (field, level, width) of an algebra B(level, width)."""

    __slots__ = ("field", "level", "width")

    def __init__(self, field: Field, level: Ordinal, width: int = 1):
        if width < 1:
            raise ValueError("width must be >= 1")
        self.field = field
        self.level = level
        self.width = width

    def component(self) -> "Algebra":
        """The width-1 factor algebra of a width > 1 descriptor."""
        return Algebra(self.field, self.level, 1)

    def __eq__(self, other):
        return (isinstance(other, Algebra)
                and (self.field, self.level, self.width)
                == (other.field, other.level, other.width))

    def __hash__(self):
        return hash((self.field, self.level, self.width))

    def __repr__(self):
        return "Algebra(%s, level=%s, width=%d)" % (self.field, self.level, self.width)


_PRED_CACHE: Dict[Ordinal, Ordinal] = {}


def component_level(level: Ordinal, coord: Coord) -> Ordinal:
    """Level of the component algebra sitting at ``coord``."""
    if level.is_zero():
        raise LevelMismatch("level-0 elements have no coordinates")
    if level.is_successor():
        if not isinstance(coord, int) or coord < 0:
            raise LevelMismatch("successor-level coordinates are naturals, got %r" % (coord,))
        pred = _PRED_CACHE.get(level)
        if pred is None:
            pred = _PRED_CACHE[level] = level.predecessor()
        return pred
    if not isinstance(coord, Ordinal) or not coord < level:
        raise LevelMismatch("limit-level coordinate %r out of range for %s" % (coord, level))
    return coord


class Element:
    """One element of a width-1 algebra at a fixed level.

    ``dev`` is a sorted tuple of (coordinate, nonzero component element)
    pairs; ``const`` is the scalar tail.  Level-0 elements have no
    deviations and denote the bare scalar.
    """

    __slots__ = ("level", "dev", "const")

    def __init__(self, level: Ordinal, dev: Tuple[Tuple[Coord, "Element"], ...],
                 const: FieldValue):
        self.level = level
        self.dev = dev
        self.const = const

    # -- inspection ----------------------------------------------------

    @property
    def field(self) -> Field:
        return self.const.field

    def is_zero(self) -> bool:
        return not self.dev and self.const.is_zero()

    def deviation(self, coord: Coord) -> Optional["Element"]:
        for c, v in self.dev:
            if c == coord:
                return v
        return None

    def support(self) -> Tuple[Coord, ...]:
        return tuple(c for c, _ in self.dev)

    def component_value(self, coord: Coord) -> "Element":
        """Actual value at ``coord``: deviation plus constant tail."""
        clevel = component_level(self.level, coord)
        base = scalar_element(clevel, self.const)
        d = self.deviation(coord)
        return base if d is None else d + base

    def __eq__(self, other):
        return (isinstance(other, Element)
                and self.level == other.level
                and self.const == other.const
                and self.dev == other.dev)

    def __hash__(self):
        return hash((self.level, self.dev, self.const))

    # -- ring operations -------------------------------------------------

    def _check(self, other: "Element"):
        if (other.__class__ is Element and self.level is other.level
                and self.const.field is other.const.field):
            return
        if not isinstance(other, Element):
            raise TypeError("expected Element, got %r" % (other,))
        if other.level != self.level:
            raise LevelMismatch("levels %s and %s" % (self.level, other.level))
        if other.const.field != self.const.field:
            raise FieldMismatch("mixed fields %s and %s" % (self.const.field, other.const.field))

    def __add__(self, other: "Element") -> "Element":
        self._check(other)
        if not other.dev:
            return Element(self.level, self.dev, self.const + other.const)
        if not self.dev:
            return Element(self.level, other.dev, self.const + other.const)
        merged: Dict[Coord, Element] = dict(self.dev)
        for c, v in other.dev:
            cur = merged.get(c)
            s = v if cur is None else cur + v
            if s.is_zero():
                merged.pop(c, None)
            else:
                merged[c] = s
        return Element(self.level, _sorted_dev(merged), self.const + other.const)

    def __neg__(self) -> "Element":
        return Element(self.level, tuple((c, -v) for c, v in self.dev), -self.const)

    def __sub__(self, other: "Element") -> "Element":
        return self + (-other)

    def scale(self, k: FieldValue) -> "Element":
        """Multiply by the scalar k."""
        if k.field != self.const.field:
            raise FieldMismatch("scalar of %s on element over %s" % (k.field, self.const.field))
        if k.is_zero():
            return zero_at(self.level, self.const.field)
        if k.is_one():
            return self
        return Element(self.level, tuple((c, v.scale(k)) for c, v in self.dev),
                       self.const * k)

    def __mul__(self, other: "Element") -> "Element":
        self._check(other)
        if not other.dev:
            return self.scale(other.const)
        if not self.dev:
            return other.scale(self.const)
        const = self.const * other.const
        out: Dict[Coord, Element] = {}
        mine = dict(self.dev)
        sc, oc = self.const, other.const
        sz, oz = sc.is_zero(), oc.is_zero()
        for c, v in other.dev:
            d = mine.pop(c, None)
            if d is None:
                if sz:
                    continue
                prod = v.scale(sc)
            else:
                prod = d * v
                if not oz:
                    prod = prod + d.scale(oc)
                if not sz:
                    prod = prod + v.scale(sc)
            if not prod.is_zero():
                out[c] = prod
        if not oz:
            for c, d in mine.items():
                prod = d.scale(oc)
                if not prod.is_zero():
                    out[c] = prod
        return Element(self.level, _sorted_dev(out), const)

    def __repr__(self):
        return "Element(%s)" % json.dumps(element_to_json(self))


def _sorted_dev(mapping: Dict[Coord, Element]) -> Tuple[Tuple[Coord, Element], ...]:
    if len(mapping) <= 1:
        return tuple(mapping.items())
    return tuple(sorted(mapping.items(), key=lambda cv: cv[0]))


def scalar_element(level: Ordinal, k: FieldValue) -> Element:
    """k times the unit at the given level (no deviations)."""
    return Element(level, (), k)


def zero_at(level: Ordinal, field: Field) -> Element:
    return Element(level, (), field.zero())


def one_at(level: Ordinal, field: Field) -> Element:
    return Element(level, (), field.one())


def zero(alg: Algebra):
    return _lift(alg, lambda: zero_at(alg.level, alg.field))


def one(alg: Algebra):
    return _lift(alg, lambda: one_at(alg.level, alg.field))


def embed_scalar(alg: Algebra, k) -> Union[Element, "TupleElement"]:
    k = alg.field(k)
    return _lift(alg, lambda: scalar_element(alg.level, k))


def _lift(alg: Algebra, make):
    if alg.width == 1:
        return make()
    return TupleElement(tuple(make() for _ in range(alg.width)))


def inject(alg: Algebra, coord: Coord, x: Element) -> Element:
    """Coordinate embedding: the element with value x at ``coord`` and zero
    constant tail."""
    clevel = component_level(alg.level, coord)
    if x.level != clevel:
        raise LevelMismatch("component at %r has level %s, got level %s"
                            % (coord, clevel, x.level))
    if x.is_zero():
        return zero_at(alg.level, alg.field)
    return Element(alg.level, ((coord, x),), alg.field.zero())


# -- regularity ---------------------------------------------------------


def quasi_inverse(x: Element) -> Element:
    """The reflexive quasi-inverse s of x: x*s*x = x and s*x*s = s.

    Computed coordinatewise: scalars invert (0 maps to 0) and each
    component value is replaced by its own reflexive quasi-inverse.
    """
    f = x.const.field
    d = f.zero() if x.const.is_zero() else x.const.inv()
    if not x.dev:
        return Element(x.level, (), d)
    out: Dict[Coord, Element] = {}
    for c, v in x.dev:
        clevel = component_level(x.level, c)
        value = v + scalar_element(clevel, x.const)
        w = quasi_inverse(value) - scalar_element(clevel, d)
        if not w.is_zero():
            out[c] = w
    return Element(x.level, _sorted_dev(out), d)


def unit_idempotent_factorization(x: Element) -> Tuple[Element, Element, Element]:
    """Return (u, e, v) with e = e*e, u*v = 1 and x = u*e."""
    s = quasi_inverse(x)
    e = x * s
    unit1 = one_at(x.level, x.const.field)
    u = x + (unit1 - e)
    v = s + (unit1 - e)
    return u, e, v


def ideal_idempotent(alg: Algebra, generators: Sequence[Element]) -> Element:
    """The idempotent generating the same ideal as ``generators``.

    Joins the idempotents x*qi(x) with e v f = e + f - e*f.
    """
    e = zero_at(alg.level, alg.field)
    for x in generators:
        f = x * quasi_inverse(x)
        e = e + f - e * f
    return e


# -- Loewy theory ---------------------------------------------------------


def loewy_depth(x: Element) -> Optional[Ordinal]:
    """The unique d with x in S_{d+1} minus S_d; None for x = 0."""
    if x.is_zero():
        return None
    if not x.const.is_zero():
        return x.level
    best: Optional[Ordinal] = None
    for _, v in x.dev:
        d = loewy_depth(v)
        if d is not None and (best is None or best < d):
            best = d
    return best


class DimensionSequence:
    """Symbolic layer invariant of B(level, width): aleph_0 simple
    components with endomorphism field K at each layer below the top, and
    ``top_dim`` copies of K on top."""

    __slots__ = ("level", "field", "top_dim")

    def __init__(self, level: Ordinal, field: Field, top_dim: int):
        if top_dim < 1:
            raise ValueError("top dimension must be positive")
        self.level = level
        self.field = field
        self.top_dim = top_dim

    def lower_layer_profile(self) -> str:
        return "aleph_0 components of rank 1 over %s at every layer below %s" % (
            self.field, self.level)

    def __eq__(self, other):
        return (isinstance(other, DimensionSequence)
                and (self.level, self.field, self.top_dim)
                == (other.level, other.field, other.top_dim))

    def __hash__(self):
        return hash((self.level, self.field, self.top_dim))

    def __repr__(self):
        return "DimensionSequence(level=%s, field=%s, top_dim=%d)" % (
            self.level, self.field, self.top_dim)

    def to_json(self) -> dict:
        return {"level": str(self.level), "field": str(self.field),
                "top_dim": self.top_dim,
                "lower_layers": self.lower_layer_profile()}


def dimension_sequence(alg: Algebra) -> DimensionSequence:
    return DimensionSequence(alg.level, alg.field, alg.width)


def factor_equivalent(d1: DimensionSequence, d2: DimensionSequence) -> bool:
    """Same Loewy length, per-layer cardinalities, ranks and fields. In this
    family the lower layers are forced, so only level, field and top
    dimension matter."""
    return d1 == d2


# -- width > 1 -----------------------------------------------------------


class TupleElement:
    """An element of a width-n algebra: an n-tuple of width-1 elements."""

    __slots__ = ("components",)

    def __init__(self, components: Sequence[Element]):
        components = tuple(components)
        if not components:
            raise ValueError("empty tuple element")
        lvl = components[0].level
        for c in components[1:]:
            if c.level != lvl:
                raise LevelMismatch("mixed levels in tuple element")
        self.components = components

    @property
    def level(self) -> Ordinal:
        return self.components[0].level

    @property
    def width(self) -> int:
        return len(self.components)

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.components)

    def _zip(self, other, op):
        if not isinstance(other, TupleElement) or other.width != self.width:
            raise LevelMismatch("tuple widths differ")
        return TupleElement(tuple(op(a, b) for a, b in zip(self.components, other.components)))

    def __add__(self, other):
        return self._zip(other, lambda a, b: a + b)

    def __sub__(self, other):
        return self._zip(other, lambda a, b: a - b)

    def __mul__(self, other):
        return self._zip(other, lambda a, b: a * b)

    def __neg__(self):
        return TupleElement(tuple(-c for c in self.components))

    def scale(self, k: FieldValue):
        return TupleElement(tuple(c.scale(k) for c in self.components))

    def __eq__(self, other):
        return isinstance(other, TupleElement) and self.components == other.components

    def __hash__(self):
        return hash(self.components)

    def __repr__(self):
        return "TupleElement(%r)" % (self.components,)


AnyElement = Union[Element, TupleElement]


def split_components(x: AnyElement) -> Tuple[Element, ...]:
    if isinstance(x, TupleElement):
        return x.components
    return (x,)


def merge_components(components: Sequence[Element]) -> AnyElement:
    if len(components) == 1:
        return components[0]
    return TupleElement(components)


def tuple_quasi_inverse(x: TupleElement) -> TupleElement:
    return TupleElement(tuple(quasi_inverse(c) for c in x.components))


def tuple_loewy_depth(x: AnyElement) -> Optional[Ordinal]:
    if isinstance(x, Element):
        return loewy_depth(x)
    best = None
    for c in x.components:
        d = loewy_depth(c)
        if d is not None and (best is None or best < d):
            best = d
    return best


# -- component peeling and the swallow isomorphisms -----------------------


def peel_component(x: Element, coord: Coord) -> Tuple[Element, Element]:
    """Split off the component at ``coord``: returns (value there, rest).

    At successor levels the remaining coordinates above ``coord`` shift down
    so that the rest lives in the same algebra; at limit levels the rest
    keeps its coordinates (re-indexing is the business of the limit swallow
    isomorphism)."""
    comp = x.component_value(coord)
    if x.level.is_successor():
        rest_dev = {}
        for c, v in x.dev:
            if c == coord:
                continue
            rest_dev[c - 1 if c > coord else c] = v
    else:
        rest_dev = {c: v for c, v in x.dev if c != coord}
    return comp, Element(x.level, _sorted_dev(rest_dev), x.const)


def swallow_succ_forward(x: Element, y: Element) -> Element:
    """Ring isomorphism B(b,1) x B(b+1,1) -> B(b+1,1): x becomes the new
    coordinate-0 component and the old coordinates shift up by one."""
    if not y.level.is_successor():
        raise BadOrdinals("second argument must live at a successor level")
    beta = y.level.predecessor()
    if x.level != beta:
        raise LevelMismatch("expected level %s, got %s" % (beta, x.level))
    dev: Dict[Coord, Element] = {}
    d0 = x - scalar_element(beta, y.const)
    if not d0.is_zero():
        dev[0] = d0
    for c, v in y.dev:
        dev[c + 1] = v
    return Element(y.level, _sorted_dev(dev), y.const)


def swallow_succ_backward(z: Element) -> Tuple[Element, Element]:
    if not z.level.is_successor():
        raise BadOrdinals("argument must live at a successor level")
    beta = z.level.predecessor()
    x = z.component_value(0)
    dev = {c - 1: v for c, v in z.dev if c != 0}
    return x, Element(z.level, _sorted_dev(dev), z.const)


def swallow_limit_forward(beta: Ordinal, x: Element, y: Element) -> Element:
    """Ring isomorphism B(b,1) x B(a,1) -> B(a,1) for a limit: absorbs x
    into the coordinate b+1 component via the successor isomorphism."""
    alpha = y.level
    if not alpha.is_limit() or not beta < alpha:
        raise BadOrdinals("need beta < alpha with alpha limit")
    if x.level != beta:
        raise LevelMismatch("expected level %s, got %s" % (beta, x.level))
    target = beta + ONE
    v = y.component_value(target)
    new_value = swallow_succ_forward(x, v)
    dev = {c: w for c, w in y.dev if c != target}
    d = new_value - scalar_element(target, y.const)
    if not d.is_zero():
        dev[target] = d
    return Element(alpha, _sorted_dev(dev), y.const)


def swallow_limit_backward(beta: Ordinal, z: Element) -> Tuple[Element, Element]:
    alpha = z.level
    if not alpha.is_limit() or not beta < alpha:
        raise BadOrdinals("need beta < alpha with alpha limit")
    target = beta + ONE
    x, v = swallow_succ_backward(z.component_value(target))
    dev = {c: w for c, w in z.dev if c != target}
    d = v - scalar_element(target, z.const)
    if not d.is_zero():
        dev[target] = d
    return x, Element(alpha, _sorted_dev(dev), z.const)


def swallow_forward(beta: Ordinal, x: Element, y: Element) -> Element:
    """General swallow isomorphism B(b,1) x B(a,1) -> B(a,1), b < a,
    composed from the successor and limit cases."""
    alpha = y.level
    if not beta < alpha:
        raise BadOrdinals("need beta < alpha")
    if alpha.is_limit():
        return swallow_limit_forward(beta, x, y)
    if alpha.predecessor() == beta:
        return swallow_succ_forward(x, y)
    y0, y1 = swallow_succ_backward(y)
    return swallow_succ_forward(swallow_forward(beta, x, y0), y1)


def swallow_backward(beta: Ordinal, z: Element) -> Tuple[Element, Element]:
    alpha = z.level
    if not beta < alpha:
        raise BadOrdinals("need beta < alpha")
    if alpha.is_limit():
        return swallow_limit_backward(beta, z)
    if alpha.predecessor() == beta:
        return swallow_succ_backward(z)
    y0p, y1 = swallow_succ_backward(z)
    x, y0 = swallow_backward(beta, y0p)
    return x, swallow_succ_forward(y0, y1)


# -- deterministic sampling ------------------------------------------------


def random_element(alg: Algebra, max_coord: int = 3,
                   max_limit_coord: Optional[Ordinal] = None,
                   depth_budget: int = 2, density: float = 0.5,
                   seed: int = 0) -> AnyElement:
    """Deterministic pseudorandom element of ``alg``.

    Coordinates at successor levels run over 0..max_coord; at limit levels
    they are drawn from the pool of ordinals below the level bounded by
    ``max_limit_coord`` (see ordinals_below).  ``density`` is the chance of
    a deviation per candidate coordinate, ``depth_budget`` bounds how deep
    nested deviations may reach.  Same arguments, same element.
    """
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    if alg.width == 1:
        return _random_raw(alg.field, alg.level, max_coord, max_limit_coord,
                           depth_budget, density, rng)
    return TupleElement(tuple(
        _random_raw(alg.field, alg.level, max_coord, max_limit_coord,
                    depth_budget, density, rng)
        for _ in range(alg.width)))


def _random_raw(field, level, max_coord, max_limit_coord, budget, density, rng):
    const = _random_scalar(field, rng)
    if level.is_zero():
        return Element(level, (), const)
    dev: Dict[Coord, Element] = {}
    for c in _coordinate_pool(level, max_coord, max_limit_coord):
        if rng.random() >= density:
            continue
        clevel = component_level(level, c)
        if budget > 0:
            v = _random_raw(field, clevel, max_coord, max_limit_coord,
                            budget - 1, density, rng)
        else:
            v = Element(clevel, (), _random_scalar(field, rng))
        if not v.is_zero():
            dev[c] = v
    return Element(level, _sorted_dev(dev), const)


_POOL_CACHE: Dict[tuple, List[Coord]] = {}


def _coordinate_pool(level: Ordinal, max_coord: int,
                     max_limit_coord: Optional[Ordinal]) -> List[Coord]:
    key = (level, max_coord, max_limit_coord)
    pool = _POOL_CACHE.get(key)
    if pool is None:
        if level.is_successor():
            pool = list(range(max_coord + 1))
        else:
            cap = max_limit_coord if max_limit_coord is not None \
                else default_limit_cap(level, max_coord)
            pool = list(ordinals_below(cap, level))
        _POOL_CACHE[key] = pool
    return pool


def _random_scalar(field: Field, rng: random.Random) -> FieldValue:
    if field.kind == Field.RATIONALS:
        return _random_rational(field, rng)
    if field.kind == Field.PRIME:
        return field(rng.randrange(field.p))
    p = field.p
    num = tuple(rng.randrange(p) for _ in range(rng.randint(1, 3)))
    if rng.random() < 0.3:
        den = tuple(rng.randrange(p) for _ in range(1)) + (1,)
    else:
        den = (1,)
    try:
        return field((num, den))
    except ZeroDivisionError:
        return field.zero()


def _random_rational(field: Field, rng: random.Random) -> FieldValue:
    from fractions import Fraction
    return field(Fraction(rng.randint(-4, 4), rng.randint(1, 4)))


# -- JSON -------------------------------------------------------------------


def coord_to_json(c: Coord):
    return c if isinstance(c, int) else str(c)


def coord_from_json(level: Ordinal, data) -> Coord:
    if level.is_successor():
        return int(data)
    return parse_ordinal(str(data))


def element_to_json(x: AnyElement) -> Union[dict, list]:
    if isinstance(x, TupleElement):
        return [element_to_json(c) for c in x.components]
    return {
        "level": str(x.level),
        "dev": [[coord_to_json(c), element_to_json(v)] for c, v in x.dev],
        "const": x.const.literal(),
    }


def element_from_json(field: Field, data) -> AnyElement:
    if isinstance(data, list):
        return TupleElement(tuple(element_from_json(field, d) for d in data))
    level = parse_ordinal(data["level"])
    const = field.parse(data["const"])
    dev = {}
    for cj, vj in data.get("dev", []):
        c = coord_from_json(level, cj)
        v = element_from_json(field, vj)
        if not v.is_zero():
            dev[c] = v
    return Element(level, _sorted_dev(dev), const)
