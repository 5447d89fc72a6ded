"""Element expression language: parsing, printing, evaluation.

Grammar (precedence: unary minus binds tightest, then *, then +):

    elem  := term ("+" term)*
    term  := factor ("*" factor)*
    factor:= "-" factor | atom
    atom  := scalar | "one" | "zero" | "e[" coord "]" | "b(" idxpath ")"
           | "{" (coord ":" elem),* ";" scalar "}" | "(" elem ")"

Scalars are field literals; over a rational function field they are
written atomically as "(num)/(den)".  Coordinates are naturals or ordinal
literals in w-notation.
"""

from __future__ import annotations

import re
from typing import List, Optional, Tuple, Union

from .fields import Field, FieldValue
from .ordinals import Ordinal, parse_ordinal
from .algebra import (Algebra, AnyElement, Coord, Element, component_level,
                      embed_scalar, inject, one, zero)
from .basis import BasisIndex, basis_element, parse_index


class ParseError(ValueError):
    def __init__(self, message: str, pos: int):
        super().__init__("%s (at position %d)" % (message, pos))
        self.pos = pos


class ExprTypeError(ValueError):
    pass


# -- AST ----------------------------------------------------------------------


class Expr:
    __slots__ = ()


class Scalar(Expr):
    __slots__ = ("value",)

    def __init__(self, value: FieldValue):
        self.value = value

    def __eq__(self, other):
        return isinstance(other, Scalar) and self.value == other.value

    def __hash__(self):
        return hash(("s", self.value))


class One(Expr):
    __slots__ = ()

    def __eq__(self, other):
        return isinstance(other, One)

    def __hash__(self):
        return hash("one")


class ZeroExpr(Expr):
    __slots__ = ()

    def __eq__(self, other):
        return isinstance(other, ZeroExpr)

    def __hash__(self):
        return hash("zero")


class Idem(Expr):
    """e[coord]: the socle idempotent at a coordinate."""
    __slots__ = ("coord",)

    def __init__(self, coord: Coord):
        self.coord = coord

    def __eq__(self, other):
        return isinstance(other, Idem) and self.coord == other.coord

    def __hash__(self):
        return hash(("e", self.coord))


class BasisRef(Expr):
    __slots__ = ("path",)

    def __init__(self, path: str):
        self.path = path

    def __eq__(self, other):
        return isinstance(other, BasisRef) and self.path == other.path

    def __hash__(self):
        return hash(("b", self.path))


class Literal(Expr):
    """{c1: elem1, c2: elem2; scalar}"""
    __slots__ = ("entries", "const")

    def __init__(self, entries: Tuple[Tuple[Coord, Expr], ...], const: FieldValue):
        self.entries = entries
        self.const = const

    def __eq__(self, other):
        return (isinstance(other, Literal) and self.entries == other.entries
                and self.const == other.const)

    def __hash__(self):
        return hash(("lit", self.entries, self.const))


class Add(Expr):
    __slots__ = ("left", "right")

    def __init__(self, left: Expr, right: Expr):
        self.left = left
        self.right = right

    def __eq__(self, other):
        return (isinstance(other, Add) and self.left == other.left
                and self.right == other.right)

    def __hash__(self):
        return hash(("+", self.left, self.right))


class Mul(Expr):
    __slots__ = ("left", "right")

    def __init__(self, left: Expr, right: Expr):
        self.left = left
        self.right = right

    def __eq__(self, other):
        return (isinstance(other, Mul) and self.left == other.left
                and self.right == other.right)

    def __hash__(self):
        return hash(("*", self.left, self.right))


class Neg(Expr):
    __slots__ = ("child",)

    def __init__(self, child: Expr):
        self.child = child

    def __eq__(self, other):
        return isinstance(other, Neg) and self.child == other.child

    def __hash__(self):
        return hash(("-", self.child))


# -- tokenizer / parser ---------------------------------------------------------

_RATFUNC_SCALAR = re.compile(r"\(([^()]*)\)\s*/\s*\(([^()]*)\)")
_RATIONAL = re.compile(r"-?\d+(/\d+)?")
_NATURAL = re.compile(r"\d+")
_ORDINAL = re.compile(r"(w(\^\(?[\w^*+]+\)?)?(\*\d+)?)(\+(w(\^\(?[\w^*+]+\)?)?(\*\d+)?|\d+))*")
_IDXPATH = re.compile(r"[A-Za-z0-9.^*+]+")


class Parser:
    def __init__(self, src: str, field: Field):
        self.src = src
        self.field = field
        self.pos = 0

    def error(self, message: str) -> ParseError:
        return ParseError(message, self.pos)

    def skip_ws(self):
        while self.pos < len(self.src) and self.src[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.src[self.pos] if self.pos < len(self.src) else ""

    def eat(self, text: str):
        self.skip_ws()
        if not self.src.startswith(text, self.pos):
            raise self.error("expected %r" % text)
        self.pos += len(text)

    def try_eat(self, text: str) -> bool:
        self.skip_ws()
        if self.src.startswith(text, self.pos):
            self.pos += len(text)
            return True
        return False

    def match(self, pattern: re.Pattern) -> Optional[str]:
        self.skip_ws()
        m = pattern.match(self.src, self.pos)
        if m is None or not m.group(0):
            return None
        self.pos = m.end()
        return m.group(0)

    # grammar ------------------------------------------------------------

    def parse(self) -> Expr:
        e = self.elem()
        self.skip_ws()
        if self.pos != len(self.src):
            raise self.error("trailing input")
        return e

    def elem(self) -> Expr:
        e = self.term()
        while self.try_eat("+"):
            e = Add(e, self.term())
        return e

    def term(self) -> Expr:
        e = self.factor()
        while self.try_eat("*"):
            e = Mul(e, self.factor())
        return e

    def factor(self) -> Expr:
        self.skip_ws()
        # a leading minus immediately followed by a digit is a negative
        # scalar literal, not a negation
        if (self.peek() == "-"
                and not (self.pos + 1 < len(self.src)
                         and self.src[self.pos + 1].isdigit())):
            self.eat("-")
            return Neg(self.factor())
        return self.atom()

    def atom(self) -> Expr:
        c = self.peek()
        if c == "":
            raise self.error("unexpected end of input")
        if self.try_eat("one"):
            return One()
        if self.try_eat("zero"):
            return ZeroExpr()
        if self.try_eat("e["):
            coord = self.coord()
            self.eat("]")
            return Idem(coord)
        if self.try_eat("b("):
            path = self.match(_IDXPATH)
            if path is None:
                raise self.error("expected an index path")
            self.eat(")")
            return BasisRef(path)
        if c == "{":
            return self.literal()
        if c == "(":
            if self.field.kind == Field.RATFUNC:
                s = self.match(_RATFUNC_SCALAR)
                if s is not None:
                    return Scalar(self.scalar_value(s))
            self.eat("(")
            e = self.elem()
            self.eat(")")
            return e
        return Scalar(self.scalar())

    def literal(self) -> Expr:
        self.eat("{")
        entries: List[Tuple[Coord, Expr]] = []
        while self.peek() != ";":
            coord = self.coord()
            self.eat(":")
            entries.append((coord, self.elem()))
            if not self.try_eat(","):
                break
        self.eat(";")
        const = self.scalar()
        self.eat("}")
        return Literal(tuple(entries), const)

    def coord(self) -> Coord:
        self.skip_ws()
        if self.peek() == "w":
            text = self.match(_ORDINAL)
            if text is None:
                raise self.error("expected an ordinal literal")
            try:
                return parse_ordinal(text)
            except ValueError as exc:
                raise self.error(str(exc))
        text = self.match(_NATURAL)
        if text is None:
            raise self.error("expected a coordinate")
        return int(text)

    def scalar(self) -> FieldValue:
        if self.field.kind == Field.RATFUNC:
            text = self.match(_RATFUNC_SCALAR)
            if text is None:
                raise self.error("expected a scalar literal (num)/(den)")
        else:
            text = self.match(_RATIONAL)
            if text is None:
                raise self.error("expected a scalar literal")
        return self.scalar_value(text)

    def scalar_value(self, text: str) -> FieldValue:
        try:
            return self.field.parse(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise self.error("bad scalar %r: %s" % (text, exc))


def parse(src: str, field: Field) -> Expr:
    return Parser(src, field).parse()


# -- printing -------------------------------------------------------------------

_PREC = {Add: 1, Mul: 2, Neg: 3}


def _prec(e: Expr) -> int:
    return _PREC.get(type(e), 4)


def print_expr(e: Expr) -> str:
    if isinstance(e, Scalar):
        return e.value.literal()
    if isinstance(e, One):
        return "one"
    if isinstance(e, ZeroExpr):
        return "zero"
    if isinstance(e, Idem):
        return "e[%s]" % e.coord
    if isinstance(e, BasisRef):
        return "b(%s)" % e.path
    if isinstance(e, Literal):
        entries = ", ".join("%s: %s" % (c, print_expr(v)) for c, v in e.entries)
        return "{%s; %s}" % (entries, e.const.literal())
    if isinstance(e, Neg):
        return "-(%s)" % print_expr(e.child)
    if isinstance(e, (Add, Mul)):
        op = " + " if isinstance(e, Add) else " * "
        lp = _wrap(e.left, _prec(e), right=False)
        rp = _wrap(e.right, _prec(e), right=True)
        return lp + op + rp
    raise TypeError("unknown expression node %r" % e)


def _wrap(child: Expr, parent_prec: int, right: bool) -> str:
    text = print_expr(child)
    cp = _prec(child)
    if cp < parent_prec or (right and cp == parent_prec):
        return "(" + text + ")"
    return text


# -- evaluation -------------------------------------------------------------------


def evaluate(e: Expr, alg: Algebra) -> AnyElement:
    if isinstance(e, Scalar):
        return embed_scalar(alg, e.value)
    if isinstance(e, One):
        return one(alg)
    if isinstance(e, ZeroExpr):
        return zero(alg)
    if isinstance(e, Idem):
        return _idem(alg, e.coord)
    if isinstance(e, BasisRef):
        idx = parse_index(e.path, alg.level, alg.width)
        return basis_element(alg, idx)
    if isinstance(e, Literal):
        return _literal(e, alg)
    if isinstance(e, Neg):
        return -evaluate(e.child, alg)
    if isinstance(e, Add):
        return evaluate(e.left, alg) + evaluate(e.right, alg)
    if isinstance(e, Mul):
        # scalar * elem acts as scaling; elem * elem is the ring product
        lv = evaluate(e.left, alg)
        rv = evaluate(e.right, alg)
        if isinstance(e.left, Scalar):
            return rv.scale(e.left.value)
        if isinstance(e.right, Scalar):
            return lv.scale(e.right.value)
        return lv * rv
    raise TypeError("unknown expression node %r" % e)


def _idem(alg: Algebra, coord: Coord):
    from .basis import socle_idempotent
    if alg.width != 1:
        raise ExprTypeError("e[...] requires width 1")
    if alg.level.is_zero():
        raise ExprTypeError("e[%s] undefined at level 0" % coord)
    coord = _check_coord(alg.level, coord)
    comp = Algebra(alg.field, component_level(alg.level, coord), 1)
    return inject(alg, coord, socle_idempotent(comp))


def _check_coord(level: Ordinal, coord: Coord) -> Coord:
    if level.is_successor():
        if isinstance(coord, Ordinal):
            if not coord.is_finite():
                raise ExprTypeError(
                    "coordinate %s is not a natural (level %s is a successor)"
                    % (coord, level))
            coord = coord.finite_value()
        return coord
    if isinstance(coord, int):
        coord = Ordinal(coord)
    if not coord < level:
        raise ExprTypeError("coordinate %s out of range at level %s"
                            % (coord, level))
    return coord


def _literal(e: Literal, alg: Algebra):
    if alg.width != 1:
        raise ExprTypeError("literal elements require width 1")
    if alg.level.is_zero():
        if e.entries:
            raise ExprTypeError("level 0 admits no deviations")
        return Element(alg.level, (), e.const)
    acc = embed_scalar(alg, e.const)
    for coord, sub in e.entries:
        coord = _check_coord(alg.level, coord)
        comp = Algebra(alg.field, component_level(alg.level, coord), 1)
        val = evaluate(sub, comp)
        if not val.is_zero():
            acc = acc + inject(alg, coord, val)
    return acc
