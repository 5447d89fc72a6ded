"""Tests for the expression parser, printer and evaluator."""

import random

import pytest

from loewy.acceptance import random_ast
from loewy.algebra import Algebra, embed_scalar, one, zero
from loewy.expr import (
    Add,
    ExprTypeError,
    Idem,
    Mul,
    Neg,
    One,
    ParseError,
    Scalar,
    ZeroExpr,
    evaluate,
    parse,
    print_expr,
)
from loewy.fields import Field
from loewy.ordinals import parse_ordinal as lvl

Q = Field.rationals()
F5 = Field.prime(5)
F2X = Field.rational_functions(2)


class TestParsing:
    def test_atoms(self):
        assert parse("one", Q) == One()
        assert parse("zero", Q) == ZeroExpr()
        assert parse("3/2", Q) == Scalar(Q("3/2"))
        assert parse("-4", Q) == Scalar(Q(-4))
        assert parse("e[2]", Q) == Idem(2)

    def test_ordinal_coordinates(self):
        assert parse("e[w+1]", Q) == Idem(lvl("w+1"))

    def test_precedence(self):
        assert parse("one + one * e[0]", Q) == Add(One(), Mul(One(), Idem(0)))
        assert parse("(one + one) * e[0]", Q) == Mul(Add(One(), One()), Idem(0))
        assert parse("-one * e[0]", Q) == Mul(Neg(One()), Idem(0))

    def test_ratfunc_scalars(self):
        e = parse("(x+1)/(x) * one", F2X)
        assert isinstance(e, Mul) and isinstance(e.left, Scalar)
        assert e.left.value == F2X.parse("(x+1)/(x)")

    def test_errors_carry_position(self):
        for src in ("", "one +", "e[", "((one)", "one ** one"):
            with pytest.raises(ParseError) as info:
                parse(src, Q)
            assert info.value.pos >= 0


class TestRoundTrip:
    @pytest.mark.parametrize("field", [Q, F5, F2X])
    def test_random_asts(self, field):
        rng = random.Random(19)
        for _ in range(100):
            ast = random_ast(field, rng)
            assert parse(print_expr(ast), field) == ast

    def test_neg_prints_parenthesized(self):
        assert print_expr(Neg(One())) == "-(one)"
        assert parse("-(one)", Q) == Neg(One())


class TestEvaluation:
    def test_basic_values(self):
        alg = Algebra(Q, lvl("2"))
        assert evaluate(parse("one", Q), alg) == one(alg)
        assert evaluate(parse("zero", Q), alg) == zero(alg)
        assert evaluate(parse("2 * one + one", Q), alg) == embed_scalar(alg, Q(3))

    def test_idempotent_evaluates_idempotently(self):
        alg = Algebra(Q, lvl("w"))
        x = evaluate(parse("e[3]", Q), alg)
        assert x * x == x

    def test_out_of_range_coordinate_rejected(self):
        alg = Algebra(Q, lvl("1"))
        with pytest.raises(ExprTypeError):
            evaluate(parse("e[w]", Q), alg)

    def test_matches_direct_arithmetic(self):
        alg = Algebra(F5, lvl("w"))
        lhs = evaluate(parse("(one + e[0]) * (one + e[1])", F5), alg)
        e0 = evaluate(parse("e[0]", F5), alg)
        e1 = evaluate(parse("e[1]", F5), alg)
        assert lhs == (one(alg) + e0) * (one(alg) + e1)
