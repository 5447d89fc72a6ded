"""Tests for the Frobenius-twisted level-one algebra over F_p(x)."""

import random

import pytest

from loewy.algebra import Algebra, dimension_sequence, random_element
from loewy.fields import Field
from loewy.ordinals import parse_ordinal as lvl
from loewy.twisted import (
    TwistedElement,
    psi_embed,
    psi_preimage,
    t_dimension_sequence,
    t_membership,
    t_one,
    t_quasi_inverse,
    t_zero,
)

F2X = Field.rational_functions(2)
F3X = Field.rational_functions(3)


def t_random(field, rng, max_coord=4):
    dev = {}
    for c in range(max_coord):
        if rng.random() < 0.4:
            dev[c] = field(rng.randrange(1, 5)) * field.parse("x") ** rng.randrange(0, 3)
    tail = field(rng.randrange(0, 4))
    dev = {c: v for c, v in dev.items() if not v.is_zero()}
    return TwistedElement(tuple(sorted(dev.items())), tail)


class TestRing:
    @pytest.mark.parametrize("field", [F2X, F3X])
    def test_ring_axioms(self, field):
        rng = random.Random(3)
        for _ in range(40):
            a, b, c = (t_random(field, rng) for _ in range(3))
            assert (a + b) + c == a + (b + c)
            assert a + b == b + a
            assert (a * b) * c == a * (b * c)
            assert a * b == b * a
            assert a * (b + c) == a * b + a * c
            assert a + t_zero(field) == a
            assert a * t_one(field) == a
            assert a - a == t_zero(field)

    def test_known_square(self):
        # With tail x the coordinate value at an untouched slot is x^p.
        x = F2X.parse("x")
        a = TwistedElement((), x)
        assert a.tail_value() == x * x
        sq = a * a
        assert sq.tail_value() == (x * x) ** 2

    @pytest.mark.parametrize("field", [F2X, F3X])
    def test_quasi_inverse(self, field):
        rng = random.Random(7)
        for _ in range(40):
            a = t_random(field, rng)
            b = t_quasi_inverse(a)
            assert a * b * a == a
            assert b * a * b == b


class TestEmbedding:
    @pytest.mark.parametrize("field", [F2X, F3X])
    def test_psi_is_injective_ring_hom(self, field):
        alg = Algebra(field, lvl("1"))
        rng = random.Random(11)
        seen = {}
        for _ in range(40):
            x = random_element(alg, max_coord=3, seed=rng)
            y = random_element(alg, max_coord=3, seed=rng)
            assert psi_embed(x + y) == psi_embed(x) + psi_embed(y)
            assert psi_embed(x * y) == psi_embed(x) * psi_embed(y)
            img = psi_embed(x)
            assert seen.setdefault(img, x) == x
        from loewy.algebra import one

        assert psi_embed(one(alg)) == t_one(field)

    @pytest.mark.parametrize("field", [F2X, F3X])
    def test_preimage_round_trip(self, field):
        alg = Algebra(field, lvl("1"))
        rng = random.Random(13)
        for _ in range(40):
            x = random_element(alg, max_coord=3, seed=rng)
            assert psi_preimage(psi_embed(x)) == x

    def test_membership_witnesses(self):
        alg = Algebra(F2X, lvl("1"))
        x = F2X.parse("x")
        from loewy.algebra import embed_scalar

        # x is not a square in F_2(x); (x+1)^2 is.
        assert not t_membership(embed_scalar(alg, x))
        assert t_membership(embed_scalar(alg, (x + F2X.one()) ** 2))

    def test_preimage_absent_outside_image(self):
        # A coordinate value of x cannot arise: image coordinates are p-th powers.
        assert psi_preimage(TwistedElement(((0, F2X.parse("x")),), F2X.zero())) is None


class TestDimension:
    def test_factor_equivalent_with_untwisted(self):
        from loewy.algebra import factor_equivalent

        for field in (F2X, F3X):
            assert factor_equivalent(
                t_dimension_sequence(field), dimension_sequence(Algebra(field, lvl("1")))
            )
