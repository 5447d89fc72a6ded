"""Tests for the element model: arithmetic, quasi-inverses, depth, swallows."""

import random

import pytest

from loewy.algebra import (
    Algebra,
    DimensionSequence,
    LevelMismatch,
    dimension_sequence,
    element_from_json,
    element_to_json,
    embed_scalar,
    factor_equivalent,
    inject,
    loewy_depth,
    merge_components,
    one,
    quasi_inverse,
    random_element,
    split_components,
    swallow_backward,
    swallow_forward,
    tuple_loewy_depth,
    tuple_quasi_inverse,
    unit_idempotent_factorization,
    zero,
)
from loewy.fields import Field, FieldMismatch
from loewy.ordinals import Ordinal, parse_ordinal

Q = Field.rationals()
F5 = Field.prime(5)
F2X = Field.rational_functions(2)


def lvl(s):
    return parse_ordinal(s)


def elem(alg, dev, const):
    """Build an element from {coord: element-or-scalar} plus a constant."""
    base = embed_scalar(alg, alg.field(const))
    for coord, sub in dev.items():
        base = base + inject(alg, coord, sub)
    return base


class TestArithmetic:
    def test_known_product(self):
        # ({0 -> 2}; 1) * ({0 -> 3}; 2) has deviation 2*3 + 2*2 + 3*1 = 13.
        a1 = Algebra(Q, lvl("1"))
        a0 = Algebra(Q, lvl("0"))
        x = elem(a1, {0: embed_scalar(a0, Q(2))}, 1)
        y = elem(a1, {0: embed_scalar(a0, Q(3))}, 2)
        z = x * y
        assert z.const == Q(2)
        assert z.deviation(0) == embed_scalar(a0, Q(13))

    def test_scalar_embedding_is_central(self):
        alg = Algebra(F5, lvl("w"))
        rng = random.Random(7)
        k = embed_scalar(alg, F5(3))
        for _ in range(20):
            x = random_element(alg, seed=rng)
            assert k * x == x * k == x.scale(F5(3))

    def test_identity_and_zero(self):
        for level in ("0", "2", "w", "w*2"):
            alg = Algebra(Q, lvl(level))
            x = random_element(alg, seed=11)
            assert one(alg) * x == x
            assert x * one(alg) == x
            assert zero(alg) * x == zero(alg)
            assert x + zero(alg) == x
            assert x - x == zero(alg)

    def test_level_mismatch_rejected(self):
        x = one(Algebra(Q, lvl("1")))
        y = one(Algebra(Q, lvl("2")))
        with pytest.raises(LevelMismatch):
            x + y

    def test_field_mismatch_rejected(self):
        x = one(Algebra(Q, lvl("1")))
        y = one(Algebra(F5, lvl("1")))
        with pytest.raises(FieldMismatch):
            x * y

    @pytest.mark.parametrize("field", [Q, F5, F2X])
    @pytest.mark.parametrize("level", ["1", "3", "w", "w+1", "w*2"])
    def test_ring_axioms_random(self, field, level):
        alg = Algebra(field, lvl(level))
        rng = random.Random(hash((field.kind, field.p, level)) & 0xFFFF)
        for _ in range(25):
            x = random_element(alg, seed=rng)
            y = random_element(alg, seed=rng)
            z = random_element(alg, seed=rng)
            assert (x + y) + z == x + (y + z)
            assert x + y == y + x
            assert (x * y) * z == x * (y * z)
            assert x * y == y * x
            assert x * (y + z) == x * y + x * z


class TestRegularity:
    @pytest.mark.parametrize("field", [Q, F5, F2X])
    @pytest.mark.parametrize("level", ["0", "2", "w", "w+2"])
    def test_quasi_inverse_contracts(self, field, level):
        alg = Algebra(field, lvl(level))
        rng = random.Random(3)
        for _ in range(40):
            x = random_element(alg, seed=rng)
            y = quasi_inverse(x)
            assert x * y * x == x
            assert y * x * y == y

    def test_unit_idempotent_factorization(self):
        alg = Algebra(Q, lvl("w"))
        rng = random.Random(5)
        for _ in range(40):
            x = random_element(alg, seed=rng)
            u, e, uinv = unit_idempotent_factorization(x)
            assert u * uinv == one(alg)
            assert e * e == e
            assert u * e == x

    def test_tuple_quasi_inverse(self):
        alg = Algebra(F5, lvl("w"), width=2)
        rng = random.Random(9)
        for _ in range(20):
            x = random_element(alg, seed=rng)
            y = tuple_quasi_inverse(x)
            assert x * y * x == x


class TestDepthAndDimension:
    def test_depth_of_identity_is_level(self):
        for level in ("0", "1", "3", "w", "w+2", "w*2", "w^2"):
            alg = Algebra(Q, lvl(level))
            assert loewy_depth(one(alg)) == lvl(level)

    def test_depth_of_zero_is_none(self):
        assert loewy_depth(zero(Algebra(Q, lvl("w")))) is None

    def test_depth_examples(self):
        a2 = Algebra(Q, lvl("2"))
        a1 = Algebra(Q, lvl("1"))
        a0 = Algebra(Q, lvl("0"))
        # Pure deviation at a finite coordinate has the depth of that slot.
        d = inject(a2, 0, one(a1))
        assert loewy_depth(d) == lvl("1")
        deep = inject(a2, 0, inject(a1, 0, one(a0)))
        assert loewy_depth(deep) == lvl("0")

    def test_depth_subadditive_under_product(self):
        alg = Algebra(F5, lvl("w+1"))
        rng = random.Random(21)
        for _ in range(40):
            x = random_element(alg, seed=rng)
            y = random_element(alg, seed=rng)
            dx, dy, dxy = loewy_depth(x), loewy_depth(y), loewy_depth(x * y)
            if dxy is None:
                continue
            assert dx is not None and dy is not None
            assert dxy <= dx and dxy <= dy

    def test_dimension_sequence(self):
        d = dimension_sequence(Algebra(Q, lvl("w"), width=2))
        assert d.level == lvl("w")
        assert d.top_dim == 2
        assert d.field is Q

    def test_factor_equivalent(self):
        a = dimension_sequence(Algebra(Q, lvl("w")))
        b = dimension_sequence(Algebra(Q, lvl("w"), width=3))
        c = dimension_sequence(Algebra(Q, lvl("w+1")))
        assert factor_equivalent(a, dimension_sequence(Algebra(Q, lvl("w"))))
        assert not factor_equivalent(a, b)
        assert not factor_equivalent(a, c)
        assert not factor_equivalent(a, dimension_sequence(Algebra(F5, lvl("w"))))

    def test_tuple_depth_is_max(self):
        alg = Algebra(Q, lvl("2"), width=2)
        x = merge_components([one(Algebra(Q, lvl("2"))), zero(Algebra(Q, lvl("2")))])
        assert x.width == alg.width
        assert tuple_loewy_depth(x) == lvl("2")


class TestSwallow:
    PAIRS = [("0", "1"), ("0", "2"), ("1", "2"), ("2", "w"), ("0", "w+2"), ("w", "w*2")]

    @pytest.mark.parametrize("alpha,beta", PAIRS)
    @pytest.mark.parametrize("field", [Q, F5])
    def test_round_trip(self, alpha, beta, field):
        a_small = Algebra(field, lvl(alpha))
        a_big = Algebra(field, lvl(beta))
        rng = random.Random(13)
        for _ in range(25):
            x = random_element(a_small, seed=rng)
            y = random_element(a_big, seed=rng)
            z = swallow_forward(lvl(alpha), x, y)
            assert z.level == lvl(beta)
            x2, y2 = swallow_backward(lvl(alpha), z)
            assert (x2, y2) == (x, y)

    @pytest.mark.parametrize("alpha,beta", PAIRS)
    def test_ring_structure_preserved(self, alpha, beta):
        a_small = Algebra(F5, lvl(alpha))
        a_big = Algebra(F5, lvl(beta))
        rng = random.Random(17)

        def fwd(pair):
            return swallow_forward(lvl(alpha), pair[0], pair[1])

        for _ in range(25):
            p = (random_element(a_small, seed=rng), random_element(a_big, seed=rng))
            q = (random_element(a_small, seed=rng), random_element(a_big, seed=rng))
            assert fwd(p) + fwd(q) == fwd((p[0] + q[0], p[1] + q[1]))
            assert fwd(p) * fwd(q) == fwd((p[0] * q[0], p[1] * q[1]))
        assert fwd((one(a_small), one(a_big))) == one(a_big)

    def test_known_image(self):
        # The pair (4, 0) at levels (0, 2) lands as a doubly nested deviation.
        a0 = Algebra(Q, lvl("0"))
        a2 = Algebra(Q, lvl("2"))
        z = swallow_forward(lvl("0"), embed_scalar(a0, Q(4)), zero(a2))
        assert z.const == Q.zero()
        inner = z.deviation(0)
        assert inner is not None and inner.const == Q.zero()
        core = inner.deviation(0)
        assert core is not None and core.const == Q(4)


class TestSerialization:
    @pytest.mark.parametrize("field", [Q, F5, F2X])
    @pytest.mark.parametrize("level", ["0", "2", "w", "w*2"])
    @pytest.mark.parametrize("width", [1, 2])
    def test_json_round_trip(self, field, level, width):
        alg = Algebra(field, lvl(level), width=width)
        rng = random.Random(29)
        for _ in range(15):
            x = random_element(alg, seed=rng)
            assert element_from_json(field, element_to_json(x)) == x

    def test_seed_determinism(self):
        alg = Algebra(Q, lvl("w"))
        assert random_element(alg, seed=42) == random_element(alg, seed=42)

    def test_split_merge(self):
        alg = Algebra(Q, lvl("1"), width=3)
        x = random_element(alg, seed=1)
        assert merge_components(split_components(x)) == x
