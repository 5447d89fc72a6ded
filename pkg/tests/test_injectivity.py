"""Tests for the symbolic Baer-criterion extension checker."""

import pytest

from loewy.algebra import Algebra, element_to_json, embed_scalar, inject, one
from loewy.fields import Field
from loewy.injectivity import (
    BadCardinal,
    HomDescriptor,
    IdealDescriptor,
    MElement,
    SupportDescriptor,
    SymbolicCardinal,
    Verdict,
    baer_extend,
    card_cmp,
    gamma,
    m_membership,
    query_from_json,
    strictness_witness,
)
from loewy.ordinals import parse_ordinal as lvl

Q = Field.rationals()
A1 = Algebra(Q, lvl("1"))
A0 = Algebra(Q, lvl("0"))


def socle_gen(coord, value):
    return inject(A1, coord, embed_scalar(A0, Q(value)))


ALEPH0 = SymbolicCardinal.aleph(0)
ALEPH1 = SymbolicCardinal.aleph(1)
KAPPA = SymbolicCardinal.kappa()
KAPPA_PLUS = SymbolicCardinal.kappa_plus()


class TestCardinals:
    def test_order(self):
        chain = [SymbolicCardinal.fin(2), SymbolicCardinal.fin(5), ALEPH0, ALEPH1, KAPPA, KAPPA_PLUS]
        for i, a in enumerate(chain):
            for j, b in enumerate(chain):
                assert card_cmp(a, b) == (i > j) - (i < j)

    def test_literal_round_trip(self):
        for c in (SymbolicCardinal.fin(3), ALEPH0, ALEPH1, KAPPA, KAPPA_PLUS):
            assert SymbolicCardinal.parse(c.literal()) == c

    def test_gamma(self):
        assert gamma() == KAPPA_PLUS


class TestMembership:
    def test_explicit_support_always_member(self):
        m = MElement.explicit({0: Q.one(), 3: Q(2)})
        for lam in (ALEPH0, ALEPH1, KAPPA, KAPPA_PLUS):
            assert m_membership(m, lam)

    def test_symbolic_support_strict(self):
        m = MElement(SupportDescriptor.symbolic(ALEPH1, "A"))
        assert not m_membership(m, ALEPH0)
        assert not m_membership(m, ALEPH1)
        assert m_membership(m, KAPPA)
        assert m_membership(m, KAPPA_PLUS)


class TestStrictness:
    @pytest.mark.parametrize("lam", [ALEPH0, ALEPH1, KAPPA])
    def test_witness_fails_at_its_level(self, lam):
        ideal, hom = strictness_witness(lam)
        verdict = baer_extend(lam, ideal, hom)
        assert verdict.kind == Verdict.FAILS
        assert verdict.required == lam

    @pytest.mark.parametrize("lam", [ALEPH0, ALEPH1, KAPPA])
    def test_witness_extends_one_level_up(self, lam):
        ideal, hom = strictness_witness(lam)
        bigger = {ALEPH0: ALEPH1, ALEPH1: KAPPA, KAPPA: KAPPA_PLUS}[lam]
        verdict = baer_extend(bigger, ideal, hom)
        assert verdict.kind == Verdict.EXTENDS
        assert m_membership(verdict.witness, bigger)

    def test_no_witness_at_top(self):
        with pytest.raises(BadCardinal):
            strictness_witness(KAPPA_PLUS)
        with pytest.raises(BadCardinal):
            strictness_witness(SymbolicCardinal.fin(4))


class TestFinitelyGenerated:
    def test_empty_ideal_extends(self):
        v = baer_extend(ALEPH0, IdealDescriptor.finitely_generated([]), HomDescriptor.inclusion())
        assert v.kind == Verdict.EXTENDS

    def test_socle_generated_inclusion_extends_everywhere(self):
        ideal = IdealDescriptor.finitely_generated([socle_gen(0, 3), socle_gen(2, 1)])
        for lam in (ALEPH0, ALEPH1, KAPPA, KAPPA_PLUS):
            v = baer_extend(lam, ideal, HomDescriptor.inclusion())
            assert v.kind == Verdict.EXTENDS
            assert m_membership(v.witness, lam)
            assert set(v.witness.values) == {0, 2}

    def test_unit_tail_inclusion_needs_top_level(self):
        ideal = IdealDescriptor.finitely_generated([one(A1)])
        v_top = baer_extend(KAPPA_PLUS, ideal, HomDescriptor.inclusion())
        assert v_top.kind == Verdict.EXTENDS
        for lam in (ALEPH0, KAPPA):
            v = baer_extend(lam, ideal, HomDescriptor.inclusion())
            assert v.kind == Verdict.INVALID

    def test_finite_table_extends_with_verified_witness(self):
        ideal = IdealDescriptor.finitely_generated([socle_gen(0, 1), socle_gen(1, 2)])
        table = {
            0: MElement.explicit({0: Q(3)}),
            1: MElement.explicit({1: Q(5)}),
        }
        v = baer_extend(ALEPH0, ideal, HomDescriptor.finite_table(table))
        assert v.kind == Verdict.EXTENDS
        assert v.witness.values == {0: Q(3), 1: Q(5)}

    def test_table_off_support_is_invalid(self):
        ideal = IdealDescriptor.finitely_generated([socle_gen(0, 1)])
        table = {5: MElement.explicit({5: Q.one()})}
        v = baer_extend(ALEPH0, ideal, HomDescriptor.finite_table(table))
        assert v.kind == Verdict.INVALID
        assert v.coordinate == 5


class TestSocleSums:
    def test_small_explicit_sum_extends(self):
        ideal = IdealDescriptor.socle_direct_sum(SupportDescriptor.explicit([0, 1, 4]))
        v = baer_extend(ALEPH0, ideal, HomDescriptor.inclusion())
        assert v.kind == Verdict.EXTENDS
        assert v.witness.values == {c: Q.one() for c in (0, 1, 4)}

    def test_large_symbolic_sum_fails(self):
        ideal = IdealDescriptor.socle_direct_sum(SupportDescriptor.symbolic(KAPPA, "A"))
        v = baer_extend(KAPPA, ideal, HomDescriptor.inclusion())
        assert v.kind == Verdict.FAILS
        assert (v.required, v.allowed) == (KAPPA, KAPPA)

    def test_top_level_never_fails(self):
        for card in (ALEPH0, ALEPH1, KAPPA):
            ideal = IdealDescriptor.socle_direct_sum(SupportDescriptor.symbolic(card, "A"))
            v = baer_extend(KAPPA_PLUS, ideal, HomDescriptor.inclusion())
            assert v.kind == Verdict.EXTENDS


class TestJson:
    def test_fg_query(self):
        data = {
            "lambda": "aleph:0",
            "ideal": {"fg": [element_to_json(socle_gen(0, 2))]},
            "hom": "inclusion",
        }
        lam, ideal, hom = query_from_json(data, Q)
        v = baer_extend(lam, ideal, hom, field=Q)
        assert v.kind == Verdict.EXTENDS

    def test_socle_query_fails(self):
        data = {"lambda": "kappa", "ideal": {"socle_sum": "kappa"}, "hom": "inclusion"}
        lam, ideal, hom = query_from_json(data, Q)
        v = baer_extend(lam, ideal, hom, field=Q)
        assert v.kind == Verdict.FAILS
        assert "fails" in v.to_json()["verdict"].lower()

    def test_verdict_json_shape(self):
        v = baer_extend(ALEPH0, IdealDescriptor.finitely_generated([]), HomDescriptor.inclusion())
        data = v.to_json()
        assert data["verdict"].lower().startswith("extend")
