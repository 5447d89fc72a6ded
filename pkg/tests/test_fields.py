from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from loewy.fields import (DivisionByZero, Field, FieldMismatch, FieldValue,
                          UnsupportedField, poly_divmod, poly_gcd, poly_mul,
                          poly_parse, poly_str)

Q = Field.rationals()
F2 = Field.prime(2)
F5 = Field.prime(5)
F2X = Field.rational_functions(2)
F3X = Field.rational_functions(3)


class TestConstruction:
    def test_interned(self):
        assert Field.prime(5) is F5
        assert Field.rationals() is Q

    def test_non_prime_rejected(self):
        with pytest.raises(Exception):
            Field.prime(6)

    def test_coerce(self):
        assert Q(Fraction(2, 4)).raw == Fraction(1, 2)
        assert F5(7).raw == 2
        assert F2X((poly_parse("x^2", 2), poly_parse("x", 2))).raw == \
            ((0, 1), (1,))  # x^2/x reduces to x


class TestPolyHelpers:
    def test_divmod(self):
        # (x^2+1) = (x+1)(x+1) over F2
        q, r = poly_divmod((1, 0, 1), (1, 1), 2)
        assert q == (1, 1) and r == ()

    def test_gcd_monic(self):
        # gcd(x^2-1, x-1) = x-1 over F5, made monic
        g = poly_gcd((4, 0, 1), (4, 1), 5)
        assert g == (4, 1)

    def test_str_parse_roundtrip(self):
        for c in [(), (3,), (0, 1), (2, 0, 1), (1, 4, 0, 2)]:
            assert poly_parse(poly_str(c), 5) == c


class TestArithmetic:
    def test_rationals(self):
        a, b = Q(Fraction(1, 3)), Q(Fraction(1, 6))
        assert (a + b).raw == Fraction(1, 2)
        assert (a * b).raw == Fraction(1, 18)
        assert a.inv().raw == 3

    def test_prime(self):
        assert (F5(3) + F5(4)).raw == 2
        assert (F5(2) * F5(4)).raw == 3
        assert F5(2).inv().raw == 3

    def test_ratfunc_reduction(self):
        x = F2X.x()
        one = F2X.one()
        v = (x * x + one) * (x + one).inv()  # (x^2+1)/(x+1) = x+1 over F2
        assert v == x + one

    def test_mismatch(self):
        with pytest.raises(FieldMismatch):
            F5(1) + F2(1)

    def test_zero_division(self):
        with pytest.raises(DivisionByZero):
            F5(0).inv()


small_q = st.builds(lambda n, d: Q(Fraction(n, d)),
                    st.integers(-9, 9), st.integers(1, 9))
small_f2x = st.builds(
    lambda num, den0: F2X.ratfunc(tuple(num) or (1,), (den0, 1)),
    st.lists(st.integers(0, 1), min_size=1, max_size=3),
    st.integers(0, 1))


class TestFieldAxioms:
    @given(small_q, small_q, small_q)
    def test_rationals(self, a, b, c):
        assert (a + b) * c == a * c + b * c
        assert a * b == b * a

    @given(small_f2x, small_f2x, small_f2x)
    def test_ratfunc(self, a, b, c):
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert (a + b) * c == a * c + b * c
        if not a.is_zero():
            assert a * a.inv() == F2X.one()


class TestFrobenius:
    def test_prime_fixed(self):
        assert F5(3).frobenius() == F5(3)

    def test_ratfunc_square(self):
        x = F2X.x()
        assert x.frobenius() == x * x
        v = (x + F2X.one())
        assert v.frobenius() == v * v

    def test_char_zero_rejected(self):
        with pytest.raises(UnsupportedField):
            Q(1).frobenius()

    def test_pth_root(self):
        x = F2X.x()
        assert x.pth_root() is None  # x is not a square over F2(x)
        sq = (x + F2X.one()) * (x + F2X.one())
        assert sq.pth_root() == x + F2X.one()
        y = F3X.x()
        assert (y ** 3).pth_root() == y
        assert F5(2).pth_root() == F5(2)  # Fermat
        assert F2X.zero().pth_root() == F2X.zero()

    @given(small_f2x)
    def test_root_inverts_frobenius(self, a):
        assert a.frobenius().pth_root() == a


class TestLiterals:
    def test_roundtrip(self):
        vals = [Q(Fraction(-3, 4)), F5(3),
                F2X.ratfunc((1, 0, 1), (0, 1)), F2X.zero()]
        for v in vals:
            assert v.field.parse(v.literal()) == v

    def test_ratfunc_form(self):
        v = F2X.ratfunc((1, 1), (0, 1))
        assert v.literal() == "(x+1)/(x)"
