import pytest
from hypothesis import given, strategies as st

from loewy.ordinals import (ONE, OMEGA, ZERO, Ordinal, OrdinalParseError,
                            default_limit_cap, ord_cmp, ordinals_below,
                            parse_ordinal)


def o(s):
    return parse_ordinal(s)


def _build(pairs, n):
    acc = ZERO
    for e, c in sorted(set(pairs), reverse=True):
        acc = acc + Ordinal.omega(Ordinal(e), c)
    return acc + Ordinal(n)


small_ordinals = st.builds(
    _build,
    st.lists(st.tuples(st.integers(1, 3), st.integers(1, 3)), max_size=3),
    st.integers(0, 5))


class TestParsePrint:
    @pytest.mark.parametrize("text", [
        "0", "1", "17", "w", "w+1", "w*2", "w*2+3", "w^2", "w^2*3+w+4",
        "w^(w)", "w^(w+1)*2+w^3+5",
    ])
    def test_roundtrip(self, text):
        assert str(o(text)) == text

    def test_bad_literals(self):
        for bad in ["", "x", "w^", "w+", "3+w"]:
            with pytest.raises(OrdinalParseError):
                o(bad)


class TestOrder:
    def test_examples(self):
        assert ord_cmp(o("w*2+1"), o("w*2")) > 0
        assert ord_cmp(o("w"), o("w")) == 0
        assert o("w^2") > o("w*5+100")
        assert Ordinal(3) < OMEGA

    @given(small_ordinals, small_ordinals)
    def test_total(self, a, b):
        assert (a < b) + (a == b) + (b < a) == 1

    @given(small_ordinals, small_ordinals, small_ordinals)
    def test_transitive(self, a, b, c):
        if a < b and b < c:
            assert a < c


class TestAddition:
    def test_absorption(self):
        # left addend swallowed by a bigger right-hand leading term
        assert o("w*2+3") + OMEGA == o("w*3")
        assert Ordinal(5) + OMEGA == OMEGA
        assert OMEGA + Ordinal(5) == o("w+5")

    def test_not_commutative(self):
        assert ONE + OMEGA == OMEGA
        assert OMEGA + ONE != OMEGA

    @given(small_ordinals, small_ordinals, small_ordinals)
    def test_associative(self, a, b, c):
        assert (a + b) + c == a + (b + c)

    @given(small_ordinals)
    def test_zero_identity(self, a):
        assert a + ZERO == a and ZERO + a == a


class TestClassify:
    def test_kinds(self):
        assert ZERO.is_zero()
        assert o("w+1").is_successor() and o("w+1").predecessor() == OMEGA
        assert o("w*2").is_limit() and o("w^2").is_limit()
        assert Ordinal(7).is_finite() and Ordinal(7).finite_value() == 7
        assert not OMEGA.is_finite()


class TestPools:
    def test_ordinals_below_finite_cap(self):
        assert [str(x) for x in ordinals_below(Ordinal(3), OMEGA)] == \
            ["0", "1", "2", "3"]

    def test_ordinals_below_mixed_cap(self):
        got = [str(x) for x in ordinals_below(o("w+2"), o("w*2"))]
        assert got == ["0", "1", "2", "w", "w+1", "w+2"]

    def test_default_cap_touches_every_block(self):
        cap = default_limit_cap(o("w^2"), 2)
        assert cap == o("w*2+2")
        pool = list(ordinals_below(cap, o("w^2")))
        assert OMEGA in pool and o("w*2") in pool and Ordinal(2) in pool

    def test_default_cap_needs_limit(self):
        with pytest.raises(ValueError):
            default_limit_cap(o("w+1"), 2)
