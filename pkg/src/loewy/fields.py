"""Exact scalar fields: Q, F_p and the rational function fields F_p(x).

Every value is kept in a unique canonical form so that equality is
structural: rationals use ``fractions.Fraction``, prime-field residues are
ints in ``range(p)``, and rational functions are reduced fractions of
coefficient tuples (low degree first) with a monic denominator.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Optional, Tuple


class FieldError(Exception):
    pass


class FieldMismatch(FieldError):
    pass


class DivisionByZero(FieldError, ZeroDivisionError):
    pass


class UnsupportedField(FieldError):
    pass


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


# ---------------------------------------------------------------------------
# polynomial helpers over F_p; coefficient tuples, lowest degree first,
# no trailing zeros, () is the zero polynomial


def poly_trim(c):
    i = len(c)
    while i and c[i - 1] == 0:
        i -= 1
    return tuple(c[:i])


def poly_add(a, b, p):
    n = max(len(a), len(b))
    return poly_trim([((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)) % p
                      for i in range(n)])


def poly_neg(a, p):
    return tuple((-c) % p for c in a)


def poly_mul(a, b, p):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    # leading coefficient is a product of nonzero residues mod a prime,
    # hence nonzero: no trim needed
    return tuple(out)

def poly_scale(a, k, p):
    k %= p
    return poly_trim([(c * k) % p for c in a])


def poly_divmod(a, b, p):
    if not b:
        raise DivisionByZero("polynomial division by zero")
    r = list(a)
    nb = len(b)
    q = [0] * max(0, len(r) - nb + 1)
    inv_lead = pow(b[-1], p - 2, p)
    for top in range(len(r) - 1, nb - 2, -1):
        factor = (r[top] * inv_lead) % p
        if factor:
            shift = top - nb + 1
            q[shift] = factor
            for i in range(nb):
                r[shift + i] = (r[shift + i] - factor * b[i]) % p
    return poly_trim(q), poly_trim(r)


def poly_gcd(a, b, p):
    a, b = poly_trim(a), poly_trim(b)
    while b:
        _, r = poly_divmod(a, b, p)
        a, b = b, r
    if a:
        a = poly_scale(a, pow(a[-1], p - 2, p), p)  # monic gcd
    return a


def poly_str(c) -> str:
    if not c:
        return "0"
    parts = []
    for i in range(len(c) - 1, -1, -1):
        k = c[i]
        if not k:
            continue
        if i == 0:
            parts.append(str(k))
        elif i == 1:
            parts.append("x" if k == 1 else "%d*x" % k)
        else:
            parts.append("x^%d" % i if k == 1 else "%d*x^%d" % (k, i))
    return "+".join(parts)


_POLY_TERM = re.compile(r"(\d+)?(?:\*)?(x)(?:\^(\d+))?$|(\d+)$")


def poly_parse(text: str, p: int):
    s = text.replace(" ", "")
    if s == "0":
        return ()
    coeffs = {}
    for part in s.split("+"):
        m = _POLY_TERM.match(part)
        if not m:
            raise FieldError("bad polynomial term %r" % part)
        if m.group(4) is not None:
            deg, k = 0, int(m.group(4))
        else:
            k = int(m.group(1)) if m.group(1) else 1
            deg = int(m.group(3)) if m.group(3) else 1
        coeffs[deg] = (coeffs.get(deg, 0) + k) % p
    out = [0] * (max(coeffs) + 1)
    for d, k in coeffs.items():
        out[d] = k
    return poly_trim(out)


# ---------------------------------------------------------------------------


class Field:
    """Descriptor of an exact field; also the factory of its values.

    Variants: ``Field.rationals()``, ``Field.prime(p)`` and
    ``Field.rational_functions(p)``.
    """

    __slots__ = ("kind", "p", "_zero", "_one")

    RATIONALS = "Q"
    PRIME = "Fp"
    RATFUNC = "Fp(x)"

    def __init__(self, kind: str, p: Optional[int] = None):
        if kind not in (Field.RATIONALS, Field.PRIME, Field.RATFUNC):
            raise FieldError("unknown field kind %r" % kind)
        if kind != Field.RATIONALS:
            if p is None or not _is_prime(p):
                raise FieldError("characteristic must be prime, got %r" % p)
        self.kind = kind
        self.p = p
        self._zero = None
        self._one = None

    _cache: dict = {}

    @classmethod
    def _cached(cls, kind, p):
        f = cls._cache.get((kind, p))
        if f is None:
            f = cls._cache[(kind, p)] = cls(kind, p)
        return f

    @classmethod
    def rationals(cls) -> "Field":
        return cls._cached(Field.RATIONALS, None)

    @classmethod
    def prime(cls, p: int) -> "Field":
        return cls._cached(Field.PRIME, p)

    @classmethod
    def rational_functions(cls, p: int) -> "Field":
        return cls._cached(Field.RATFUNC, p)

    @property
    def characteristic(self) -> int:
        return 0 if self.kind == Field.RATIONALS else self.p

    def __eq__(self, other):
        if self is other:
            return True
        return isinstance(other, Field) and (self.kind, self.p) == (other.kind, other.p)

    def __hash__(self):
        return hash((self.kind, self.p))

    def __repr__(self):
        if self.kind == Field.RATIONALS:
            return "Field.rationals()"
        if self.kind == Field.PRIME:
            return "Field.prime(%d)" % self.p
        return "Field.rational_functions(%d)" % self.p

    def __str__(self):
        if self.kind == Field.RATIONALS:
            return "Q"
        if self.kind == Field.PRIME:
            return "F%d" % self.p
        return "F%d(x)" % self.p

    # -- value construction -------------------------------------------

    def zero(self) -> "FieldValue":
        if self._zero is None:
            self._zero = self(0)
        return self._zero

    def one(self) -> "FieldValue":
        if self._one is None:
            self._one = self(1)
        return self._one

    def __call__(self, value) -> "FieldValue":
        """Coerce an int, Fraction or coefficient data into a field value."""
        if isinstance(value, FieldValue):
            if value.field != self:
                raise FieldMismatch("value of %s used as %s" % (value.field, self))
            return value
        if self.kind == Field.RATIONALS:
            return FieldValue(self, Fraction(value))
        if self.kind == Field.PRIME:
            return FieldValue(self, int(value) % self.p)
        if isinstance(value, int):
            raw = ((value % self.p,) if value % self.p else (), (1,))
            return FieldValue(self, raw)
        num, den = value
        return FieldValue(self, self._reduce(tuple(num), tuple(den)))

    def ratfunc(self, num, den=(1,)) -> "FieldValue":
        if self.kind != Field.RATFUNC:
            raise FieldMismatch("ratfunc literal in %s" % self)
        return self((num, den))

    def x(self) -> "FieldValue":
        return self.ratfunc((0, 1))

    def _reduce(self, num, den):
        p = self.p
        num, den = poly_trim(num), poly_trim(den)
        if not den:
            raise DivisionByZero("zero denominator")
        if not num:
            return ((), (1,))
        if den == (1,):
            return (num, den)
        g = poly_gcd(num, den, p)
        if len(g) > 1 or g != (1,):
            num, _ = poly_divmod(num, g, p)
            den, _ = poly_divmod(den, g, p)
        lead = den[-1]
        if lead != 1:
            inv = pow(lead, p - 2, p)
            num = poly_scale(num, inv, p)
            den = poly_scale(den, inv, p)
        return (num, den)

    # -- literals -------------------------------------------------------

    def parse(self, text: str) -> "FieldValue":
        """Parse a scalar literal: ``a/b`` (Q), ``k`` (F_p), ``(num)/(den)``,
        a bare polynomial, or an integer (F_p(x))."""
        s = text.strip()
        if self.kind == Field.RATIONALS:
            return self(Fraction(s))
        if self.kind == Field.PRIME:
            return self(int(s))
        m = re.fullmatch(r"\((.*)\)/\((.*)\)", s)
        if m:
            return self((poly_parse(m.group(1), self.p), poly_parse(m.group(2), self.p)))
        return self((poly_parse(s, self.p), (1,)))


class FieldValue:
    """A canonical scalar, tagged with its field."""

    __slots__ = ("field", "raw")

    def __init__(self, field: Field, raw):
        self.field = field
        self.raw = raw

    def _check(self, other: "FieldValue"):
        if self.field is getattr(other, "field", None):
            return
        if not isinstance(other, FieldValue):
            raise TypeError("expected FieldValue, got %r" % (other,))
        if other.field != self.field:
            raise FieldMismatch("%s vs %s" % (self.field, other.field))

    def is_zero(self) -> bool:
        k = self.field.kind
        if k == Field.RATFUNC:
            return not self.raw[0]
        return self.raw == 0

    def is_one(self) -> bool:
        if self.field.kind == Field.RATFUNC:
            return self.raw == ((1,), (1,))
        return self.raw == 1

    def __add__(self, other):
        self._check(other)
        f = self.field
        if f.kind == Field.RATIONALS:
            return FieldValue(f, self.raw + other.raw)
        if f.kind == Field.PRIME:
            return FieldValue(f, (self.raw + other.raw) % f.p)
        (n1, d1), (n2, d2) = self.raw, other.raw
        p = f.p
        if d1 == (1,) and d2 == (1,):
            return FieldValue(f, (poly_add(n1, n2, p), (1,)))
        num = poly_add(poly_mul(n1, d2, p), poly_mul(n2, d1, p), p)
        return FieldValue(f, f._reduce(num, poly_mul(d1, d2, p)))

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        f = self.field
        if f.kind == Field.RATIONALS:
            return FieldValue(f, -self.raw)
        if f.kind == Field.PRIME:
            return FieldValue(f, (-self.raw) % f.p)
        n, d = self.raw
        return FieldValue(f, (poly_neg(n, f.p), d))

    def __mul__(self, other):
        self._check(other)
        f = self.field
        if f.kind == Field.RATIONALS:
            return FieldValue(f, self.raw * other.raw)
        if f.kind == Field.PRIME:
            return FieldValue(f, (self.raw * other.raw) % f.p)
        (n1, d1), (n2, d2) = self.raw, other.raw
        p = f.p
        if d1 == (1,) and d2 == (1,):
            return FieldValue(f, (poly_mul(n1, n2, p), (1,)))
        return FieldValue(f, f._reduce(poly_mul(n1, n2, p), poly_mul(d1, d2, p)))

    def inv(self) -> "FieldValue":
        f = self.field
        if self.is_zero():
            raise DivisionByZero("inverse of zero in %s" % f)
        if f.kind == Field.RATIONALS:
            return FieldValue(f, 1 / self.raw)
        if f.kind == Field.PRIME:
            return FieldValue(f, pow(self.raw, f.p - 2, f.p))
        n, d = self.raw
        return FieldValue(f, f._reduce(d, n))

    def frobenius(self) -> "FieldValue":
        """The p-th power map; a ring endomorphism in characteristic p."""
        f = self.field
        p = f.characteristic
        if p == 0:
            raise UnsupportedField("Frobenius needs positive characteristic")
        if f.kind == Field.PRIME:
            return self  # Fermat
        n, d = self.raw
        return FieldValue(f, (_poly_pth_power(n, p), _poly_pth_power(d, p)))

    def pth_root(self) -> Optional["FieldValue"]:
        """The unique b with b**p = self, or None when self is not a p-th
        power.  In reduced form a fraction is a p-th power iff every exponent
        carrying a nonzero coefficient in both numerator and denominator is
        divisible by p (coefficients in F_p are fixed points of Frobenius).
        """
        f = self.field
        p = f.characteristic
        if p == 0:
            raise UnsupportedField("p-th roots need positive characteristic")
        if f.kind == Field.PRIME:
            return self
        n, d = self.raw
        rn = _poly_pth_root(n, p)
        rd = _poly_pth_root(d, p)
        if rn is None or rd is None:
            return None
        return FieldValue(f, (rn, rd))

    def __pow__(self, e: int):
        if e < 0:
            return self.inv() ** (-e)
        out = self.field.one()
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __eq__(self, other):
        return (isinstance(other, FieldValue)
                and other.field == self.field and other.raw == self.raw)

    def __hash__(self):
        return hash((self.field, self.raw))

    def literal(self) -> str:
        f = self.field
        if f.kind == Field.RATIONALS:
            return str(self.raw)
        if f.kind == Field.PRIME:
            return str(self.raw)
        n, d = self.raw
        return "(%s)/(%s)" % (poly_str(n), poly_str(d))

    def __str__(self):
        return self.literal()

    def __repr__(self):
        return "<%s %s>" % (self.field, self.literal())


def _poly_pth_power(c, p):
    if not c:
        return ()
    out = [0] * ((len(c) - 1) * p + 1)
    for i, k in enumerate(c):
        out[i * p] = k  # k**p = k in F_p
    return tuple(out)


def _poly_pth_root(c, p):
    if not c:
        return ()
    out = [0] * ((len(c) - 1) // p + 1)
    for i, k in enumerate(c):
        if not k:
            continue
        if i % p:
            return None
        out[i // p] = k
    return tuple(out)
