"""Conormed strong multiplicative bases of the algebras B(level, width).

Basis elements are addressed by tree indices: Unit is the algebra unit,
C0 embeds a component basis element at coordinate 0, Mix adds the
designated socle idempotent at coordinate 0 to a component basis element
at a nonzero coordinate, and Prod0/ProdMix are the outer product-layer
variants for width > 1.  The designated socle idempotent always sits in
the leftmost component chain, which makes membership decidable and the
enumeration canonical.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from .fields import Field, FieldValue, UnsupportedField
from .ordinals import Ordinal, ZERO, parse_ordinal, ordinals_below, default_limit_cap
from .algebra import (Algebra, AnyElement, Coord, Element, TupleElement,
                      component_level, inject, loewy_depth, one, one_at,
                      random_element, scalar_element, tuple_loewy_depth,
                      zero_at)


class BadIndex(ValueError):
    pass


class BasisIndex:
    """Tree address of a basis element."""

    __slots__ = ("tag", "coord", "inner")

    UNIT = "U"
    C0 = "C0"
    MIX = "M"
    PROD0 = "P0"
    PRODMIX = "P"

    def __init__(self, tag: str, coord=None, inner: Optional["BasisIndex"] = None):
        self.tag = tag
        self.coord = coord
        self.inner = inner

    @classmethod
    def unit(cls):
        return _UNIT

    @classmethod
    def c0(cls, inner):
        return cls(cls.C0, None, inner)

    @classmethod
    def mix(cls, coord, inner):
        return cls(cls.MIX, coord, inner)

    @classmethod
    def prod0(cls, inner):
        return cls(cls.PROD0, None, inner)

    @classmethod
    def prodmix(cls, factor: int, inner):
        return cls(cls.PRODMIX, factor, inner)

    def _key(self):
        return (self.tag, self.coord, self.inner)

    def __eq__(self, other):
        return isinstance(other, BasisIndex) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def literal(self) -> str:
        if self.tag == self.UNIT:
            return "U"
        if self.tag == self.C0:
            return "C0." + self.inner.literal()
        if self.tag == self.MIX:
            return "M%s.%s" % (self.coord, self.inner.literal())
        if self.tag == self.PROD0:
            return "P0." + self.inner.literal()
        return "P%d.%s" % (self.coord, self.inner.literal())

    def __str__(self):
        return self.literal()

    def __repr__(self):
        return "BasisIndex(%s)" % self.literal()


_UNIT = BasisIndex(BasisIndex.UNIT)


def parse_index(text: str, level: Ordinal, width: int = 1) -> BasisIndex:
    """Parse an index path literal such as ``M2.U`` or ``P1.C0.U``."""
    head, _, rest = text.strip().partition(".")
    if head == "U":
        if rest:
            raise BadIndex("trailing path after U in %r" % text)
        return _UNIT
    if head == "P0":
        if width < 2:
            raise BadIndex("P0 needs width > 1")
        return BasisIndex.prod0(parse_index(rest, level, 1))
    if head.startswith("P"):
        i = int(head[1:])
        if not 0 < i < width:
            raise BadIndex("factor %d out of range for width %d" % (i, width))
        return BasisIndex.prodmix(i, parse_index(rest, level, 1))
    if head == "C0":
        return BasisIndex.c0(parse_index(rest, _component0_level(level), 1))
    if head.startswith("M"):
        coord = _parse_coord(head[1:], level)
        return BasisIndex.mix(coord, parse_index(rest, component_level(level, coord), 1))
    raise BadIndex("bad index path %r" % text)


def _parse_coord(text: str, level: Ordinal) -> Coord:
    if level.is_successor():
        c = int(text)
        if c == 0:
            raise BadIndex("Mix coordinate must be nonzero")
        return c
    c = parse_ordinal(text)
    if c.is_zero():
        raise BadIndex("Mix coordinate must be nonzero")
    return c


def _component0_level(level: Ordinal) -> Ordinal:
    if level.is_zero():
        raise BadIndex("level 0 has no components")
    return level.predecessor() if level.is_successor() else ZERO


def _coord0(level: Ordinal) -> Coord:
    return 0 if level.is_successor() else ZERO


# -- element construction ---------------------------------------------------


def socle_idempotent(alg: Algebra) -> Element:
    """The designated nonzero socle idempotent: coordinate 0 all the way
    down (the level-0 component at limit levels)."""
    if alg.width != 1:
        raise BadIndex("socle idempotent is defined on width-1 algebras")
    if alg.level.is_zero():
        return one_at(alg.level, alg.field)
    comp = Algebra(alg.field, _component0_level(alg.level), 1)
    return inject(alg, _coord0(alg.level), socle_idempotent(comp))


def socle_index(level: Ordinal) -> BasisIndex:
    """The index addressing the designated socle idempotent."""
    if level.is_zero():
        return _UNIT
    return BasisIndex.c0(socle_index(_component0_level(level)))


def basis_element(alg: Algebra, idx: BasisIndex) -> AnyElement:
    if alg.width > 1:
        comp = alg.component()
        if idx.tag == BasisIndex.PROD0:
            parts = [basis_element(comp, idx.inner)] + \
                [zero_at(alg.level, alg.field) for _ in range(alg.width - 1)]
            return TupleElement(parts)
        if idx.tag == BasisIndex.PRODMIX:
            i = idx.coord
            if not 0 < i < alg.width:
                raise BadIndex("factor %r out of range" % (i,))
            parts = [zero_at(alg.level, alg.field) for _ in range(alg.width)]
            parts[0] = socle_idempotent(comp)
            parts[i] = basis_element(comp, idx.inner)
            return TupleElement(parts)
        raise BadIndex("width-%d index must be P0 or Pi, got %s" % (alg.width, idx))
    if idx.tag == BasisIndex.UNIT:
        return one(alg)
    if alg.level.is_zero():
        raise BadIndex("level 0 admits only the Unit index")
    comp0 = Algebra(alg.field, _component0_level(alg.level), 1)
    if idx.tag == BasisIndex.C0:
        return inject(alg, _coord0(alg.level), basis_element(comp0, idx.inner))
    if idx.tag == BasisIndex.MIX:
        t = idx.coord
        comp_t = Algebra(alg.field, component_level(alg.level, t), 1)
        return (inject(alg, _coord0(alg.level), socle_idempotent(comp0))
                + inject(alg, t, basis_element(comp_t, idx.inner)))
    raise BadIndex("index %s invalid at width 1" % idx)


def basis_membership(x: AnyElement) -> Optional[BasisIndex]:
    """The unique index whose basis element equals x, or None."""
    if isinstance(x, TupleElement):
        comps = x.components
        nz = [i for i, c in enumerate(comps) if not c.is_zero()]
        if nz == [0]:
            inner = basis_membership(comps[0])
            return BasisIndex.prod0(inner) if inner is not None else None
        if len(nz) == 2 and nz[0] == 0:
            alg = Algebra(comps[0].field, comps[0].level, 1)
            if comps[0] != socle_idempotent(alg):
                return None
            inner = basis_membership(comps[nz[1]])
            return BasisIndex.prodmix(nz[1], inner) if inner is not None else None
        return None
    if x.level.is_zero():
        return _UNIT if x.const.is_one() else None
    if not x.dev:
        return _UNIT if x.const.is_one() else None
    if not x.const.is_zero():
        return None
    c0 = _coord0(x.level)
    if len(x.dev) == 1 and x.dev[0][0] == c0:
        inner = basis_membership(x.dev[0][1])
        return BasisIndex.c0(inner) if inner is not None else None
    if len(x.dev) == 2 and x.dev[0][0] == c0:
        comp0 = Algebra(x.field, _component0_level(x.level), 1)
        if x.dev[0][1] != socle_idempotent(comp0):
            return None
        t = x.dev[1][0]
        inner = basis_membership(x.dev[1][1])
        return BasisIndex.mix(t, inner) if inner is not None else None
    return None


# -- enumeration -------------------------------------------------------------


@dataclass(frozen=True)
class BasisBudget:
    max_coord: int = 3
    max_limit_coord: Optional[Ordinal] = None
    max_depth: int = 4


def _nonzero_coords(level: Ordinal, budget: BasisBudget) -> List[Coord]:
    if level.is_successor():
        return list(range(1, budget.max_coord + 1))
    cap = budget.max_limit_coord if budget.max_limit_coord is not None \
        else default_limit_cap(level, budget.max_coord)
    return [o for o in ordinals_below(cap, level) if not o.is_zero()]


def _enumerate_width1(level: Ordinal, budget: BasisBudget, depth: int) -> List[BasisIndex]:
    if level.is_zero():
        return [_UNIT]
    out = [_UNIT]
    if depth <= 0:
        return out
    comp0 = _component0_level(level)
    out.extend(BasisIndex.c0(i) for i in _enumerate_width1(comp0, budget, depth - 1))
    for t in _nonzero_coords(level, budget):
        ct = component_level(level, t)
        out.extend(BasisIndex.mix(t, i) for i in _enumerate_width1(ct, budget, depth - 1))
    return out


def enumerate_basis(alg: Algebra, budget: BasisBudget = BasisBudget()
                    ) -> List[Tuple[BasisIndex, AnyElement]]:
    """All valid indices within the budget, in canonical order (Unit, then
    the C0 subtree, then Mix by coordinate then inner index), paired with
    their elements."""
    if alg.width == 1:
        idxs = _enumerate_width1(alg.level, budget, budget.max_depth)
    else:
        inner = _enumerate_width1(alg.level, budget, budget.max_depth)
        idxs = [BasisIndex.prod0(i) for i in inner]
        idxs += [BasisIndex.prodmix(f, i)
                 for f in range(1, alg.width) for i in inner]
    return [(i, basis_element(alg, i)) for i in idxs]


# -- semigroup structure ------------------------------------------------------


def basis_product(alg: Algebra, i: BasisIndex, j: BasisIndex) -> BasisIndex:
    """Index of the product of two basis elements (strong closure)."""
    if alg.width > 1:
        return _prod_tuple(alg, i, j)
    return _prod1(alg.level, i, j)


def _prod1(level: Ordinal, i: BasisIndex, j: BasisIndex) -> BasisIndex:
    if i.tag == BasisIndex.UNIT:
        return j
    if j.tag == BasisIndex.UNIT:
        return i
    if level.is_zero():
        raise BadIndex("level 0 admits only the Unit index")
    comp0 = _component0_level(level)
    ti, tj = i.tag, j.tag
    if ti == BasisIndex.C0 and tj == BasisIndex.C0:
        return BasisIndex.c0(_prod1(comp0, i.inner, j.inner))
    if ti == BasisIndex.C0 and tj == BasisIndex.MIX:
        return BasisIndex.c0(_prod1(comp0, i.inner, socle_index(comp0)))
    if ti == BasisIndex.MIX and tj == BasisIndex.C0:
        return BasisIndex.c0(_prod1(comp0, j.inner, socle_index(comp0)))
    if ti == BasisIndex.MIX and tj == BasisIndex.MIX:
        if i.coord == j.coord:
            ct = component_level(level, i.coord)
            return BasisIndex.mix(i.coord, _prod1(ct, i.inner, j.inner))
        return socle_index(level)
    raise BadIndex("cannot multiply %s and %s" % (i, j))


def _prod_tuple(alg: Algebra, i: BasisIndex, j: BasisIndex) -> BasisIndex:
    level = alg.level
    ti, tj = i.tag, j.tag
    if ti == BasisIndex.PROD0 and tj == BasisIndex.PROD0:
        return BasisIndex.prod0(_prod1(level, i.inner, j.inner))
    if ti == BasisIndex.PROD0 and tj == BasisIndex.PRODMIX:
        return BasisIndex.prod0(_prod1(level, i.inner, socle_index(level)))
    if ti == BasisIndex.PRODMIX and tj == BasisIndex.PROD0:
        return BasisIndex.prod0(_prod1(level, j.inner, socle_index(level)))
    if ti == BasisIndex.PRODMIX and tj == BasisIndex.PRODMIX:
        if i.coord == j.coord:
            return BasisIndex.prodmix(i.coord, _prod1(level, i.inner, j.inner))
        return BasisIndex.prod0(socle_index(level))
    raise BadIndex("cannot multiply %s and %s at width %d" % (i, j, alg.width))


# -- coordinates and augmentation ---------------------------------------------


def to_basis_coords(x: AnyElement) -> Dict[BasisIndex, FieldValue]:
    """Finite basis expansion of x: the map idx -> coefficient with
    sum(basis_element(idx) * k) = x."""
    out: Dict[BasisIndex, FieldValue] = {}
    _expand(x, out)
    return {i: k for i, k in out.items() if not k.is_zero()}


def _acc(out, idx, k):
    cur = out.get(idx)
    out[idx] = k if cur is None else cur + k


def _expand(x: AnyElement, out: Dict[BasisIndex, FieldValue]):
    if isinstance(x, TupleElement):
        f = x.components[0].field
        for i, k in to_basis_coords(x.components[0]).items():
            _acc(out, BasisIndex.prod0(i), k)
        for fi in range(1, len(x.components)):
            inner = to_basis_coords(x.components[fi])
            total = f.zero()
            for i, k in inner.items():
                _acc(out, BasisIndex.prodmix(fi, i), k)
                total = total + k
            if not total.is_zero():
                _acc(out, BasisIndex.prod0(socle_index(x.level)), -total)
        return
    if not x.const.is_zero():
        _acc(out, _UNIT, x.const)
    if x.level.is_zero():
        return
    c0 = _coord0(x.level)
    f = x.field
    for c, d in x.dev:
        inner = to_basis_coords(d)
        if c == c0:
            for i, k in inner.items():
                _acc(out, BasisIndex.c0(i), k)
        else:
            total = f.zero()
            for i, k in inner.items():
                _acc(out, BasisIndex.mix(c, i), k)
                total = total + k
            if not total.is_zero():
                _acc(out, socle_index(x.level), -total)


def augmentation(x: AnyElement) -> FieldValue:
    """Coefficient sum of the basis expansion; a ring homomorphism onto K."""
    if isinstance(x, TupleElement):
        f = x.components[0].field
    else:
        f = x.field
    total = f.zero()
    for k in to_basis_coords(x).values():
        total = total + k
    return total


# -- verification drivers ------------------------------------------------------


def conormed_check(alg: Algebra, gamma: Ordinal, samples: int = 200,
                   seed: int = 0, **sample_kwargs) -> dict:
    """Sample elements of depth < gamma and verify that their basis
    expansions only ever touch basis elements of depth < gamma."""
    checked = 0
    for s in range(samples):
        x = random_element(alg, seed=seed * 100003 + s, **sample_kwargs)
        d = tuple_loewy_depth(x)
        if d is None or not d < gamma:
            continue
        checked += 1
        for idx, _k in to_basis_coords(x).items():
            bd = tuple_loewy_depth(basis_element(alg, idx))
            if bd is None or not bd < gamma:
                return {"passed": False, "checked": checked,
                        "counterexample": {"element_depth": str(d),
                                           "index": idx.literal(),
                                           "index_depth": str(bd)}}
    return {"passed": True, "checked": checked, "counterexample": None}


def closure_check(alg: Algebra, budget: BasisBudget = BasisBudget()) -> dict:
    """All pairwise products of enumerated basis elements stay in the basis
    and agree with the structural product rule."""
    if alg.width != 1:
        raise BadIndex("closure check runs on width-1 algebras")
    basis = enumerate_basis(alg, budget)
    total = 0
    for i, bi in basis:
        for j, bj in basis:
            total += 1
            prod = bi * bj
            m = basis_membership(prod)
            expected = basis_product(alg, i, j)
            if m != expected or basis_element(alg, expected) != prod:
                return {"passed": False, "pairs": total,
                        "counterexample": {"left": i.literal(), "right": j.literal(),
                                           "membership": m.literal() if m else None,
                                           "structural": expected.literal()}}
    return {"passed": True, "pairs": total, "counterexample": None}


# -- Boolean view ----------------------------------------------------------------


class BooleanView:
    """Boolean-ring operations, available over F_2 where every element is
    idempotent."""

    def __init__(self, alg: Algebra):
        if alg.field != Field.prime(2):
            raise UnsupportedField("Boolean view needs the field F2")
        self.alg = alg
        self._one = one(alg)

    def meet(self, x, y):
        return x * y

    def join(self, x, y):
        return x + y + x * y

    def complement(self, x):
        return self._one + x


# -- Cayley table -----------------------------------------------------------------


class CayleyTable:
    def __init__(self, indices: List[BasisIndex], rows: List[List[BasisIndex]]):
        self.indices = indices
        self.rows = rows

    def to_csv(self) -> str:
        header = [""] + [i.literal() for i in self.indices]
        lines = [",".join(header)]
        for i, row in zip(self.indices, self.rows):
            lines.append(",".join([i.literal()] + [c.literal() for c in row]))
        return "\n".join(lines) + "\n"

    def to_dot(self) -> str:
        """Hasse diagram of the meet order (i <= j iff i*j = i)."""
        idx = self.indices
        pos = {i: n for n, i in enumerate(idx)}
        below = {i: set() for i in idx}
        for r, i in enumerate(idx):
            for c, j in enumerate(idx):
                if i != j and self.rows[r][c] == i:
                    below[j].add(i)
        lines = ["digraph basis {", "  rankdir=BT;"]
        for i in idx:
            lines.append('  "%s";' % i.literal())
        for j in idx:
            for i in below[j]:
                if any(i in below[m] and m in below[j] for m in idx if m not in (i, j)):
                    continue  # not a covering pair
                lines.append('  "%s" -> "%s";' % (i.literal(), j.literal()))
        lines.append("}")
        return "\n".join(lines) + "\n"


def cayley_table(alg: Algebra, budget: BasisBudget = BasisBudget()) -> CayleyTable:
    if alg.width != 1:
        raise BadIndex("Cayley table runs on width-1 algebras")
    indices = [i for i, _ in enumerate_basis(alg, budget)]
    rows = [[basis_product(alg, i, j) for j in indices] for i in indices]
    return CayleyTable(indices, rows)


# -- finite products and the finite-field search -------------------------------------


def finite_product_basis(field: Field, n: int) -> List[Tuple[FieldValue, ...]]:
    """The strong multiplicative basis {1_0} + {1_0 + 1_i : 0 < i < n}
    of K^n, as explicit vectors."""
    if n < 1:
        raise ValueError("n must be >= 1")
    o, z = field.one(), field.zero()
    def vec(*ones):
        return tuple(o if i in ones else z for i in range(n))
    return [vec(0)] + [vec(0, i) for i in range(1, n)]


def finite_product_closure_ok(basis: Sequence[Tuple[FieldValue, ...]]) -> bool:
    bset = set(basis)
    for a in basis:
        for b in basis:
            if tuple(x * y for x, y in zip(a, b)) not in bset:
                return False
    return True


class TooLarge(ValueError):
    pass


class FiniteFieldTable:
    """GF(p^n) as int codes 0..p^n-1 (base-p digit vectors) with full
    addition and multiplication tables, built from the lexicographically
    first monic irreducible polynomial of degree n over F_p."""

    def __init__(self, p: int, n: int):
        from .fields import poly_mul, poly_divmod, poly_trim
        self.p, self.n, self.q = p, n, p ** n
        self.modulus = _first_irreducible(p, n)
        q = self.q
        self.add = [[self._vadd(a, b) for b in range(q)] for a in range(q)]
        mul = [[0] * q for _ in range(q)]
        for a in range(q):
            pa = self._decode(a)
            for b in range(a, q):
                _, r = poly_divmod(poly_mul(pa, self._decode(b), p), self.modulus, p)
                code = self._encode(r)
                mul[a][b] = mul[b][a] = code
        self.mul = mul

    def _decode(self, code):
        p, out = self.p, []
        for _ in range(self.n):
            out.append(code % p)
            code //= p
        from .fields import poly_trim
        return poly_trim(out)

    def _encode(self, poly):
        out = 0
        for c in reversed(poly):
            out = out * self.p + c
        return out

    def _vadd(self, a, b):
        p, out, mult = self.p, 0, 1
        for _ in range(self.n):
            out += ((a % p + b % p) % p) * mult
            a //= p
            b //= p
            mult *= p
        return out

    def scale(self, k: int, a: int) -> int:
        out = 0
        for _ in range(k % self.p):
            out = self.add[out][a]
        return out

    def element_str(self, code: int) -> str:
        from .fields import poly_str
        s = poly_str(self._decode(code))
        return s.replace("x", "a")


def _first_irreducible(p: int, n: int):
    from .fields import poly_divmod, poly_trim
    if n == 1:
        return (0, 1)
    def polys(deg):
        for code in range(p ** deg):
            out = []
            c = code
            for _ in range(deg):
                out.append(c % p)
                c //= p
            yield tuple(out) + (1,)
    lower = [f for d in range(1, n // 2 + 1) for f in polys(d)]
    for cand in polys(n):
        if all(poly_divmod(cand, f, p)[1] for f in lower):
            return cand
    raise RuntimeError("no irreducible of degree %d over F_%d" % (n, p))


def finite_field_mult_basis_search(p: int, n: int, bound: int = 256
                                   ) -> List[Tuple[int, ...]]:
    """Exhaustive search for multiplicative F_p-bases of GF(p^n).

    Returns each basis (a tuple of element codes, increasing) whose pairwise
    products all land in the basis or at 0.  Backtracking prunes candidate
    sets whose forced products can no longer be added.
    """
    q = p ** n
    if q > bound:
        raise TooLarge("p^n = %d exceeds bound %d" % (q, bound))
    table = FiniteFieldTable(p, n)
    results: List[Tuple[int, ...]] = []

    def span_of(codes):
        span = {0}
        for c in codes:
            extra = set()
            for s in span:
                acc = s
                for _ in range(p - 1):
                    acc = table.add[acc][c]
                    extra.add(acc)
            span |= extra
        return span

    def extend(chosen: List[int], span: set, pending: set, start: int):
        if len(chosen) == n:
            if pending - set(chosen):
                return
            cs = set(chosen)
            for a in chosen:
                for b in chosen:
                    pr = table.mul[a][b]
                    if pr != 0 and pr not in cs:
                        return
            results.append(tuple(sorted(chosen)))
            return
        for cand in range(start, q):
            if cand in span:
                continue
            new_chosen = chosen + [cand]
            new_span = span_of(new_chosen)
            new_pending = set(pending)
            new_pending.discard(cand)
            ok = True
            for b in new_chosen:
                pr = table.mul[cand][b]
                if pr == 0 or pr in new_chosen:
                    continue
                if pr in new_span or pr < cand:
                    ok = False  # can never be added later
                    break
                new_pending.add(pr)
            if not ok:
                continue
            outstanding = new_pending - set(new_chosen)
            if any(o in new_span or o <= cand for o in outstanding):
                continue
            if len(outstanding) > n - len(new_chosen):
                continue
            extend(new_chosen, new_span, new_pending, cand + 1)

    extend([], {0}, set(), 1)
    return results
