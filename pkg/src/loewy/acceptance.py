"""Self-verification suites.

Each ``suite_*`` function returns a Result; ``run_all`` executes every
suite in order.  The CLI ``selftest`` command and the test suite both call
into this module, so there is exactly one definition of what "passing"
means.  All sampling is deterministic.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Tuple

from .fields import Field, FieldValue
from .ordinals import Ordinal, ZERO, ONE, OMEGA, parse_ordinal
from .algebra import (Algebra, AnyElement, Element, TupleElement,
                      dimension_sequence, factor_equivalent, loewy_depth,
                      one, quasi_inverse, random_element, swallow_backward,
                      swallow_forward, tuple_loewy_depth, tuple_quasi_inverse,
                      unit_idempotent_factorization, zero)
from .basis import (BasisBudget, augmentation, basis_element,
                    basis_membership, basis_product,
                    cayley_table, enumerate_basis, finite_field_mult_basis_search,
                    finite_product_basis, finite_product_closure_ok,
                    to_basis_coords)


@dataclass
class Result:
    name: str
    passed: bool
    detail: str


FIELDS: List[Tuple[str, Field]] = [
    ("Q", Field.rationals()),
    ("F2", Field.prime(2)),
    ("F5", Field.prime(5)),
    ("F2(x)", Field.rational_functions(2)),
]

LEVELS: List[Ordinal] = [parse_ordinal(s) for s in
                         ["0", "1", "2", "3", "w", "w+1", "w+2", "w*2", "w^2"]]

WIDTHS = [1, 2]

SWALLOW_PAIRS = [(parse_ordinal(a), parse_ordinal(b)) for a, b in
                 [("0", "1"), ("0", "2"), ("1", "2"), ("2", "w"),
                  ("0", "w+2"), ("w", "w*2")]]

# sampling profile shared by the big suites: small elements, every field
_SAMPLE = dict(max_coord=2, depth_budget=1, density=0.3)


def _configs():
    for fname, f in FIELDS:
        for lvl in LEVELS:
            for w in WIDTHS:
                yield fname, Algebra(f, lvl, w)


def _sampler(alg: Algebra, seed: int):
    rng = random.Random(seed)
    def draw() -> AnyElement:
        return random_element(alg, seed=rng, **_SAMPLE)
    return draw


def _qi(x: AnyElement) -> AnyElement:
    return tuple_quasi_inverse(x) if isinstance(x, TupleElement) else quasi_inverse(x)


# -- 1: ring axioms -----------------------------------------------------------


def suite_ring_axioms(samples: int = 1000) -> Result:
    for fname, alg in _configs():
        draw = _sampler(alg, seed=101)
        u, z = one(alg), zero(alg)
        for _ in range(samples):
            x, y, w = draw(), draw(), draw()
            if ((x + y) + w != x + (y + w) or x + y != y + x
                    or (x * y) * w != x * (y * w) or x * y != y * x
                    or x * (y + w) != x * y + x * w
                    or x * u != x or x + z != x or x + (-x) != z):
                return Result("ring-axioms", False,
                              "axiom violated over %s level %s width %d"
                              % (fname, alg.level, alg.width))
    return Result("ring-axioms", True,
                  "%d triples x %d configurations" % (samples, 72))


# -- 2: regularity -------------------------------------------------------------


def suite_regularity(samples: int = 10000) -> Result:
    for fname, alg in _configs():
        draw = _sampler(alg, seed=202)
        u1 = one(alg)
        for _ in range(samples):
            x = draw()
            s = _qi(x)
            if x * s * x != x or s * x * s != s:
                return Result("regularity", False,
                              "quasi-inverse contract failed over %s level %s width %d"
                              % (fname, alg.level, alg.width))
            if alg.width == 1:
                u, e, v = unit_idempotent_factorization(x)
                if e * e != e or u * v != u1 or u * e != x:
                    return Result("regularity", False,
                                  "unit-idempotent factorization failed over %s level %s"
                                  % (fname, alg.level))
    return Result("regularity", True,
                  "%d elements x %d configurations" % (samples, 72))


# -- 3: Loewy depth and dimension sequences --------------------------------------


def suite_loewy_dimension(samples: int = 200) -> Result:
    for fname, alg in _configs():
        if tuple_loewy_depth(one(alg)) != alg.level:
            return Result("loewy-dimension", False,
                          "depth(one) != level over %s level %s width %d"
                          % (fname, alg.level, alg.width))
        ds = dimension_sequence(alg)
        if ds.level != alg.level or ds.top_dim != alg.width:
            return Result("loewy-dimension", False,
                          "dimension sequence mismatch at level %s width %d"
                          % (alg.level, alg.width))
        draw = _sampler(alg, seed=303)
        for _ in range(samples):
            x, y = draw(), draw()
            dx, dy = tuple_loewy_depth(x), tuple_loewy_depth(y)
            dsum = tuple_loewy_depth(x + y)
            dprod = tuple_loewy_depth(x * y)
            bound = _max_depth(dx, dy)
            if dsum is not None and (bound is None or bound < dsum):
                return Result("loewy-dimension", False,
                              "depth(x+y) exceeded max(depths) over %s level %s"
                              % (fname, alg.level))
            pbound = _min_depth(dx, dy)
            if dprod is not None and (pbound is None or pbound < dprod):
                return Result("loewy-dimension", False,
                              "depth(x*y) exceeded min(depths) over %s level %s"
                              % (fname, alg.level))
    return Result("loewy-dimension", True,
                  "unit depths, sequences, and sub-additivity on %d pairs/config"
                  % samples)


def _max_depth(a: Optional[Ordinal], b: Optional[Ordinal]) -> Optional[Ordinal]:
    if a is None:
        return b
    if b is None:
        return a
    return a if b < a else b


def _min_depth(a: Optional[Ordinal], b: Optional[Ordinal]) -> Optional[Ordinal]:
    if a is None or b is None:
        return None
    return a if a < b else b


# -- 4: strong multiplicative closure --------------------------------------------


def closure_budget(level: Ordinal, target: int = 50) -> BasisBudget:
    """Smallest budget of the standard shape reaching ``target`` indices
    (level 0 has a single basis element, so the target caps there)."""
    for mc in range(2, 80):
        b = BasisBudget(mc, None, 3)
        algq = Algebra(Field.rationals(), level, 1)
        if len(enumerate_basis(algq, b)) >= target or level.is_zero():
            return b
    return BasisBudget(79, None, 3)


def suite_closure(target: int = 50) -> Result:
    f = Field.rationals()
    total = 0
    for lvl in LEVELS:
        alg = Algebra(f, lvl, 1)
        budget = closure_budget(lvl, target)
        basis = enumerate_basis(alg, budget)
        if not lvl.is_zero() and len(basis) < target:
            return Result("closure", False,
                          "only %d indices at level %s" % (len(basis), lvl))
        elems = dict(basis)
        for i, bi in basis:
            if bi * bi != bi:
                return Result("closure", False,
                              "basis element %s not idempotent at level %s" % (i, lvl))
            for j, bj in basis:
                total += 1
                prod = bi * bj
                expected = basis_product(alg, i, j)
                # products may land on socle-chain indices deeper than the
                # enumeration window, so build the expected element on demand
                want = elems.get(expected)
                if want is None:
                    want = basis_element(alg, expected)
                if basis_membership(prod) != expected or want != prod:
                    return Result("closure", False,
                                  "product %s * %s escaped the basis at level %s"
                                  % (i, j, lvl))
    return Result("closure", True, "%d products verified" % total)


# -- 5: conormed property ----------------------------------------------------------


def _index_depth(level: Ordinal, width: int, idx) -> Optional[Ordinal]:
    """Loewy depth of basis_element(idx) computed from the index shape."""
    from .basis import BasisIndex, _component0_level
    if idx.tag == BasisIndex.UNIT:
        return level
    if idx.tag in (BasisIndex.PROD0, BasisIndex.PRODMIX):
        inner = _index_depth(level, 1, idx.inner)
        if idx.tag == BasisIndex.PRODMIX:
            return _max_depth(inner, ZERO)
        return inner
    if idx.tag == BasisIndex.C0:
        return _index_depth(_component0_level(level), 1, idx.inner)
    # Mix: socle idempotent part has depth 0
    clevel = level.predecessor() if level.is_successor() else idx.coord
    return _max_depth(ZERO, _index_depth(clevel, 1, idx.inner))


def suite_conormed(samples: int = 1000) -> Result:
    checked = 0
    for fname, alg in _configs():
        draw = _sampler(alg, seed=505)
        for _ in range(samples):
            x = draw()
            d = tuple_loewy_depth(x)
            if d is None:
                continue
            checked += 1
            for idx in to_basis_coords(x):
                bd = _index_depth(alg.level, alg.width, idx)
                if bd is None or d < bd:
                    return Result("conormed", False,
                                  "index %s of depth %s used for element of depth %s"
                                  " over %s level %s"
                                  % (idx, bd, d, fname, alg.level))
    return Result("conormed", True, "%d nonzero expansions checked" % checked)


# -- 6: swallow isomorphisms ---------------------------------------------------------


def suite_swallow(samples: int = 1000) -> Result:
    for fname, f in FIELDS:
        for beta, alpha in SWALLOW_PAIRS:
            small = Algebra(f, beta, 1)
            big = Algebra(f, alpha, 1)
            rng = random.Random(606)
            ub, ua = one(small), one(big)
            if swallow_forward(beta, ub, ua) != ua:
                return Result("swallow", False,
                              "unit not preserved for (%s,%s) over %s"
                              % (beta, alpha, fname))
            for _ in range(samples):
                x1 = random_element(small, seed=rng, **_SAMPLE)
                y1 = random_element(big, seed=rng, **_SAMPLE)
                x2 = random_element(small, seed=rng, **_SAMPLE)
                y2 = random_element(big, seed=rng, **_SAMPLE)
                z1 = swallow_forward(beta, x1, y1)
                z2 = swallow_forward(beta, x2, y2)
                if swallow_backward(beta, z1) != (x1, y1):
                    return Result("swallow", False,
                                  "backward(forward) != id for (%s,%s) over %s"
                                  % (beta, alpha, fname))
                if (swallow_forward(beta, x1 + x2, y1 + y2) != z1 + z2
                        or swallow_forward(beta, x1 * x2, y1 * y2) != z1 * z2):
                    return Result("swallow", False,
                                  "+/x not preserved for (%s,%s) over %s"
                                  % (beta, alpha, fname))
    return Result("swallow", True,
                  "%d pairs per (beta,alpha) per field" % samples)


# -- 7: finite fields at desk scale ----------------------------------------------------


def suite_finite_fields() -> Result:
    for p, n in [(2, 2), (2, 3), (3, 2)]:
        found = finite_field_mult_basis_search(p, n)
        if found:
            return Result("finite-fields", False,
                          "unexpected multiplicative basis of GF(%d^%d): %r"
                          % (p, n, found))
    for p in (2, 3, 5):
        if finite_field_mult_basis_search(p, 1) != [(1,)]:
            return Result("finite-fields", False,
                          "trivial basis of F_%d not found" % p)
    for _, f in FIELDS:
        for n in range(1, 7):
            basis = finite_product_basis(f, n)
            if len(basis) != n or not finite_product_closure_ok(basis):
                return Result("finite-fields", False,
                              "K^%d product basis failed closure over %s" % (n, f))
    return Result("finite-fields", True,
                  "GF(4),GF(8),GF(9) empty; trivial and K^n (n<=6) bases closed")


# -- 8: augmentation --------------------------------------------------------------------


def suite_augmentation(samples: int = 1000) -> Result:
    for fname, alg in _configs():
        draw = _sampler(alg, seed=808)
        f = alg.field
        if not augmentation(one(alg)).is_one():
            return Result("augmentation", False,
                          "augmentation(one) != 1 over %s level %s" % (fname, alg.level))
        for _ in range(samples):
            x, y = draw(), draw()
            ax, ay = augmentation(x), augmentation(y)
            if augmentation(x + y) != ax + ay or augmentation(x * y) != ax * ay:
                return Result("augmentation", False,
                              "homomorphism identity failed over %s level %s width %d"
                              % (fname, alg.level, alg.width))
    f = Field.rationals()
    for lvl in LEVELS:
        alg = Algebra(f, lvl, 1)
        for idx, b in enumerate_basis(alg, BasisBudget(3, None, 3)):
            if not augmentation(b).is_one():
                return Result("augmentation", False,
                              "augmentation(b(%s)) != 1 at level %s" % (idx, lvl))
    return Result("augmentation", True,
                  "%d pairs/config plus all enumerated basis elements" % samples)


# -- 9: twisted algebra -------------------------------------------------------------------


def suite_twisted(samples: int = 500) -> Result:
    from .twisted import (TwistedElement, psi_embed, t_dimension_sequence,
                          t_membership, t_one, t_quasi_inverse)
    f = Field.rational_functions(2)
    x = f.x()
    if t_membership(Element(ONE, (), x)):
        return Result("twisted", False, "tail x wrongly accepted as a square")
    sq = (x + f.one()) * (x + f.one())
    if not t_membership(Element(ONE, (), sq)):
        return Result("twisted", False, "tail (x+1)^2 wrongly rejected")
    alg = Algebra(f, ONE, 1)
    if not factor_equivalent(t_dimension_sequence(f), dimension_sequence(alg)):
        return Result("twisted", False, "dimension sequences not factor equivalent")
    rng = random.Random(909)
    if psi_embed(one(alg)) != t_one(f):
        return Result("twisted", False, "psi not unital")
    seen: Dict[TwistedElement, Element] = {}
    for _ in range(samples):
        a = random_element(alg, seed=rng, **_SAMPLE)
        b = random_element(alg, seed=rng, **_SAMPLE)
        pa, pb = psi_embed(a), psi_embed(b)
        if psi_embed(a + b) != pa + pb or psi_embed(a * b) != pa * pb:
            return Result("twisted", False, "psi not a ring homomorphism")
        prev = seen.get(pa)
        if prev is not None and prev != a:
            return Result("twisted", False, "psi not injective")
        seen[pa] = a
        s = t_quasi_inverse(pa)
        if pa * s * pa != pa or s * pa * s != s:
            return Result("twisted", False, "twisted quasi-inverse contract failed")
    return Result("twisted", True,
                  "membership witnesses, psi homomorphism/injectivity on %d pairs"
                  % samples)


# -- 10: injectivity verdicts ------------------------------------------------------------------


def suite_injectivity(samples: int = 100) -> Result:
    from .injectivity import (HomDescriptor, IdealDescriptor, MElement,
                              SupportDescriptor, SymbolicCardinal, Verdict,
                              baer_extend, gamma, m_membership,
                              strictness_witness)
    if gamma() != SymbolicCardinal.kappa_plus():
        return Result("injectivity", False, "gamma() != kappa+")
    for lam in [SymbolicCardinal.aleph(0), SymbolicCardinal.aleph(1),
                SymbolicCardinal.kappa()]:
        ideal, hom = strictness_witness(lam)
        if baer_extend(lam, ideal, hom).kind != Verdict.FAILS:
            return Result("injectivity", False,
                          "strictness witness did not fail at %s" % lam)
    f = Field.rationals()
    rng = random.Random(1010)
    lambdas = [SymbolicCardinal.aleph(0), SymbolicCardinal.aleph(2),
               SymbolicCardinal.kappa(), SymbolicCardinal.kappa_plus()]
    for _ in range(samples):
        coords = sorted(rng.sample(range(12), rng.randint(1, 4)))
        gens = [Element(ONE, ((c, Element(ZERO, (), f(1))),), f(0))
                for c in coords]
        table = {c: MElement.explicit({c: f(rng.randint(1, 9))})
                 for c in coords}
        lam = rng.choice(lambdas)
        verdict = baer_extend(lam, IdealDescriptor.finitely_generated(gens),
                              HomDescriptor.finite_table(table))
        if verdict.kind != Verdict.EXTENDS:
            return Result("injectivity", False,
                          "FG ideal with valid table did not extend at %s" % lam)
        w = verdict.witness
        if not m_membership(w, lam) or any(w.values.get(c) != table[c].values[c]
                                           for c in coords):
            return Result("injectivity", False, "witness failed re-verification")
    kp = SymbolicCardinal.kappa_plus()
    kp_queries = [
        (IdealDescriptor.socle_direct_sum(
            SupportDescriptor.symbolic(SymbolicCardinal.kappa())),
         HomDescriptor.inclusion()),
        (IdealDescriptor.socle_direct_sum(
            SupportDescriptor.symbolic(SymbolicCardinal.aleph(1))),
         HomDescriptor.inclusion()),
        (IdealDescriptor.socle_direct_sum(SupportDescriptor.explicit(range(5))),
         HomDescriptor.inclusion()),
    ]
    for ideal, hom in kp_queries:
        if baer_extend(kp, ideal, hom).kind == Verdict.FAILS:
            return Result("injectivity", False, "a kappa+ query failed")
    return Result("injectivity", True,
                  "gamma, strictness at aleph0/aleph1/kappa, %d FG queries" % samples)


# -- 11: CLI round-trip --------------------------------------------------------------------------


def random_ast(field: Field, rng: random.Random, depth: int = 3):
    from . import expr as E
    if depth <= 0 or rng.random() < 0.3:
        kind = rng.randrange(5)
        if kind == 0:
            return E.One()
        if kind == 1:
            return E.ZeroExpr()
        if kind == 2:
            return E.Idem(rng.randrange(4))
        if kind == 3:
            return E.BasisRef(rng.choice(["U", "C0.U", "M1.U", "M2.C0.U"]))
        return E.Scalar(_random_nonzeroish_scalar(field, rng))
    kind = rng.randrange(4)
    if kind == 0:
        return E.Add(random_ast(field, rng, depth - 1),
                     random_ast(field, rng, depth - 1))
    if kind == 1:
        return E.Mul(random_ast(field, rng, depth - 1),
                     random_ast(field, rng, depth - 1))
    if kind == 2:
        return E.Neg(random_ast(field, rng, depth - 1))
    entries = tuple((c, random_ast(field, rng, depth - 1))
                    for c in sorted(rng.sample(range(4), rng.randint(0, 2))))
    return E.Literal(entries, _random_nonzeroish_scalar(field, rng))


def _random_nonzeroish_scalar(field: Field, rng: random.Random) -> FieldValue:
    from fractions import Fraction
    if field.kind == Field.RATIONALS:
        return field(Fraction(rng.randint(-9, 9), rng.randint(1, 9)))
    if field.kind == Field.PRIME:
        return field(rng.randrange(field.p))
    p = field.p
    num = tuple(rng.randrange(p) for _ in range(rng.randint(1, 3)))
    den = (rng.randrange(1, p),) if rng.random() < 0.5 else (rng.randrange(p), 1)
    try:
        return field.ratfunc(num, den)
    except Exception:
        return field.one()


def suite_cli_roundtrip(samples: int = 1000) -> Result:
    from .expr import parse, print_expr
    rng = random.Random(1111)
    for i in range(samples):
        _, field = FIELDS[i % len(FIELDS)]
        ast = random_ast(field, rng)
        text = print_expr(ast)
        back = parse(text, field)
        if back != ast:
            return Result("cli-roundtrip", False,
                          "round-trip broke on %r over %s" % (text, field))
    return Result("cli-roundtrip", True, "%d ASTs round-tripped" % samples)


SUITES: List[Callable[[], Result]] = [
    suite_ring_axioms,
    suite_regularity,
    suite_loewy_dimension,
    suite_closure,
    suite_conormed,
    suite_swallow,
    suite_finite_fields,
    suite_augmentation,
    suite_twisted,
    suite_injectivity,
    suite_cli_roundtrip,
]


def run_all(progress: Optional[Callable[[Result], None]] = None) -> List[Result]:
    out = []
    for suite in SUITES:
        r = suite()
        out.append(r)
        if progress is not None:
            progress(r)
    return out
