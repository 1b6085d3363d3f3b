"""Presented cohomology rings of BT^1 and BT^2 and their module bases.

The BT^1 ring is a three-rule reduction system over the point coefficients.
The BT^2 ring is presented two ways:

* the two-level system: twelve rules whose coefficients are BT^1 ring
  elements, certified confluent by the overlap check,
* a flat facade over the point coefficients whose normalization routes
  every element through the two-level system and expands the BT^1
  coefficients afterwards.

Normal forms of the flat facade are exactly the products of a BT^1 basis
monomial (in zeta00*zeta01, zeta10*zeta11, cw1, cxw1) with a two-level
basis monomial; ``is_basis_monomial`` decides membership directly and the
basis enumerators reproduce the published RO(C2)-page grids.

A genuinely flat 13-rule reduction system whose left sides are the 13
excluded monomials cannot exist: the span of the would-be irreducible
monomials misses the rank-1 piece in grading 4*sigma (see
``flat_rule_obstruction``).  ``build_flat_rewrite_system`` performs the
mechanical derivation anyway and fails with the precise offending rule.
"""

from __future__ import annotations

import itertools
import random

from .grading import GradingBT1, GradingBT2, embed_bt1_pi1
from .hcoeff import HCoeff, Laurent1
from .rewrite import (GeneratorSet, OrderViolation, Reduction, RewriteSystem,
                      mono_mul)


class UndecidableEqualityError(ValueError):
    """Equality question posed where the deciding map is not injective."""


# ----------------------------------------------------------------------
# scalar variants: the point coefficients and their two base changes
# ----------------------------------------------------------------------

class ScalarsH:
    name = "h"

    @staticmethod
    def from_h(c):
        return c

    @staticmethod
    def one():
        return HCoeff.one()


class ScalarsRho:
    """Z[iota^{+-1}], the nonequivariant point coefficients."""
    name = "rho"

    @staticmethod
    def from_h(c):
        return c.rho()

    @staticmethod
    def one():
        return Laurent1.one("iota")


class ScalarsPhi:
    """Z[e^{+-1}], the fixed-point point coefficients."""
    name = "phi"

    @staticmethod
    def from_h(c):
        return c.phi()

    @staticmethod
    def one():
        return Laurent1.one("e")


# ----------------------------------------------------------------------
# BT^1
# ----------------------------------------------------------------------

W0 = GradingBT1(m0=1)
W1 = GradingBT1(m1=1)
GRAD_CW = GradingBT1(2, 0, m1=1)    # 2 + W1
GRAD_CXW = GradingBT1(2, 0, m0=1)   # 2 + W0

BT1_NAMES = ("z0", "z1", "cxw", "cw")
BT1_WEIGHTS = (1, 1, 2, 2)
BT1_GRADINGS = (W0, W1, GRAD_CXW, GRAD_CW)


class BT1Ring:
    """H(BT^1): generators z0, z1, cw, cxw with three reductions."""

    def __init__(self, scalars=ScalarsH):
        self.scalars = scalars
        self.gens = GeneratorSet(BT1_NAMES, BT1_WEIGHTS, BT1_GRADINGS)
        sc = scalars.from_h
        m = self.gens.monomial
        one = self.gens.one()
        rules = [
            Reduction(m(z0=1, z1=1), [(sc(HCoeff.xi()), one)], "bt1:z0z1"),
            Reduction(m(z1=1, cxw=1),
                      [(sc(HCoeff.one() - HCoeff.kappa()), m(z0=1, cw=1)),
                       (sc(HCoeff.e(2)), one)],
                      "bt1:z1cxw"),
            Reduction(m(z0=2, cw=1),
                      [(sc(HCoeff.xi()), m(cxw=1)),
                       (sc(-(HCoeff.one() - HCoeff.kappa()) * HCoeff.e(2)),
                        m(z0=1))],
                      "bt1:z0z0cw"),
        ]
        grading_fn = _h_coeff_grading_bt1 if scalars is ScalarsH else None
        self.system = RewriteSystem(self.gens, rules, coeff_grading=grading_fn)

    def element(self, poly):
        return BT1Element(self, self.system.reduce(dict(poly)))

    def raw(self, poly):
        return BT1Element(self, dict(poly), normalized=True)

    def zero(self):
        return BT1Element(self, {})

    def scalar(self, c):
        if isinstance(c, HCoeff):
            c = self.scalars.from_h(c)
        return self.element({self.gens.one(): c})

    def one(self):
        return self.scalar(HCoeff.one())

    def gen(self, name, power=1):
        return self.element({self.gens.monomial(**{name: power}):
                             self.scalars.one()})

    def monomial_grading(self, m):
        return self.gens.grading(m)


def _h_coeff_grading_bt1(c):
    a, b = c.grading if c.grading is not None else (0, 0)
    return GradingBT1(a, b)


class BT1Element:
    """Ring element kept in normal form."""

    __slots__ = ("ring", "poly")

    def __init__(self, ring, poly, normalized=False):
        if not normalized:
            poly = ring.system.reduce(poly)
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "poly", poly)

    def __setattr__(self, name, value):
        raise AttributeError("BT1Element is immutable")

    def is_zero(self):
        return not self.poly

    def __eq__(self, other):
        if isinstance(other, int):
            if other == 0:
                return self.is_zero()
            other = self.ring.scalar(HCoeff.from_int(other))
        return isinstance(other, BT1Element) and self.poly == other.poly

    def __hash__(self):
        return hash(frozenset((m, _freeze(c)) for m, c in self.poly.items()))

    def __add__(self, other):
        return BT1Element(self.ring, self.ring.system.add(self.poly, other.poly),
                          normalized=True)

    def __neg__(self):
        return BT1Element(self.ring, {m: -c for m, c in self.poly.items()},
                          normalized=True)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (HCoeff, Laurent1, int)):
            if isinstance(other, int):
                other = HCoeff.from_int(other)
            if isinstance(other, HCoeff):
                other = self.ring.scalars.from_h(other)
            out = {}
            for m, c in self.poly.items():
                p = c * other
                if not _sc_is_zero(p):
                    out[m] = p
            return BT1Element(self.ring, out)
        acc = {}
        sys = self.ring.system
        for m1, c1 in self.poly.items():
            for m2, c2 in other.poly.items():
                p = c1 * c2
                if _sc_is_zero(p):
                    continue
                key = mono_mul(m1, m2)
                if key in acc:
                    acc[key] = acc[key] + p
                else:
                    acc[key] = p
        acc = {m: c for m, c in acc.items() if not _sc_is_zero(c)}
        return BT1Element(self.ring, sys.reduce(acc), normalized=True)

    __rmul__ = __mul__

    def grading(self):
        """Common grading of all terms, None for 0; raises if mixed."""
        g = None
        for m, c in self.poly.items():
            mg = self.ring.monomial_grading(m)
            if isinstance(c, HCoeff):
                a, b = c.grading if c.grading is not None else (0, 0)
                mg = mg + GradingBT1(a, b)
            if g is None:
                g = mg
            elif g != mg:
                raise ValueError("inhomogeneous element")
        return g

    def __str__(self):
        from .expr import format_element
        return format_element(self.poly, self.ring.gens)

    __repr__ = __str__


def _sc_is_zero(c):
    return c.is_zero() if hasattr(c, "is_zero") else c == 0


def _freeze(c):
    return c


# ----------------------------------------------------------------------
# BT^2, two-level presentation over BT^1
# ----------------------------------------------------------------------

W00 = GradingBT2(m00=1)
W01 = GradingBT2(m01=1)
W10 = GradingBT2(m10=1)
W11 = GradingBT2(m11=1)
GRAD_CW1 = GradingBT2(2, 0, m10=1, m11=1)
GRAD_CXW1 = GradingBT2(2, 0, m00=1, m01=1)
GRAD_CW2 = GradingBT2(2, 0, m01=1, m11=1)
GRAD_CXW2 = GradingBT2(2, 0, m00=1, m10=1)
GRAD_CT = GradingBT2(2, 0, m01=1, m10=1)
GRAD_CXT = GradingBT2(2, 0, m00=1, m11=1)

TWO_NAMES = ("z00", "z01", "z10", "z11", "cxw2", "cw2", "cxT", "cT")
TWO_WEIGHTS = (1, 1, 1, 1, 2, 2, 4, 4)
TWO_GRADINGS = (W00, W01, W10, W11, GRAD_CXW2, GRAD_CW2, GRAD_CXT, GRAD_CT)


class BT2TwoLevel:
    """The twelve-rule system over the BT^1 coefficient ring."""

    def __init__(self, bt1):
        self.bt1 = bt1
        self.gens = GeneratorSet(TWO_NAMES, TWO_WEIGHTS, TWO_GRADINGS)
        m = self.gens.monomial
        one_m = self.gens.one()

        z0 = bt1.gen("z0")
        z1 = bt1.gen("z1")
        cw = bt1.gen("cw")
        cxw = bt1.gen("cxw")
        one = bt1.one()
        kbar = bt1.scalar(HCoeff.one() - HCoeff.kappa())     # 1 - kappa
        e2 = bt1.scalar(HCoeff.e(2))
        t2 = bt1.scalar(HCoeff.t(2))
        eps1 = bt1.scalar(HCoeff.u(1)) * z0 * cw
        ebar = one - eps1                                     # 1 - eps1
        kebar = kbar * ebar                                   # (1-k)(1-eps1)

        rules = [
            Reduction(m(z00=1, z01=1), [(z0, one_m)], "R1"),
            Reduction(m(z10=1, z11=1), [(z1, one_m)], "R2"),
            Reduction(m(z01=1, z11=1, cxw2=1),
                      [(kbar, m(z00=1, z10=1, cw2=1)), (e2, one_m)], "R3"),
            Reduction(m(z00=2, cw2=1),
                      [(z0, m(cxT=1)), (-(kebar * cxw), m(z00=1, z11=1))],
                      "R4"),
            Reduction(m(z10=2, cw2=1),
                      [(z1, m(cT=1)), (-(ebar * cw), m(z01=1, z10=1))], "R5"),
            Reduction(m(z01=2, cxw2=1),
                      [(z0, m(cT=1)), (-(kebar * cxw), m(z01=1, z10=1))],
                      "R6"),
            Reduction(m(z11=2, cxw2=1),
                      [(z1, m(cxT=1)), (-(ebar * cw), m(z00=1, z11=1))], "R7"),
            Reduction(m(z00=1, cT=1),
                      [(cxw, m(z10=1)), (kebar, m(z01=1, cxw2=1))], "R8"),
            Reduction(m(z11=1, cT=1),
                      [(cw, m(z01=1)), (ebar, m(z10=1, cw2=1))], "R9"),
            Reduction(m(z01=1, cxT=1),
                      [(cxw, m(z11=1)), (kebar, m(z00=1, cw2=1))], "R10"),
            Reduction(m(z10=1, cxT=1),
                      [(cw, m(z00=1)), (ebar, m(z11=1, cxw2=1))], "R11"),
            Reduction(m(cT=1, cxT=1),
                      [(cw * cxw, one_m), (one, m(cw2=1, cxw2=1)),
                       (t2 * z0 * cw, m(z00=1, z10=1, cw2=1))], "R12"),
        ]
        grading_fn = None
        if bt1.scalars is ScalarsH:
            grading_fn = lambda c: embed_bt1_pi1(c.grading())
        self.system = RewriteSystem(self.gens, rules, coeff_grading=grading_fn)

    def element(self, poly):
        return TwoLevelElement(self, self.system.reduce(dict(poly)))

    def zero(self):
        return TwoLevelElement(self, {})

    def gen(self, name, power=1):
        return self.element({self.gens.monomial(**{name: power}):
                             self.bt1.one()})

    def scalar(self, c):
        return self.element({self.gens.one(): self.bt1.scalar(c)})


class TwoLevelElement:
    __slots__ = ("ring", "poly")

    def __init__(self, ring, poly, normalized=False):
        if not normalized:
            poly = ring.system.reduce(poly)
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "poly", poly)

    def __setattr__(self, name, value):
        raise AttributeError("TwoLevelElement is immutable")

    def is_zero(self):
        return not self.poly

    def __eq__(self, other):
        return isinstance(other, TwoLevelElement) and self.poly == other.poly

    def __add__(self, other):
        return TwoLevelElement(self.ring,
                               self.ring.system.add(self.poly, other.poly),
                               normalized=True)

    def __neg__(self):
        return TwoLevelElement(self.ring,
                               {m: -c for m, c in self.poly.items()},
                               normalized=True)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        acc = {}
        for m1, c1 in self.poly.items():
            for m2, c2 in other.poly.items():
                p = c1 * c2
                if p.is_zero():
                    continue
                key = mono_mul(m1, m2)
                acc[key] = acc[key] + p if key in acc else p
        acc = {m: c for m, c in acc.items() if not c.is_zero()}
        return TwoLevelElement(self.ring, acc)

    def grading(self):
        g = None
        for m, c in self.poly.items():
            mg = self.ring.gens.grading(m) + embed_bt1_pi1(c.grading())
            if g is None:
                g = mg
            elif g != mg:
                raise ValueError("inhomogeneous element")
        return g


# ----------------------------------------------------------------------
# BT^2, flat facade over the point coefficients
# ----------------------------------------------------------------------

FLAT_NAMES = ("z00", "z01", "z10", "z11", "cxw1", "cw1", "cxw2", "cw2",
              "cxT", "cT")
FLAT_WEIGHTS = (1, 1, 1, 1, 2, 2, 2, 2, 4, 4)
FLAT_GRADINGS = (W00, W01, W10, W11, GRAD_CXW1, GRAD_CW1, GRAD_CXW2,
                 GRAD_CW2, GRAD_CXT, GRAD_CT)

# flat exponent positions
_A, _B, _C, _D, _L1, _K1, _L2, _K2, _X, _T = range(10)
# two-level positions of the flat indices other than cw1/cxw1
_TWO_OF_FLAT = {_A: 0, _B: 1, _C: 2, _D: 3, _L2: 4, _K2: 5, _X: 6, _T: 7}


def is_basis_monomial(m):
    """Membership in the module basis of the flat ring over the point.

    A monomial is basic iff its unique factorization into a BT^1 part
    (all powers of z00*z01, z10*z11, cw1, cxw1) and a two-level part is
    basic on both levels.
    """
    A, B, C, D, l1, k1, l2, k2, x, t = m
    alpha = min(A, B)
    beta = min(C, D)
    if alpha >= 1 and beta >= 1:
        return False            # z0 * z1
    if beta >= 1 and l1 >= 1:
        return False            # z1 * cxw
    if alpha >= 2 and k1 >= 1:
        return False            # z0^2 * cw
    i, j = A - alpha, B - alpha
    mp, np_ = C - beta, D - beta
    if j >= 1 and np_ >= 1 and l2 >= 1:
        return False            # z01 z11 cxw2
    if (i >= 2 or mp >= 2) and k2 >= 1:
        return False            # z00^2 cw2, z10^2 cw2
    if (j >= 2 or np_ >= 2) and l2 >= 1:
        return False            # z01^2 cxw2, z11^2 cxw2
    if (i >= 1 or np_ >= 1) and t >= 1:
        return False            # z00 cT, z11 cT
    if (j >= 1 or mp >= 1) and x >= 1:
        return False            # z01 cxT, z10 cxT
    if t >= 1 and x >= 1:
        return False            # cT cxT
    return True


class FlatRing:
    """H(BT^2) with point-ring coefficients; normalization is delegated
    to the two-level system and the results expanded back."""

    def __init__(self, scalars=ScalarsH):
        self.scalars = scalars
        self.bt1 = BT1Ring(scalars)
        self.two = BT2TwoLevel(self.bt1)
        self.gens = GeneratorSet(FLAT_NAMES, FLAT_WEIGHTS, FLAT_GRADINGS)

    # conversions ------------------------------------------------------
    def unflatten(self, poly):
        acc = {}
        for m, c in poly.items():
            coeff = self.bt1.raw({(0, 0, m[_L1], m[_K1]): c})
            key = (m[_A], m[_B], m[_C], m[_D], m[_L2], m[_K2], m[_X], m[_T])
            acc[key] = acc[key] + coeff if key in acc else coeff
        return {m: c for m, c in acc.items() if not c.is_zero()}

    def flatten(self, two_poly):
        out = {}
        for m2, coeff in two_poly.items():
            for m1, c in coeff.poly.items():
                alpha, beta, l1, k1 = m1
                flat = (m2[0] + alpha, m2[1] + alpha, m2[2] + beta,
                        m2[3] + beta, l1, k1, m2[4], m2[5], m2[6], m2[7])
                out[flat] = out[flat] + c if flat in out else c
        return {m: c for m, c in out.items() if not _sc_is_zero(c)}

    def reduce(self, poly):
        return self.flatten(self.two.system.reduce(self.unflatten(poly)))

    # constructors -----------------------------------------------------
    def element(self, poly):
        return FlatElement(self, self.reduce(poly))

    def raw_element(self, poly):
        """No normalization; for stating relations verbatim."""
        return dict(poly)

    def zero(self):
        return FlatElement(self, {})

    def one(self):
        return self.scalar(HCoeff.one())

    def scalar(self, c):
        if isinstance(c, HCoeff):
            c = self.scalars.from_h(c)
        if _sc_is_zero(c):
            return self.zero()
        return FlatElement(self, {self.gens.one(): c}, normalized=True)

    def gen(self, name, power=1):
        return self.element({self.gens.monomial(**{name: power}):
                             self.scalars.one()})

    def monomial(self, **exps):
        return self.element({self.gens.monomial(**exps): self.scalars.one()})

    def monomial_grading(self, m):
        return self.gens.grading(m)


class FlatElement:
    __slots__ = ("ring", "poly")

    def __init__(self, ring, poly, normalized=False):
        if not normalized:
            poly = ring.reduce(poly)
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "poly", poly)

    def __setattr__(self, name, value):
        raise AttributeError("FlatElement is immutable")

    def is_zero(self):
        return not self.poly

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return self.is_zero()
        return isinstance(other, FlatElement) and self.poly == other.poly

    def __add__(self, other):
        if isinstance(other, int):
            other = self.ring.scalar(HCoeff.from_int(other))
        out = dict(self.poly)
        for m, c in other.poly.items():
            if m in out:
                s = out[m] + c
                if _sc_is_zero(s):
                    del out[m]
                else:
                    out[m] = s
            else:
                out[m] = c
        return FlatElement(self.ring, out, normalized=True)

    __radd__ = __add__

    def __neg__(self):
        return FlatElement(self.ring, {m: -c for m, c in self.poly.items()},
                           normalized=True)

    def __sub__(self, other):
        if isinstance(other, int):
            other = self.ring.scalar(HCoeff.from_int(other))
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (HCoeff, int)):
            if isinstance(other, int):
                other = HCoeff.from_int(other)
            other = self.ring.scalar(other)
        if isinstance(other, Laurent1):
            other = FlatElement(self.ring, {self.ring.gens.one(): other},
                                normalized=True)
        acc = {}
        for m1, c1 in self.poly.items():
            for m2, c2 in other.poly.items():
                p = c1 * c2
                if _sc_is_zero(p):
                    continue
                key = mono_mul(m1, m2)
                acc[key] = acc[key] + p if key in acc else p
        acc = {m: c for m, c in acc.items() if not _sc_is_zero(c)}
        return FlatElement(self.ring, acc)

    __rmul__ = __mul__

    def __pow__(self, n):
        out = self.ring.one()
        for _ in range(n):
            out = out * self
        return out

    def grading(self):
        g = None
        for m, c in self.poly.items():
            mg = self.ring.monomial_grading(m)
            if isinstance(c, HCoeff):
                a, b = c.grading if c.grading is not None else (0, 0)
                mg = mg + GradingBT2(a, b)
            if g is None:
                g = mg
            elif g != mg:
                raise ValueError("inhomogeneous element")
        return g

    def map_coefficients(self, fn, target_ring):
        out = {}
        for m, c in self.poly.items():
            v = fn(c)
            if not _sc_is_zero(v):
                out[m] = v
        return FlatElement(target_ring, out)

    def __str__(self):
        from .expr import format_element
        return format_element(self.poly, self.ring.gens)

    __repr__ = __str__


# cached ring instances --------------------------------------------------

_CACHE = {}


def flat_ring(variant="h"):
    if variant not in _CACHE:
        scalars = {"h": ScalarsH, "rho": ScalarsRho, "phi": ScalarsPhi}[variant]
        _CACHE[variant] = FlatRing(scalars)
    return _CACHE[variant]


def bt1_ring(variant="h"):
    return flat_ring(variant).bt1


def bt2_two_level(variant="h"):
    return flat_ring(variant).two


def multiply(x, y):
    """Normal form of a product of ring elements."""
    return x * y


# ----------------------------------------------------------------------
# the defining relations (both models must send each difference to 0)
# ----------------------------------------------------------------------

def defining_relations(ring=None):
    """The eight relations as (name, lhs_poly, rhs_poly) raw flat data."""
    R = ring or flat_ring("h")
    m = R.gens.monomial
    sc = R.scalars.from_h
    one = HCoeff.one()
    kbar = one - HCoeff.kappa()
    e2 = HCoeff.e(2)
    u1 = HCoeff.u(1)
    rels = [
        ("prod-zeta", {m(z00=1, z01=1, z10=1, z11=1): sc(one)},
         {R.gens.one(): sc(HCoeff.xi())}),
        ("cxw1", {m(z10=1, z11=1, cxw1=1): sc(one)},
         {m(z00=1, z01=1, cw1=1): sc(kbar), R.gens.one(): sc(e2)}),
        ("cxw2", {m(z01=1, z11=1, cxw2=1): sc(one)},
         {m(z00=1, z10=1, cw2=1): sc(kbar), R.gens.one(): sc(e2)}),
        ("z00cT", {m(z00=1, cT=1): sc(one)},
         {m(z10=1, cxw1=1): sc(one), m(z01=1, cxw2=1): sc(one),
          m(z01=1, z10=1, z11=1, cxw1=1, cxw2=1): sc(-u1)}),
        ("z11cT", {m(z11=1, cT=1): sc(one)},
         {m(z01=1, cw1=1): sc(one), m(z10=1, cw2=1): sc(one),
          m(z00=1, z01=1, z10=1, cw1=1, cw2=1): sc(-u1)}),
        ("z01cxT", {m(z01=1, cxT=1): sc(one)},
         {m(z11=1, cxw1=1): sc(one), m(z00=1, cw2=1): sc(one),
          m(z00=1, z10=1, z11=1, cxw1=1, cw2=1): sc(-u1)}),
        ("z10cxT", {m(z10=1, cxT=1): sc(one)},
         {m(z00=1, cw1=1): sc(one), m(z11=1, cxw2=1): sc(one),
          m(z00=1, z01=1, z11=1, cw1=1, cxw2=1): sc(-u1)}),
        ("cTcxT", {m(cT=1, cxT=1): sc(one)},
         {m(cw1=1, cxw1=1): sc(one), m(cw2=1, cxw2=1): sc(one),
          m(z00=2, z01=1, z10=1, cw1=1, cw2=1): sc(HCoeff.t(2))}),
    ]
    return rels


def bt1_relations(ring=None):
    """The two BT^1 relations as raw (name, lhs, rhs) over z0,z1,cw,cxw."""
    R = ring or bt1_ring("h")
    m = R.gens.monomial
    sc = R.scalars.from_h
    one = HCoeff.one()
    return [
        ("z0z1", {m(z0=1, z1=1): sc(one)}, {R.gens.one(): sc(HCoeff.xi())}),
        ("z1cxw", {m(z1=1, cxw=1): sc(one)},
         {m(z0=1, cw=1): sc(one - HCoeff.kappa()),
          R.gens.one(): sc(HCoeff.e(2))}),
    ]


# ----------------------------------------------------------------------
# module bases and RO(C2)-page grids
# ----------------------------------------------------------------------

MAX_EXPONENT = 64


class WindowError(ValueError):
    """Enumeration window exceeds the configured resource bounds."""


def _compositions(total, parts):
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def _zeta_solve(remaining):
    """Exponents (A, B, C, D) with canonical grading equal to `remaining`,
    or None.  The Omega11 power D is pinned by the integer part."""
    if remaining.a % 2 or remaining.b != -remaining.a:
        return None
    d = -remaining.a // 2
    a = remaining.m00 + d
    b = remaining.m01 + d
    c = remaining.m10 + d
    if min(a, b, c, d) < 0:
        return None
    if max(a, b, c, d) > MAX_EXPONENT:
        raise WindowError("zeta exponent beyond cap %d" % MAX_EXPONENT)
    return (a, b, c, d)


def basis_monomials_in_grading(g):
    """All basis monomials of the flat ring with grading exactly g."""
    rho = g.rho_deg()
    if rho < 0 or rho % 2:
        return []
    out = []
    ring = flat_ring("h")
    for l1, k1, l2, k2, x, t in _compositions(rho // 2, 6):
        cpart = (GRAD_CXW1 * l1 + GRAD_CW1 * k1 + GRAD_CXW2 * l2 +
                 GRAD_CW2 * k2 + GRAD_CXT * x + GRAD_CT * t)
        zeta = _zeta_solve(g - cpart)
        if zeta is None:
            continue
        A, B, C, D = zeta
        m = (A, B, C, D, l1, k1, l2, k2, x, t)
        if is_basis_monomial(m):
            out.append(m)
    out.sort(key=ring.gens.sort_key)
    return out


def basis_enumerate(coset, window):
    """Basis monomials grouped by RO(C2) offset inside the window.

    `coset` is a GradingBT2; `window` is (a_min, a_max, b_min, b_max) for
    the offsets a + b*sigma.  Returns {(a, b): [monomials]} with empty
    cells omitted.
    """
    a_min, a_max, b_min, b_max = window
    if a_max < a_min or b_max < b_min:
        return {}
    ncells = (a_max - a_min + 1) * (b_max - b_min + 1)
    if ncells > 20000:
        raise WindowError("window of %d cells exceeds the resource bound"
                          % ncells)
    out = {}
    for a in range(a_min, a_max + 1):
        for b in range(b_min, b_max + 1):
            monos = basis_monomials_in_grading(coset + GradingBT2(a, b))
            if monos:
                out[(a, b)] = monos
    return out


def basis_count_grid(coset, window):
    return {cell: len(monos)
            for cell, monos in basis_enumerate(coset, window).items()}


def bt1_basis_monomials_in_grading(g):
    """BT^1 basis monomials (exclusions z0z1, z1cxw, z0^2cw) in grading g."""
    rho = g.rho_deg()
    if rho < 0 or rho % 2:
        return []
    ring = bt1_ring("h")
    out = []
    for l, k in _compositions(rho // 2, 2):
        cpart = GRAD_CXW * l + GRAD_CW * k
        rem = g - cpart
        # zeta part alpha*W0 + beta*W1, canonical: -2*beta + 2*beta*s
        #   + (alpha-beta)*W0
        if rem.a % 2 or rem.b != -rem.a:
            continue
        beta = -rem.a // 2
        alpha = rem.m0 + beta
        if alpha < 0 or beta < 0:
            continue
        if alpha >= 1 and beta >= 1:
            continue
        if beta >= 1 and l >= 1:
            continue
        if alpha >= 2 and k >= 1:
            continue
        out.append(ring.gens.monomial(z0=alpha, z1=beta, cxw=l, cw=k))
    out.sort(key=ring.gens.sort_key)
    return out


def bt1_basis_count(coset, window):
    a_min, a_max, b_min, b_max = window
    out = {}
    for a in range(a_min, a_max + 1):
        for b in range(b_min, b_max + 1):
            monos = bt1_basis_monomials_in_grading(coset + GradingBT1(a, b))
            if monos:
                out[(a, b)] = len(monos)
    return out


def kunneth_convolution(alpha, beta, window):
    """Predicted BT^2 counts for the SRO coset pi1*(alpha) + pi2*(beta) by
    convolving two BT^1 count grids over RO(C2) splittings."""
    a_min, a_max, b_min, b_max = window
    # factor windows wide enough that every contributing splitting lands
    # inside them (counts vanish at negative underlying degree, so a
    # symmetric margin suffices)
    w = abs(a_min) + abs(a_max) + abs(b_min) + abs(b_max) + 8
    wide = (-w, w, -w, w)
    g1 = bt1_basis_count(alpha, wide)
    g2 = bt1_basis_count(beta, wide)
    out = {}
    for (a1, b1), c1 in g1.items():
        for (a2, b2), c2 in g2.items():
            a, b = a1 + a2, b1 + b2
            if a_min <= a <= a_max and b_min <= b <= b_max:
                out[(a, b)] = out.get((a, b), 0) + c1 * c2
    return out


# ----------------------------------------------------------------------
# the impossible flat reduction system, derived mechanically
# ----------------------------------------------------------------------

FORBIDDEN_FLAT = (
    ("z00*z01*z10*z11", dict(z00=1, z01=1, z10=1, z11=1)),
    ("z10*z11*cxw1", dict(z10=1, z11=1, cxw1=1)),
    ("z01*z11*cxw2", dict(z01=1, z11=1, cxw2=1)),
    ("z00^2*z01^2*cw1", dict(z00=2, z01=2, cw1=1)),
    ("z00^2*cw2", dict(z00=2, cw2=1)),
    ("z10^2*cw2", dict(z10=2, cw2=1)),
    ("z01^2*cxw2", dict(z01=2, cxw2=1)),
    ("z11^2*cxw2", dict(z11=2, cxw2=1)),
    ("z00*cT", dict(z00=1, cT=1)),
    ("z11*cT", dict(z11=1, cT=1)),
    ("z01*cxT", dict(z01=1, cxT=1)),
    ("z10*cxT", dict(z10=1, cxT=1)),
    ("cT*cxT", dict(cT=1, cxT=1)),
)


def derive_flat_rule_candidates():
    """For each excluded monomial, its basis expansion via the two-level
    system: the only possible right side for a monic flat rule."""
    R = flat_ring("h")
    out = []
    for name, exps in FORBIDDEN_FLAT:
        lhs = R.gens.monomial(**exps)
        rhs = R.element({lhs: R.scalars.one()})
        out.append((name, lhs, rhs))
    return out


def build_flat_rewrite_system():
    """Assemble the 13 derived rules into a RewriteSystem.

    This raises OrderViolation: the expansions of z00^2*cw2 and z01*cxT
    force opposite weight inequalities, so no monomial order makes all
    thirteen rules descending (see flat_rule_obstruction for the module
    level obstruction).
    """
    R = flat_ring("h")
    reductions = []
    for name, lhs, rhs in derive_flat_rule_candidates():
        reductions.append(Reduction(lhs, [(c, m) for m, c in rhs.poly.items()],
                                    "flat:" + name))
    return RewriteSystem(R.gens, reductions,
                         coeff_grading=lambda c: _h_grading_bt2(c))


def _h_grading_bt2(c):
    a, b = c.grading if c.grading is not None else (0, 0)
    return GradingBT2(a, b)


def flat_rule_obstruction():
    """Module-level witness that no 13-rule flat system can be confluent.

    In grading 4*sigma the ring is free of rank 1 (both the Kunneth count
    and the published grid give 1, basis monomial
    z00^2*z01*z10*cw1*cw2), but that monomial is divisible by z00^2*cw2,
    so the would-be irreducible monomials span a rank-0 piece there.
    Returns (kunneth_count, grid_count, excluded_monomial_is_basic).
    """
    zero1 = GradingBT1()
    kun = kunneth_convolution(zero1, zero1, (0, 0, 4, 4)).get((0, 4), 0)
    grid = basis_count_grid(GradingBT2(), (0, 0, 4, 4)).get((0, 4), 0)
    mono = flat_ring("h").gens.monomial(z00=2, z01=1, z10=1, cw1=1, cw2=1)
    return kun, grid, is_basis_monomial(mono)


# ----------------------------------------------------------------------
# BU(2) elements, decided through their s* images
# ----------------------------------------------------------------------

BU2_NAMES = ("Z0", "Z1", "Z2", "cxL", "cL", "cxW", "cW")
BU2_WEIGHTS = (1, 2, 1, 4, 4, 4, 4)
BU2_GENS = GeneratorSet(BU2_NAMES, BU2_WEIGHTS)


def _bu2_star_images():
    R = flat_ring("h")
    return {
        "Z0": R.gen("z00"),
        "Z1": R.monomial(z01=1, z10=1),
        "Z2": R.gen("z11"),
        "cxL": R.gen("cxT"),
        "cL": R.gen("cT"),
        "cxW": R.monomial(cxw1=1, cxw2=1),
        "cW": R.monomial(cw1=1, cw2=1),
    }


class BU2Element:
    """Formal polynomial in the BU(2) generators with point coefficients.

    Its s*-image in the BT^2 ring is carried along; equality is decided
    by comparing images, which is legitimate only in even gradings.
    """

    __slots__ = ("poly",)

    def __init__(self, poly=None):
        clean = {}
        for m, c in (poly or {}).items():
            if not _sc_is_zero(c):
                clean[m] = clean[m] + c if m in clean else c
        object.__setattr__(self, "poly", {m: c for m, c in clean.items()
                                          if not _sc_is_zero(c)})

    def __setattr__(self, name, value):
        raise AttributeError("BU2Element is immutable")

    @staticmethod
    def gen(name, power=1):
        return BU2Element({BU2_GENS.monomial(**{name: power}): HCoeff.one()})

    @staticmethod
    def monomial(**exps):
        return BU2Element({BU2_GENS.monomial(**exps): HCoeff.one()})

    @staticmethod
    def scalar(c):
        if isinstance(c, int):
            c = HCoeff.from_int(c)
        return BU2Element({BU2_GENS.one(): c})

    def star_image(self):
        images = _bu2_star_images()
        R = flat_ring("h")
        out = R.zero()
        for m, c in self.poly.items():
            term = R.scalar(c)
            for name, e in zip(BU2_NAMES, m):
                for _ in range(e):
                    term = term * images[name]
            out = out + term
        return out

    def grading(self):
        g = None
        for m, c in self.poly.items():
            mg = None
            for name, e in zip(BU2_NAMES, m):
                if not e:
                    continue
                gg = _BU2_GEN_GRADING[name] * e
                mg = gg if mg is None else mg + gg
            if mg is None:
                mg = GradingBT2()
            if isinstance(c, HCoeff) and c.grading is not None:
                a, b = c.grading
                mg = mg + GradingBT2(a, b)
            if g is None:
                g = mg
            elif g != mg:
                raise ValueError("inhomogeneous element")
        return g

    def __add__(self, other):
        poly = dict(self.poly)
        for m, c in other.poly.items():
            poly[m] = poly[m] + c if m in poly else c
        return BU2Element(poly)

    def __neg__(self):
        return BU2Element({m: -c for m, c in self.poly.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, HCoeff)):
            other = BU2Element.scalar(other)
        acc = {}
        for m1, c1 in self.poly.items():
            for m2, c2 in other.poly.items():
                p = c1 * c2
                if _sc_is_zero(p):
                    continue
                key = mono_mul(m1, m2)
                acc[key] = acc[key] + p if key in acc else p
        return BU2Element(acc)

    __rmul__ = __mul__

    def is_zero_even(self):
        g = self.grading()
        if g is not None and not g.is_even():
            raise UndecidableEqualityError(
                "s* is injective only in even gradings; grading %s is odd"
                % (g,))
        return self.star_image().is_zero()

    def __eq__(self, other):
        if not isinstance(other, BU2Element):
            return NotImplemented
        return (self - other).is_zero_even()

    def __str__(self):
        from .expr import format_element
        return format_element(self.poly, BU2_GENS)

    __repr__ = __str__


_BU2_GEN_GRADING = {
    "Z0": W00, "Z1": GradingBT2(m01=1, m10=1), "Z2": W11,
    "cL": GRAD_CT, "cxL": GRAD_CXT,
    "cW": GRAD_CW1 + GRAD_CW2, "cxW": GRAD_CXW1 + GRAD_CXW2,
}


def random_homogeneous_flat(rng, max_weight=12, nterms=3):
    """Random homogeneous flat element: an H multiple of products of
    generators in a single grading (for agreement-style property tests)."""
    R = flat_ring("h")
    names = list(FLAT_NAMES)
    while True:
        base = []
        w = 0
        while True:
            n = rng.choice(names)
            wn = FLAT_WEIGHTS[FLAT_NAMES.index(n)]
            if w + wn > max_weight:
                break
            base.append(n)
            w += wn
            if rng.random() < 0.25:
                break
        if base:
            break
    exps = {}
    for n in base:
        exps[n] = exps.get(n, 0) + 1
    mono = R.gens.monomial(**exps)
    coeff = rng.choice([HCoeff.one(), HCoeff.from_int(2),
                        HCoeff.one() - HCoeff.kappa(), HCoeff.e(2),
                        HCoeff.xi(), HCoeff.u(1), HCoeff.t(2)])
    return {mono: R.scalars.from_h(coeff)}
