"""Ring homomorphisms out of the BT^2 cohomology and the pushforward.

Implemented here:

* rho: restriction to nonequivariant cohomology,
  Z[x1, x2, iota^{+-1}, zeta_ij^{+-1}] / (prod zeta_ij = iota^2),
* eta: restriction to the four fixed-set components, each
  H[x1, x2, zeta_kl^{+-1} for (k,l) != (i,j)],
* phi: fixed points, eta followed by the point-level fixed-point map
  (coefficients land in Z[e^{+-1}] per component),
* the classifying-map pullbacks s*, delta*, chi1*, chi2*, gamma*, t*,
  pi1*, pi2*,
* reduction mod N (the ideal of positively graded point classes),
* the pushforward along BT^2 -> BU(2): the nonequivariant division rule,
  the three fixed-component pushforwards, and the commuting-square check
  that certifies the four published values.

All maps are determined by generator-image tables; the tables themselves
are cross-checked in the verification suite.
"""

from __future__ import annotations

from .grading import GradingBT2
from .hcoeff import HCoeff, Laurent1
from .rings import (BU2Element, FlatElement, UndecidableEqualityError,
                    bt1_ring, flat_ring)

COMPONENTS = ("00", "01", "10", "11")
ZETAS = ("z00", "z01", "z10", "z11")


# ----------------------------------------------------------------------
# sparse polynomial rings with designated Laurent variables
# ----------------------------------------------------------------------

class SparseRing:
    """Z- or H-coefficient polynomials, some variables invertible."""

    def __init__(self, name, varnames, laurent, hcoeffs):
        self.name = name
        self.varnames = tuple(varnames)
        self.laurent = frozenset(laurent)
        self.hcoeffs = hcoeffs
        self.index = {v: i for i, v in enumerate(self.varnames)}

    def _check(self, exps):
        for v, e in zip(self.varnames, exps):
            if e < 0 and v not in self.laurent:
                raise ValueError("%s: negative power of non-invertible %s"
                                 % (self.name, v))

    def zero(self):
        return SparseElement(self, {})

    def scalar(self, c):
        if isinstance(c, int):
            c = HCoeff.from_int(c) if self.hcoeffs else c
        if _zero(c):
            return self.zero()
        return SparseElement(self, {(0,) * len(self.varnames): c})

    def one(self):
        return self.scalar(HCoeff.one() if self.hcoeffs else 1)

    def gen(self, name, exp=1):
        exps = [0] * len(self.varnames)
        exps[self.index[name]] = exp
        self._check(exps)
        one = HCoeff.one() if self.hcoeffs else 1
        return SparseElement(self, {tuple(exps): one})

    def from_h(self, c):
        """Inject a point coefficient (exact for H rings; for Z rings the
        caller must fold Laurent parts into a variable)."""
        if self.hcoeffs:
            return self.scalar(c)
        raise TypeError("%s has integer coefficients" % self.name)


def _zero(c):
    return c.is_zero() if hasattr(c, "is_zero") else c == 0


class SparseElement:
    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms):
        clean = {}
        for m, c in terms.items():
            if not _zero(c):
                ring._check(m)
                clean[m] = c
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("SparseElement is immutable")

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return self.is_zero()
        return (isinstance(other, SparseElement)
                and self.ring is other.ring and self.terms == other.terms)

    def __add__(self, other):
        out = dict(self.terms)
        for m, c in other.terms.items():
            if m in out:
                s = out[m] + c
                if _zero(s):
                    del out[m]
                else:
                    out[m] = s
            else:
                out[m] = c
        return SparseElement(self.ring, out)

    def __neg__(self):
        return SparseElement(self.ring, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, HCoeff)):
            if isinstance(other, int) and self.ring.hcoeffs:
                other = HCoeff.from_int(other)
            out = {}
            for m, c in self.terms.items():
                p = c * other
                if not _zero(p):
                    out[m] = p
            return SparseElement(self.ring, out)
        acc = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                p = c1 * c2
                if _zero(p):
                    continue
                key = tuple(a + b for a, b in zip(m1, m2))
                acc[key] = acc[key] + p if key in acc else p
        return SparseElement(self.ring, acc)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            if len(self.terms) != 1:
                raise ValueError("cannot invert a sum")
            (m, c), = self.terms.items()
            if not (c == 1 or (hasattr(c, "is_one") and c.is_one())):
                raise ValueError("cannot invert coefficient %s" % (c,))
            inv = SparseElement(self.ring,
                                {tuple(-e for e in m): c})
            return inv ** (-n)
        out = self.ring.one()
        for _ in range(n):
            out = out * self
        return out

    def map_h(self, fn, target):
        """Apply fn to every coefficient, landing in `target`."""
        out = {}
        for m, c in self.terms.items():
            v = fn(c)
            if not _zero(v):
                out[m] = out[m] + v if m in out else v
        return SparseElement(target, out)

    def __str__(self):
        from .expr import format_hcoeff
        if not self.terms:
            return "0"
        bits = []
        for m in sorted(self.terms):
            c = self.terms[m]
            mono = "*".join(
                (v if e == 1 else "%s^%d" % (v, e))
                for v, e in zip(self.ring.varnames, m) if e)
            cs = format_hcoeff(c) if isinstance(c, HCoeff) else str(c)
            if mono:
                body = "(%s)*%s" % (cs, mono) if ("+" in cs or " " in cs
                                                  or "-" in cs[1:]) else \
                    ("%s*%s" % (cs, mono) if cs != "1" else mono)
            else:
                body = "(%s)" % cs if "+" in cs or " " in cs else cs
            bits.append(body)
        return " + ".join(bits).replace("+ -", "- ")

    __repr__ = __str__


# ----------------------------------------------------------------------
# rho: the nonequivariant restriction
# ----------------------------------------------------------------------

RHO_RING = SparseRing("rho-target",
                      ("iota", "z00", "z01", "z10", "x1", "x2"),
                      laurent=("iota", "z00", "z01", "z10"),
                      hcoeffs=False)


def _rho_z11():
    # zeta11 = iota^2 zeta00^{-1} zeta01^{-1} zeta10^{-1}
    return SparseElement(RHO_RING, {(2, -1, -1, -1, 0, 0): 1})


def _rho_images():
    R = RHO_RING
    z00, z01, z10 = R.gen("z00"), R.gen("z01"), R.gen("z10")
    z11 = _rho_z11()
    x1, x2 = R.gen("x1"), R.gen("x2")
    return {
        "z00": z00, "z01": z01, "z10": z10, "z11": z11,
        "cw1": z10 * z11 * x1,
        "cxw1": z00 * z01 * x1,
        "cw2": z01 * z11 * x2,
        "cxw2": z00 * z10 * x2,
        "cT": z01 * z10 * (x1 + x2),
        "cxT": z00 * z11 * (x1 + x2),
    }


def rho(x):
    """Nonequivariant restriction of a flat BT^2 element."""
    images = _rho_images()
    out = RHO_RING.zero()
    for m, c in x.poly.items():
        term = RHO_RING.zero() + _iota_scalar(c.rho() if isinstance(c, HCoeff)
                                              else c)
        for name, e in zip(x.ring.gens.names, m):
            for _ in range(e):
                term = term * images[name]
        out = out + term
    return out


def _iota_scalar(lp):
    out = {}
    for exp, c in lp.terms.items():
        out[(exp, 0, 0, 0, 0, 0)] = c
    return SparseElement(RHO_RING, out)


# ----------------------------------------------------------------------
# eta: restriction to the four fixed-set components
# ----------------------------------------------------------------------

def _eta_ring(comp):
    others = tuple(z for z in ZETAS if z != "z" + comp)
    return SparseRing("eta-" + comp, others + ("x1", "x2"),
                      laurent=others, hcoeffs=True)


ETA_RINGS = {comp: _eta_ring(comp) for comp in COMPONENTS}

# Omega support of each Euler-class generator and its nonequivariant class
_EULER_DATA = {
    "cw1": (("10", "11"), "x1"),
    "cxw1": (("00", "01"), "x1"),
    "cw2": (("01", "11"), "x2"),
    "cxw2": (("00", "10"), "x2"),
    "cT": (("01", "10"), "x12"),
    "cxT": (("00", "11"), "x12"),
}


def _eta_images(comp):
    """Images of the ten generators in the component ring for `comp`."""
    R = ETA_RINGS[comp]
    images = {}
    for z in ZETAS:
        if z != "z" + comp:
            images[z] = R.gen(z)
        else:
            term = R.scalar(HCoeff.xi())
            for other in ZETAS:
                if other != z:
                    term = term * R.gen(other, -1)
            images[z] = term
    x1, x2 = R.gen("x1"), R.gen("x2")
    xclass = {"x1": x1, "x2": x2, "x12": x1 + x2}
    for name, (support, xkey) in _EULER_DATA.items():
        x = xclass[xkey]
        if comp not in support:
            term = x
            for s in support:
                term = term * R.gen("z" + s)
        else:
            term = R.scalar(HCoeff.e(2)) + R.scalar(HCoeff.xi()) * x
            for s in COMPONENTS:
                if s not in support:
                    term = term * R.gen("z" + s, -1)
        images[name] = term
    return images


_ETA_IMAGE_CACHE = {}


def eta_component(x, comp):
    if comp not in _ETA_IMAGE_CACHE:
        _ETA_IMAGE_CACHE[comp] = _eta_images(comp)
    images = _ETA_IMAGE_CACHE[comp]
    R = ETA_RINGS[comp]
    out = R.zero()
    for m, c in x.poly.items():
        term = R.scalar(c)
        for name, e in zip(x.ring.gens.names, m):
            if e:
                term = term * images[name] ** e
        out = out + term
    return out


def eta(x):
    """Quadruple of component restrictions, indexed (00, 01, 10, 11)."""
    return tuple(eta_component(x, comp) for comp in COMPONENTS)


# ----------------------------------------------------------------------
# phi: fixed points (coefficients pushed to Z[e^{+-1}])
# ----------------------------------------------------------------------

def _phi_ring(comp):
    others = tuple(z for z in ZETAS if z != "z" + comp)
    return SparseRing("phi-" + comp, ("e",) + others + ("x1", "x2"),
                      laurent=("e",) + others, hcoeffs=False)


PHI_RINGS = {comp: _phi_ring(comp) for comp in COMPONENTS}


def _phi_of_eta(elem, comp):
    R = PHI_RINGS[comp]
    out = {}
    for m, c in elem.terms.items():
        for eexp, cc in c.phi().terms.items():
            key = (eexp,) + m
            out[key] = out.get(key, 0) + cc
    return SparseElement(R, out)


def phi_component(x, comp):
    return _phi_of_eta(eta_component(x, comp), comp)


def phi(x):
    """The fixed-point map on the flat ring (or its phi base change)."""
    if x.ring.scalars.name == "phi":
        return tuple(_phi_base_changed(x, comp) for comp in COMPONENTS)
    return tuple(phi_component(x, comp) for comp in COMPONENTS)


def _phi_base_changed(x, comp):
    """phi-bar on P tensor Z[e^{+-1}]: Laurent e coefficients pass through."""
    Rh = flat_ring("h")
    out = PHI_RINGS[comp].zero()
    for m, c in x.poly.items():
        base = phi_component(FlatElement(Rh, {m: HCoeff.one()},
                                         normalized=True), comp)
        lifted = {}
        for eexp, cc in c.terms.items():
            for mm, ci in base.terms.items():
                key = (mm[0] + eexp,) + mm[1:]
                lifted[key] = lifted.get(key, 0) + cc * ci
        out = out + SparseElement(PHI_RINGS[comp], lifted)
    return out


def fixed_sets(x):
    """The Z^4-graded fixed-set quadruple: phi with e and the zetas set
    to 1, leaving integer polynomials in x1, x2."""
    out = []
    for comp in COMPONENTS:
        p = phi_component(x, comp)
        acc = {}
        for m, c in p.terms.items():
            key = m[-2:]
            acc[key] = acc.get(key, 0) + c
        out.append({k: v for k, v in acc.items() if v})
    return tuple(out)


# ----------------------------------------------------------------------
# classifying-map pullbacks
# ----------------------------------------------------------------------

def _apply_table(x, images, target_zero, coeff=lambda c: c):
    out = target_zero
    for m, c in x.poly.items():
        term = coeff(c)
        for name, e in zip(x.ring.gens.names, m):
            for _ in range(e):
                term = term * images[name]
        out = out + term
    return out


def _perm_images(mapping):
    R = flat_ring("h")
    images = {}
    for name in R.gens.names:
        images[name] = R.gen(mapping.get(name, name))
    return images


def chi1(x):
    """chi applied to the first factor: swaps the first fixed index."""
    images = _perm_images({"z00": "z10", "z10": "z00", "z01": "z11",
                           "z11": "z01", "cw1": "cxw1", "cxw1": "cw1",
                           "cT": "cxT", "cxT": "cT"})
    return _apply_table(x, images, flat_ring("h").zero(),
                        coeff=flat_ring("h").scalar)


def chi2(x):
    """chi applied to the second factor (gamma chi1 gamma)."""
    images = _perm_images({"z00": "z01", "z01": "z00", "z10": "z11",
                           "z11": "z10", "cw2": "cxw2", "cxw2": "cw2",
                           "cT": "cxT", "cxT": "cT"})
    return _apply_table(x, images, flat_ring("h").zero(),
                        coeff=flat_ring("h").scalar)


def gamma(x):
    """Swap of the two BT^1 factors."""
    images = _perm_images({"z01": "z10", "z10": "z01", "cw1": "cw2",
                           "cw2": "cw1", "cxw1": "cxw2", "cxw2": "cxw1"})
    return _apply_table(x, images, flat_ring("h").zero(),
                        coeff=flat_ring("h").scalar)


def delta(x):
    """Pullback along the dualizing involution: Euler classes go to the
    Euler classes of the dual bundles."""
    from .classes import dual_class
    R = flat_ring("h")
    images = {z: R.gen(z) for z in ZETAS}
    for name in ("cw1", "cxw1", "cw2", "cxw2", "cT", "cxT"):
        images[name] = dual_class(name)
    return _apply_table(x, images, R.zero(), coeff=R.scalar)


def tmap(x):
    """Pullback along t: BT^1 -> BT^2 classifying (omega, C^sigma)."""
    B = bt1_ring("h")
    images = {
        "z00": B.one(), "z01": B.gen("z0"), "z10": B.one(),
        "z11": B.gen("z1"),
        "cw1": B.gen("cw"), "cxw1": B.gen("cxw"),
        "cw2": B.scalar(HCoeff.e(2)), "cxw2": B.zero(),
        "cT": B.gen("cxw"), "cxT": B.gen("cw"),
    }
    return _apply_table(x, images, B.zero(), coeff=B.scalar)


def pi1(x):
    """Pullback along the first projection BT^2 -> BT^1."""
    R = flat_ring("h")
    images = {
        "z0": R.monomial(z00=1, z01=1), "z1": R.monomial(z10=1, z11=1),
        "cw": R.gen("cw1"), "cxw": R.gen("cxw1"),
    }
    return _apply_table(x, images, R.zero(), coeff=R.scalar)


def pi2(x):
    """Pullback along the second projection."""
    R = flat_ring("h")
    images = {
        "z0": R.monomial(z00=1, z10=1), "z1": R.monomial(z01=1, z11=1),
        "cw": R.gen("cw2"), "cxw": R.gen("cxw2"),
    }
    return _apply_table(x, images, R.zero(), coeff=R.scalar)


def sstar(x):
    """s*: the BU(2) ring into the BT^2 ring."""
    return x.star_image()


PULLBACKS = {
    "sstar": sstar, "delta": delta, "chi1": chi1, "chi2": chi2,
    "gamma": gamma, "t": tmap, "pi1": pi1, "pi2": pi2,
}


def pullback(name, x):
    try:
        fn = PULLBACKS[name]
    except KeyError:
        raise ValueError("unknown map %r; expected one of %s"
                         % (name, ", ".join(sorted(PULLBACKS))))
    return fn(x)


# ----------------------------------------------------------------------
# reduction mod N
# ----------------------------------------------------------------------

def modn_coeff(c):
    """H/N = Z/2: kill every atom except 1 and reduce mod 2 (kappa and g
    both lie in N)."""
    from .hcoeff import ONE
    return c.terms.get(ONE, 0) % 2


def mod_n(x):
    """Image of a flat element in the mod-N quotient (Z/2 coefficients)."""
    if isinstance(x, FlatElement):
        poly = x.poly
    else:
        poly = x
    out = {}
    for m, c in poly.items():
        v = modn_coeff(c)
        if m in out:
            v = (out[m] + v) % 2
        if v:
            out[m] = v
        elif m in out:
            del out[m]
    return out


def mod_n_relation(lhs, rhs):
    """Coefficientwise mod-N image of a stated relation (raw polys)."""
    return mod_n(lhs), mod_n(rhs)


# ----------------------------------------------------------------------
# pushforward to BU(2)
# ----------------------------------------------------------------------

# fixed components of BU(2): B0 and B2 are copies of BU(2), B1 of BT^2.
# Variables c1, c2 are the dual Chern classes, y1, y2 the dual Euler
# classes of the two tautological bundles over B1.
BU_COMP0 = SparseRing("bu2-comp0", ("z1", "z2", "c1", "c2"),
                      laurent=("z1", "z2"), hcoeffs=True)
BU_COMP1 = SparseRing("bu2-comp1", ("z0", "z2", "y1", "y2"),
                      laurent=("z0", "z2"), hcoeffs=True)
BU_COMP2 = SparseRing("bu2-comp2", ("z0", "z1", "c1", "c2"),
                      laurent=("z0", "z1"), hcoeffs=True)


def _e2_plus_xi(R, x):
    return R.scalar(HCoeff.e(2)) + R.scalar(HCoeff.xi()) * x


def bu2_eta_table():
    """Fixed-set restrictions of the BU(2) generators (dual classes)."""
    c1_0, c2_0 = BU_COMP0.gen("c1"), BU_COMP0.gen("c2")
    z1_0, z2_0 = BU_COMP0.gen("z1"), BU_COMP0.gen("z2")
    y1, y2 = BU_COMP1.gen("y1"), BU_COMP1.gen("y2")
    z0_1, z2_1 = BU_COMP1.gen("z0"), BU_COMP1.gen("z2")
    c1_2, c2_2 = BU_COMP2.gen("c1"), BU_COMP2.gen("c2")
    z0_2, z1_2 = BU_COMP2.gen("z0"), BU_COMP2.gen("z1")
    xi = HCoeff.xi()
    e4 = HCoeff.e(4)
    e2xi = HCoeff.e(2) * xi
    xi2 = xi * xi

    def quad0(R, c1, c2):
        return (R.scalar(e4) + R.scalar(e2xi) * c1 + R.scalar(xi2) * c2)

    return {
        "Z0": (BU_COMP0.scalar(xi) * z1_0 ** -1 * z2_0 ** -1,
               z0_1, z0_2),
        "Z1": (z1_0, BU_COMP1.scalar(xi) * z0_1 ** -1 * z2_1 ** -1, z1_2),
        "Z2": (z2_0, z2_1,
               BU_COMP2.scalar(xi) * z0_2 ** -1 * z1_2 ** -1),
        "cLd": (c1_0 * z1_0,
                _e2_plus_xi(BU_COMP1, y1 + y2) * z0_1 ** -1 * z2_1 ** -1,
                c1_2 * z1_2),
        "cxLd": (_e2_plus_xi(BU_COMP0, c1_0) * z1_0 ** -1,
                 (y1 + y2) * z0_1 * z2_1,
                 _e2_plus_xi(BU_COMP2, c1_2) * z1_2 ** -1),
        "cWd": (c2_0 * z1_0 * z2_0 ** 2,
                y1 * _e2_plus_xi(BU_COMP1, y2) * z0_1 ** -1 * z2_1,
                quad0(BU_COMP2, c1_2, c2_2) * z0_2 ** -2 * z1_2 ** -1),
        "cxWd": (quad0(BU_COMP0, c1_0, c2_0) * z1_0 ** -1 * z2_0 ** -2,
                 y2 * _e2_plus_xi(BU_COMP1, y1) * z0_1 * z2_1 ** -1,
                 c2_2 * z0_2 ** 2 * z1_2),
    }


def bu2_eta(factors, coeff=None):
    """eta of a product of table generators times a point coefficient.

    `factors` is an iterable of (name, exponent) with names from the
    table; exponents may be negative for the zetas.
    """
    table = bu2_eta_table()
    comps = [BU_COMP0.one(), BU_COMP1.one(), BU_COMP2.one()]
    if coeff is not None:
        comps = [c * coeff for c in comps]
    for name, exp in factors:
        for i in range(3):
            comps[i] = comps[i] * table[name][i] ** exp
    return tuple(comps)


# -- the x-hat division: p = A(c1, c2) + B(c1, c2) x1-hat ---------------

def _xhat_basis(p, q, cache={(0, 0): {(0, 0, 0): 1}}):
    """x1hat^p x2hat^q in the basis {c1^i c2^j x1hat^eps}."""
    if (p, q) in cache:
        return cache[(p, q)]
    if q > 0:
        prev = _xhat_basis(p, q - 1)
        out = {}
        # multiply by x2hat = c1 - x1hat
        for (i, j, eps), c in prev.items():
            _acc(out, (i + 1, j, eps), c)
        for (i, j, eps), c in _mul_x1(prev).items():
            _acc(out, (i, j, eps), -c)
    else:
        prev = _xhat_basis(p - 1, 0)
        out = _mul_x1(prev)
    out = {k: v for k, v in out.items() if v}
    cache[(p, q)] = out
    return out


def _mul_x1(rep):
    out = {}
    for (i, j, eps), c in rep.items():
        if eps == 0:
            _acc(out, (i, j, 1), c)
        else:
            # x1hat^2 = c1 x1hat - c2
            _acc(out, (i + 1, j, 1), c)
            _acc(out, (i, j + 1, 0), -c)
    return out


def _acc(d, k, v):
    d[k] = d.get(k, 0) + v


def xhat_divide(terms):
    """Split a polynomial in x1hat, x2hat as (A, B) with p = A + B*x1hat.

    `terms` maps (p, q) exponent pairs to coefficients; the output maps
    (i, j) exponents of c1^i c2^j to coefficients.
    """
    A, B = {}, {}
    for (p, q), c in terms.items():
        for (i, j, eps), n in _xhat_basis(p, q).items():
            tgt = B if eps else A
            key = (i, j)
            add = c * n
            tgt[key] = tgt[key] + add if key in tgt else add
    A = {k: v for k, v in A.items() if not _zero(v)}
    B = {k: v for k, v in B.items() if not _zero(v)}
    return A, B


def nonequiv_pushforward(terms):
    """The nonequivariant rule: s_!(A + B*x1hat) = B."""
    return xhat_divide(terms)[1]


def _split_xhat(elem, zeta_positions, sign_swap=False):
    """Group a component element by zeta part, converting the x1, x2
    polynomial into x-hat variables (x_i = -xhat_i)."""
    groups = {}
    for m, c in elem.terms.items():
        zpart = m[:-2]
        p, q = m[-2], m[-1]
        if sign_swap:
            p, q = q, p
        sign = (-1) ** (p + q)
        key = zpart
        groups.setdefault(key, {})
        groups[key][(p, q)] = groups[key].get((p, q), HCoeff.zero()) + c * sign
    return groups


def s0_push(elem):
    """Pushforward on the 00 component: divide by x1hat, pair the zetas
    (z01 z10 -> z1, z11 -> z2) and correct the grading by z1^{-1}."""
    return _si_push_outer(elem, comp="00")


def s2_push(elem):
    """Pushforward on the 11 component (z00 -> z0, z01 z10 -> z1)."""
    return _si_push_outer(elem, comp="11")


def _si_push_outer(elem, comp):
    if comp == "00":
        target = BU_COMP0
        znames = ("z01", "z10", "z11")
    else:
        target = BU_COMP2
        znames = ("z00", "z01", "z10")
    ring = ETA_RINGS[comp]
    assert ring.varnames[:3] == znames
    out = target.zero()
    for zpart, xterms in _split_xhat(elem, znames).items():
        _, B = xhat_divide(xterms)
        if comp == "00":
            a01, a10, a11 = zpart
            if a01 != a10:
                raise ValueError("unpaired zeta powers %s in s0_push"
                                 % (zpart,))
            zmono = target.gen("z1", a01 - 1) * target.gen("z2", a11)
        else:
            a00, a01, a10 = zpart
            if a01 != a10:
                raise ValueError("unpaired zeta powers %s in s2_push"
                                 % (zpart,))
            zmono = target.gen("z0", a00) * target.gen("z1", a01 - 1)
        acc = target.zero()
        for (i, j), c in B.items():
            acc = acc + target.gen("c1", i) * target.gen("c2", j) * c
        out = out + acc * zmono
    return out


def s1_push(a_part, b_part):
    """Pushforward on the middle component: the restriction of an element
    written as A + B * (z00 z01 cw1-hat) maps to A u z0 z2 + B z0 z2."""
    z0z2 = BU_COMP1.gen("z0") * BU_COMP1.gen("z2")
    return a_part * BU_COMP1.scalar(HCoeff.u(1)) * z0z2 + b_part * z0z2


# -- the four module generators and their middle decompositions ---------

def pushforward_generators():
    """The generators 1, z01*cw1d, z10*cxw1d, cw1d*cxw1d as flat elements
    together with their {1, z00 z01 cw1d}-decompositions over B1."""
    from .classes import dual_class
    R = flat_ring("h")
    cw1d = dual_class("cw1")
    cxw1d = dual_class("cxw1")
    y1, y2 = BU_COMP1.gen("y1"), BU_COMP1.gen("y2")
    kbar = HCoeff.one() - HCoeff.kappa()
    gens = {
        "one": {
            "element": R.one(),
            "A": BU_COMP1.one(),
            "B": BU_COMP1.zero(),
        },
        "z01*cw1d": {
            "element": R.gen("z01") * cw1d,
            "A": BU_COMP1.zero(),
            "B": BU_COMP1.gen("z0", -1),
        },
        "z10*cxw1d": {
            "element": R.gen("z10") * cxw1d,
            "A": BU_COMP1.scalar(HCoeff.e(2)) * BU_COMP1.gen("z2", -1),
            "B": BU_COMP1.scalar(kbar) * BU_COMP1.gen("z2", -1),
        },
        "cw1d*cxw1d": {
            "element": cw1d * cxw1d,
            "A": BU_COMP1.scalar(HCoeff.e(2)) * y1
                 - BU_COMP1.scalar(HCoeff.xi()) * y1 * y2,
            "B": BU_COMP1.scalar(kbar) * y1 + y2,
        },
    }
    return gens


def pushforward_values():
    """The published values of s_! on the four generators, as eta-route
    factor lists over the BU(2) table."""
    return {
        "one": ([("Z0", 1), ("Z2", 1)], HCoeff.u(1)),
        "z01*cw1d": ([("Z2", 1)], None),
        "z10*cxw1d": ([("Z0", 1)], None),
        "cw1d*cxw1d": ([("cxLd", 1)], None),
    }


def _comp1_subst(elem, swap):
    """Image of a B1 element in the 01 (swap=False) or 10 (swap=True)
    fixed component of BT^2: z0 -> z00, z2 -> z11, y_i -> -x_{i or swap}."""
    ring = ETA_RINGS["01" if not swap else "10"]
    # eta ring vars: three zetas then x1, x2
    out = ring.zero()
    for m, c in elem.terms.items():
        z0e, z2e, y1e, y2e = m
        p, q = (y1e, y2e) if not swap else (y2e, y1e)
        sign = (-1) ** (y1e + y2e)
        if not swap:
            # vars (z00, z10, z11, x1, x2)
            key = (z0e, 0, z2e, p, q)
        else:
            # vars (z00, z01, z11, x1, x2)
            key = (z0e, 0, z2e, p, q)
        out = out + SparseElement(ring, {key: c * sign})
    return out


def middle_decomposition_check(gen_name):
    """Verify eta_comp(x) == A + B * eta_comp(z00 z01 cw1d) on both fixed
    components of the middle piece (the T^1 decomposition identity when
    x = cw1d * cxw1d)."""
    from .classes import dual_class
    R = flat_ring("h")
    data = pushforward_generators()[gen_name]
    x = data["element"]
    G = R.monomial(z00=1, z01=1) * dual_class("cw1")
    results = []
    for comp, swap in (("01", False), ("10", True)):
        lhs = eta_component(x, comp)
        a_img = _comp1_subst(data["A"], swap)
        b_img = _comp1_subst(data["B"], swap)
        rhs = a_img + b_img * eta_component(G, comp)
        results.append(lhs == rhs)
    return all(results)


def component_pushforwards(gen_name):
    """Full record of the commuting-square check for one generator."""
    data = pushforward_generators()[gen_name]
    x = data["element"]
    factors, coeff = pushforward_values()[gen_name]
    lhs = bu2_eta(factors, coeff)
    rhs = (s0_push(eta_component(x, "00")),
           s1_push(data["A"], data["B"]),
           s2_push(eta_component(x, "11")))
    return {
        "generator": gen_name,
        "decomposition_ok": middle_decomposition_check(gen_name),
        "components_equal": tuple(l == r for l, r in zip(lhs, rhs)),
        "lhs": lhs,
        "rhs": rhs,
    }


def eta_route_check(gen_name):
    """The commuting square: eta(s_!(x)) equals the componentwise
    pushforward of the restrictions of x."""
    return component_pushforwards(gen_name)["components_equal"]


def pushforward(decomposed):
    """s_! of an element given as BU(2)-module coordinates (a0, a1, a2,
    a3) against the generators 1, z01 cw1d, z10 cxw1d, cw1d cxw1d."""
    from .classes import bu2_dual_class
    a0, a1, a2, a3 = decomposed
    u = HCoeff.u(1)
    vals = (BU2Element.monomial(Z0=1, Z2=1) * u,
            BU2Element.gen("Z2"),
            BU2Element.gen("Z0"),
            bu2_dual_class("cxL"))
    out = BU2Element({})
    for a, v in zip((a0, a1, a2, a3), vals):
        out = out + a * v
    return out


# ----------------------------------------------------------------------
# the fixed-point isomorphism: published phi-bar values and the inverse
# ----------------------------------------------------------------------

def phi_bar_generator_table():
    """The published values of phi-bar on the ten generators, as data."""
    out = {}
    for z in ZETAS:
        comps = []
        for comp in COMPONENTS:
            R = PHI_RINGS[comp]
            comps.append(R.zero() if z == "z" + comp else R.gen(z))
        out[z] = tuple(comps)
    for name, (support, xkey) in _EULER_DATA.items():
        comps = []
        for comp in COMPONENTS:
            R = PHI_RINGS[comp]
            x = {"x1": R.gen("x1"), "x2": R.gen("x2"),
                 "x12": R.gen("x1") + R.gen("x2")}[xkey]
            if comp not in support:
                term = x
                for s in support:
                    term = term * R.gen("z" + s)
            else:
                term = R.gen("e", 2)
                for s in COMPONENTS:
                    if s not in support:
                        term = term * R.gen("z" + s, -1)
            comps.append(term)
        out[name] = tuple(comps)
    return out


def _phi_flat_elem(coeff_exp, **exps):
    """e^coeff_exp times a monomial, in the phi base change of the ring."""
    R = flat_ring("phi")
    mono = R.gens.monomial(**exps)
    return FlatElement(R, {mono: Laurent1.term("e", coeff_exp)})


def psi_slot00_data():
    """Slot-00 preimages: the idempotent, the x-class lifts, and the
    inverted-zeta lifts, all in P tensor Z[e^{+-1}]."""
    return {
        "E": _phi_flat_elem(-4, z01=1, z10=1, z11=2, cxw1=1, cxw2=1),
        "x1": _phi_flat_elem(-2, cw1=1, cxw1=1),
        "x2": _phi_flat_elem(-2, cw2=1, cxw2=1),
        "z01inv": _phi_flat_elem(-4, z01=1, z10=1, z11=1, cxw2=1, cxT=1),
        "z10inv": _phi_flat_elem(-4, z01=1, z10=1, z11=1, cxw1=1, cxT=1),
        "z11inv": _phi_flat_elem(-4, z01=1, z10=1, z11=1, cxw1=1, cxw2=1),
    }


def _perm_images_phi(mapping):
    R = flat_ring("phi")
    return {name: R.gen(mapping.get(name, name)) for name in R.gens.names}


def _apply_perm_phi(x, mapping):
    images = _perm_images_phi(mapping)
    R = flat_ring("phi")
    out = R.zero()
    for m, c in x.poly.items():
        term = FlatElement(R, {R.gens.one(): c}, normalized=True)
        for name, e in zip(R.gens.names, m):
            for _ in range(e):
                term = term * images[name]
        out = out + term
    return out


_CHI1_MAP = {"z00": "z10", "z10": "z00", "z01": "z11", "z11": "z01",
             "cw1": "cxw1", "cxw1": "cw1", "cT": "cxT", "cxT": "cT"}
_CHI2_MAP = {"z00": "z01", "z01": "z00", "z10": "z11", "z11": "z10",
             "cw2": "cxw2", "cxw2": "cw2", "cT": "cxT", "cxT": "cT"}


def _flip1(comp):
    return {"0": "1", "1": "0"}[comp[0]] + comp[1]


def _flip2(comp):
    return comp[0] + {"0": "1", "1": "0"}[comp[1]]


def psi_tables():
    """Per-slot idempotents and inverted-zeta preimages, transported from
    slot 00 by the chi automorphisms (chi1 swaps the first fixed index,
    chi2 the second)."""
    base = psi_slot00_data()
    tables = {}
    for comp in COMPONENTS:
        maps = []
        c = comp
        if c[0] == "1":
            maps.append(_CHI1_MAP)
            c = _flip1(c)
        if c[1] == "1":
            maps.append(_CHI2_MAP)
            c = _flip2(c)
        assert c == "00"

        def transport(x, maps=tuple(maps)):
            for mp in maps:
                x = _apply_perm_phi(x, mp)
            return x

        def relabel(zname, maps=tuple(maps)):
            for mp in maps:
                zname = mp.get(zname, zname)
            return zname

        entry = {"E": transport(base["E"]),
                 "x1": base["x1"], "x2": base["x2"]}
        for z in ZETAS:
            if z == "z" + comp:
                continue
            # which slot-00 inverse transports to z^{-1} in this slot
            src = relabel(z)
            entry[z + "inv"] = transport(base[src + "inv"])
        tables[comp] = entry
    return tables


_PSI_TABLES = None


def psi(quad):
    """The inverse of phi-bar: an algebra-level preimage of a quadruple
    of fixed-point components, in P tensor Z[e^{+-1}]."""
    global _PSI_TABLES
    if _PSI_TABLES is None:
        _PSI_TABLES = psi_tables()
    R = flat_ring("phi")
    out = R.zero()
    for comp, elem in zip(COMPONENTS, quad):
        table = _PSI_TABLES[comp]
        ring = PHI_RINGS[comp]
        znames = [v for v in ring.varnames if v.startswith("z")]
        for m, c in elem.terms.items():
            eexp = m[0]
            zexps = m[1:4]
            p, q = m[4], m[5]
            term = FlatElement(R, {R.gens.one():
                                   Laurent1.term("e", eexp, c)},
                               normalized=True)
            term = term * table["x1"] ** p * table["x2"] ** q
            has_slot_factor = False
            for zn, ze in zip(znames, zexps):
                if ze > 0:
                    term = term * R.gen(zn, ze)
                elif ze < 0:
                    term = term * table[zn + "inv"] ** (-ze)
                    has_slot_factor = True
            if not has_slot_factor:
                term = term * table["E"]
            out = out + term
    return out


# ----------------------------------------------------------------------
# the rho base change: simplified relations and basis images
# ----------------------------------------------------------------------

def rho_simplified_relations():
    """The eight relations as they simplify over Z[iota^{+-1}]; each pair
    must agree in the rho target ring."""
    R = flat_ring("h")
    m = R.gens.monomial

    def img(**exps):
        return rho(FlatElement(R, {m(**exps): HCoeff.one()},
                               normalized=True))

    iota2 = SparseElement(RHO_RING, {(2, 0, 0, 0, 0, 0): 1})
    z00z11inv = SparseElement(RHO_RING, {(-2, 2, 1, 1, 0, 0): 1})
    pairs = [
        ("prod-zeta", img(z00=1, z01=1, z10=1, z11=1), iota2),
        ("cxw1", img(z10=1, z11=1, cxw1=1), img(z00=1, z01=1, cw1=1)),
        ("cxw2", img(z01=1, z11=1, cxw2=1), img(z00=1, z10=1, cw2=1)),
        ("z00cT", img(z00=1, cT=1), img(z10=1, cxw1=1) + img(z01=1, cxw2=1)),
        ("z11cT", img(z11=1, cT=1), img(z01=1, cw1=1) + img(z10=1, cw2=1)),
        ("z01cxT", img(z01=1, cxT=1), img(z11=1, cxw1=1) + img(z00=1, cw2=1)),
        ("z10cxT", img(z10=1, cxT=1), img(z00=1, cw1=1) + img(z11=1, cxw2=1)),
        ("cTcxT", img(cT=1, cxT=1),
         img(cw1=1, cxw1=1) + img(cw2=1, cxw2=1)
         + z00z11inv * img(cw1=1, cw2=1) * 2),
    ]
    return pairs


def rho_unit_monomial_image(mono):
    """rho of a basis monomial must be a single +-1 monomial in the
    target.  Returns (is_unit_multiple, (a, b)) with the x-degrees."""
    R = flat_ring("h")
    image = rho(FlatElement(R, {mono: HCoeff.one()}, normalized=True))
    if len(image.terms) != 1:
        return False, None
    (m, c), = image.terms.items()
    if c not in (1, -1):
        return False, None
    return True, (m[-2], m[-1])
