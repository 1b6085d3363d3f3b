"""Derived characteristic-class computations.

The grading-0 part of the BT^2 ring has Z-basis {1, g, eps1, eps2,
epsSum}; the unit group is generated by -1 and the involutions 1-kappa,
1-eps1, 1-eps2, 1-epsSum.  Euler classes of the twisted tensor powers
O(m,n) and chi O(m,n) follow closed formulas driven by the parities of m
and n, anchored at the classes Q1 and Q2.  Waner classes assemble into a
total class that is multiplicative over sums of line bundles.
"""

from __future__ import annotations

from .hcoeff import KAPPA, ONE, U, HCoeff
from .rings import BU2Element, flat_ring, bt1_ring


# ----------------------------------------------------------------------
# the grading-0 elements
# ----------------------------------------------------------------------

def epsilon1():
    R = flat_ring("h")
    return R.monomial(z00=1, z01=1, cw1=1) * HCoeff.u(1)


def epsilon2():
    R = flat_ring("h")
    return R.monomial(z00=1, z10=1, cw2=1) * HCoeff.u(1)


def epsilon_sum():
    R = flat_ring("h")
    return R.monomial(z00=2, z01=1, z10=1, cw1=1, cw2=1) * HCoeff.u(2)


def grading0_basis():
    R = flat_ring("h")
    return [R.one(), R.scalar(HCoeff.g()), epsilon1(), epsilon2(),
            epsilon_sum()]


_COORDS = None


def _coord_monomials():
    global _COORDS
    if _COORDS is None:
        R = flat_ring("h")
        m = R.gens.monomial
        _COORDS = {
            "one": (R.gens.one(), ONE),
            "kappa": (R.gens.one(), KAPPA),
            "e1": (m(z00=1, z01=1, cw1=1), U(1)),
            "e2": (m(z00=1, z10=1, cw2=1), U(1)),
            "es": (m(z00=2, z01=1, z10=1, cw1=1, cw2=1), U(2)),
        }
    return _COORDS


def expand_grading0(x):
    """Coordinates (c1, cg, ce1, ce2, ces) of a grading-0 element in the
    basis {1, g, eps1, eps2, epsSum}; raises if x is outside the span."""
    coords = _coord_monomials()
    flatc = {}
    for mono, coeff in x.poly.items():
        for atom, n in coeff.terms.items():
            flatc[(mono, atom)] = n
    cg = -flatc.pop((coords["kappa"][0], coords["kappa"][1]), 0)
    c1 = flatc.pop((coords["one"][0], coords["one"][1]), 0) - 2 * cg
    ce1 = flatc.pop((coords["e1"][0], coords["e1"][1]), 0)
    ce2 = flatc.pop((coords["e2"][0], coords["e2"][1]), 0)
    ces = flatc.pop((coords["es"][0], coords["es"][1]), 0)
    if flatc:
        raise ValueError("element is outside the grading-0 span: %r"
                         % (sorted(flatc),))
    return (c1, cg, ce1, ce2, ces)


def grading0_vector(vec):
    """The element with coordinates vec in the basis {1,g,eps1,eps2,es}."""
    basis = grading0_basis()
    R = flat_ring("h")
    out = R.zero()
    for c, b in zip(vec, basis):
        if c:
            out = out + b * c
    return out


def _structure_table():
    basis = grading0_basis()
    table = []
    for bi in basis:
        row = []
        for bj in basis:
            row.append(expand_grading0(bi * bj))
        table.append(row)
    return table


def _det(mat):
    """Fraction-free Bareiss determinant of a small integer matrix."""
    m = [row[:] for row in mat]
    n = len(m)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k]:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def find_units(bound=3):
    """All u in the coordinate box [-bound, bound]^5 with an integer
    inverse, via Cramer's rule on the multiplication matrix."""
    table = _structure_table()
    units = []
    rng = range(-bound, bound + 1)
    for c1 in rng:
        for cg in rng:
            for ce1 in rng:
                for ce2 in rng:
                    for ces in rng:
                        u = (c1, cg, ce1, ce2, ces)
                        mat = [[sum(u[i] * table[i][j][k] for i in range(5))
                                for j in range(5)] for k in range(5)]
                        d = _det(mat)
                        if d == 0:
                            continue
                        if _cramer(mat, d) is not None:
                            units.append(u)
    return units


def _cramer(mat, d):
    e1 = [1, 0, 0, 0, 0]
    v = []
    for j in range(5):
        mj = [[(e1[r] if c == j else mat[r][c]) for c in range(5)]
              for r in range(5)]
        dj = _det(mj)
        if dj % d:
            return None
        v.append(dj // d)
    return v


def expected_units():
    """The 32 products +-(1-kappa)^a0 (1-eps1)^a1 (1-eps2)^a2 (1-es)^a3."""
    R = flat_ring("h")
    one = R.one()
    kbar = one - R.scalar(HCoeff.kappa())
    f1 = one - epsilon1()
    f2 = one - epsilon2()
    fs = one - epsilon_sum()
    out = set()
    for a0 in (0, 1):
        for a1 in (0, 1):
            for a2 in (0, 1):
                for a3 in (0, 1):
                    u = one
                    if a0:
                        u = u * kbar
                    if a1:
                        u = u * f1
                    if a2:
                        u = u * f2
                    if a3:
                        u = u * fs
                    out.add(expand_grading0(u))
                    out.add(expand_grading0(-u))
    return out


def unit_check(bound=3):
    """The grading-0 multiplication table, the 16 squares, and the boxed
    unit search; returns a report dict."""
    R = flat_ring("h")
    one = R.one()
    g = R.scalar(HCoeff.g())
    e1, e2, es = epsilon1(), epsilon2(), epsilon_sum()
    table_ok = (
        (g * e1).is_zero() and (g * e2).is_zero() and (g * es).is_zero()
        and e1 * e1 == e1 * 2 and e2 * e2 == e2 * 2
        and es * es == es * 2
        and e1 * e2 == es * 2 and e1 * es == es * 2 and e2 * es == es * 2)
    squares_ok = True
    for a0 in (0, 1):
        for a1 in (0, 1):
            for a2 in (0, 1):
                for a3 in (0, 1):
                    u = one
                    for flag, f in ((a0, one - R.scalar(HCoeff.kappa())),
                                    (a1, one - e1), (a2, one - e2),
                                    (a3, one - es)):
                        if flag:
                            u = u * f
                    if not (u * u == one):
                        squares_ok = False
    found = set(find_units(bound))
    return {
        "table_ok": table_ok,
        "squares_ok": squares_ok,
        "count": len(found),
        "matches_expected": found == expected_units(),
    }


# ----------------------------------------------------------------------
# dual classes
# ----------------------------------------------------------------------

def dual_class(name):
    """Euler class of the dual bundle, written in the usual generators."""
    R = flat_ring("h")
    one = R.one()
    kbar = one - R.scalar(HCoeff.kappa())
    f1 = one - epsilon1()
    f2 = one - epsilon2()
    table = {
        "cw1": -(f1 * R.gen("cw1")),
        "cxw1": -(kbar * f1 * R.gen("cxw1")),
        "cw2": -(f2 * R.gen("cw2")),
        "cxw2": -(kbar * f2 * R.gen("cxw2")),
        "cT": -(f1 * f2 * R.gen("cT")),
        "cxT": -(kbar * f1 * f2 * R.gen("cxT")),
    }
    try:
        return table[name]
    except KeyError:
        raise ValueError("no dual-class formula for %r" % (name,))


def bt1_dual_class(name):
    B = bt1_ring("h")
    one = B.one()
    eps = B.scalar(HCoeff.u(1)) * B.gen("z0") * B.gen("cw")
    kbar = B.scalar(HCoeff.one() - HCoeff.kappa())
    if name == "cw":
        return -((one - eps) * B.gen("cw"))
    if name == "cxw":
        return -(kbar * (one - eps) * B.gen("cxw"))
    raise ValueError("no BT^1 dual-class formula for %r" % (name,))


def bu2_dual_class(name):
    """BU(2) dual classes through eps_lambda = u[1] Z0 Z2 cL."""
    one = BU2Element.scalar(1)
    eps_l = BU2Element.monomial(Z0=1, Z2=1, cL=1) * HCoeff.u(1)
    kbar = BU2Element.scalar(HCoeff.one() - HCoeff.kappa())
    fl = one - eps_l
    table = {
        "cL": -(fl * BU2Element.gen("cL")),
        "cxL": -(kbar * fl * BU2Element.gen("cxL")),
        "cW": fl * BU2Element.gen("cW"),
        "cxW": fl * BU2Element.gen("cxW"),
    }
    try:
        return table[name]
    except KeyError:
        raise ValueError("no BU(2) dual-class formula for %r" % (name,))


# ----------------------------------------------------------------------
# Euler classes of O(m, n) and chi O(m, n)
# ----------------------------------------------------------------------

def q1_class():
    R = flat_ring("h")
    return dual_class("cw1") * (R.monomial(z00=1, z01=1) * HCoeff.t(2)
                                + dual_class("cxw1") * HCoeff.u(1))


def q2_class():
    R = flat_ring("h")
    return dual_class("cw2") * (R.monomial(z00=1, z10=1) * HCoeff.t(2)
                                + dual_class("cxw2") * HCoeff.u(1))


def bt1_q_class():
    B = bt1_ring("h")
    return bt1_dual_class("cw") * (B.gen("z0") * B.scalar(HCoeff.t(2))
                                   + bt1_dual_class("cxw")
                                   * B.scalar(HCoeff.u(1)))


def euler_omn(m, n, twisted=False):
    """Closed formula for e(O(m, n)), or e(chi O(m, n)) when twisted."""
    R = flat_ring("h")
    k, l = m // 2, n // 2  # floor division pairs with the parity split
    base_q = q1_class() * k + q2_class() * l
    modd, nodd = m % 2, n % 2
    if not twisted:
        if not modd and not nodd:
            return base_q
        if modd and not nodd:
            return dual_class("cw1") + R.monomial(z10=1, z11=1) * base_q
        if not modd and nodd:
            return dual_class("cw2") + R.monomial(z01=1, z11=1) * base_q
        return dual_class("cT") + R.monomial(z01=1, z10=1) * base_q
    if not modd and not nodd:
        return R.scalar(HCoeff.e(2)) + R.scalar(HCoeff.xi()) * base_q
    if modd and not nodd:
        return dual_class("cxw1") + R.monomial(z00=1, z01=1) * base_q
    if not modd and nodd:
        return dual_class("cxw2") + R.monomial(z00=1, z10=1) * base_q
    return dual_class("cxT") + R.monomial(z00=1, z11=1) * base_q


def recursion_zeta1(m, n, twisted=False):
    """The zeta_1 factor in e(L(m+2k, n+2l)) = e(L(m,n)) + zeta_1 (k Q1 +
    l Q2), read off the parities of (m, n)."""
    R = flat_ring("h")
    modd, nodd = m % 2, n % 2
    if not twisted:
        if not modd and not nodd:
            return R.one()
        if modd and not nodd:
            return R.monomial(z10=1, z11=1)
        if not modd and nodd:
            return R.monomial(z01=1, z11=1)
        return R.monomial(z01=1, z10=1)
    if not modd and not nodd:
        return R.scalar(HCoeff.xi())
    if modd and not nodd:
        return R.monomial(z00=1, z01=1)
    if not modd and nodd:
        return R.monomial(z00=1, z10=1)
    return R.monomial(z00=1, z11=1)


def euler_tensor_fixed(e_omega, zeta1, e_mu):
    """e(omega tensor mu) for mu with trivially acted fibers."""
    return e_omega + zeta1 * e_mu


# ----------------------------------------------------------------------
# Waner classes
# ----------------------------------------------------------------------

LINE_BUNDLES = {
    "w1": (dict(z10=1, z11=1), "cw1"),
    "xw1": (dict(z00=1, z01=1), "cxw1"),
    "w2": (dict(z01=1, z11=1), "cw2"),
    "xw2": (dict(z00=1, z10=1), "cxw2"),
    "T": (dict(z01=1, z10=1), "cT"),
    "xT": (dict(z00=1, z11=1), "cxT"),
}


def line_bundle(name):
    """(zeta^{L-2}, e(L)) for one of the standard line bundles."""
    R = flat_ring("h")
    zexp, cname = LINE_BUNDLES[name]
    return (R.monomial(**zexp), R.gen(cname))


def waner_total(bundles):
    """Coefficients [c of t^0, ..., c of t^n] of prod(zeta_i + e_i t)."""
    R = flat_ring("h")
    coeffs = [R.one()]
    for zmono, euler in bundles:
        new = [R.zero()] * (len(coeffs) + 1)
        for i, c in enumerate(coeffs):
            new[i] = new[i] + c * zmono
            new[i + 1] = new[i + 1] + c * euler
        coeffs = new
    return coeffs


def waner_product(w1, w2):
    out = [flat_ring("h").zero()] * (len(w1) + len(w2) - 1)
    for i, a in enumerate(w1):
        for j, b in enumerate(w2):
            out[i + j] = out[i + j] + a * b
    return out
