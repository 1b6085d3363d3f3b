"""The full verification suite.

Every published identity the engine can check is run here, grouped by
acceptance criterion.  Each check returns (name, passed, details); the
report is deterministic so repeated runs are byte identical.

C01c is expected to fail: no thirteen-rule flat reduction system with the
published excluded monomials can exist, because the would-be irreducible
monomials span a rank-0 piece in grading 4*sigma where the ring has rank
1 (see rings.flat_rule_obstruction).  The check runs the mechanical
derivation anyway and reports the precise obstruction.
"""

from __future__ import annotations

import random

from . import classes as cls
from . import maps
from .grading import GradingBT1, GradingBT2, embed_bt1_pi1, embed_bt1_pi2
from .hcoeff import HCoeff, check_h_confluence, validate_rules
from .rewrite import OrderViolation
from .rings import (BU2Element, FlatElement, basis_count_grid,
                    basis_enumerate, bt1_ring, bt1_relations,
                    build_flat_rewrite_system, flat_ring,
                    flat_rule_obstruction, kunneth_convolution,
                    defining_relations)


def _raw(R, poly):
    return FlatElement(R, dict(poly), normalized=True)


def _raw_diff(R, lhs, rhs):
    poly = dict(lhs)
    for m, c in rhs.items():
        if m in poly:
            poly[m] = poly[m] - c
        else:
            poly[m] = -c
    return _raw(R, poly)


# ----------------------------------------------------------------------
# C01: confluence
# ----------------------------------------------------------------------

def check_c01a():
    rep = bt1_ring("h").system.check_confluence()
    return rep.ok, "%d overlap pairs joined" % len(rep.pairs)


def check_c01b():
    R = flat_ring("h")
    rep = R.two.system.check_confluence()
    if not rep.ok:
        return False, "failing pairs: %s" % [p["rules"] for p in rep.failures]
    # the R1/R3 ambiguity joins at zeta0 * z11 * cxw2
    sys = R.two.system
    gens = R.two.gens
    by_name = {}
    for p in rep.pairs:
        by_name[frozenset(p["rules"])] = p
    p13 = by_name[frozenset(("R1", "R3"))]
    want13 = {gens.monomial(z11=1, cxw2=1): R.bt1.gen("z0")}
    ok13 = p13["nf1"] == want13
    # the R8/R12 ambiguity joins at
    #   cw1 cxw1 z00 + z00 cw2 cxw2 + (2-kappa)(1-eps1) cxw1 z11 cxw2
    b = R.bt1
    two_minus_k = b.scalar(HCoeff.from_int(2) - HCoeff.kappa())
    eps1 = b.scalar(HCoeff.u(1)) * b.gen("z0") * b.gen("cw")
    coeff = two_minus_k * (b.one() - eps1) * b.gen("cxw")
    want812 = {
        gens.monomial(z00=1): b.gen("cw") * b.gen("cxw"),
        gens.monomial(z00=1, cw2=1, cxw2=1): b.one(),
        gens.monomial(z11=1, cxw2=1): coeff,
    }
    p812 = by_name[frozenset(("R8", "R12"))]
    ok812 = p812["nf1"] == want812
    details = ("%d pairs joined; R1/R3 join %s; R8/R12 join %s"
               % (len(rep.pairs), ok13, ok812))
    return rep.ok and ok13 and ok812, details


def check_c01c():
    """The derived 13-rule flat system.  Expected to fail; see module
    docstring and the decisions ledger."""
    kun, grid, basic = flat_rule_obstruction()
    try:
        sys = build_flat_rewrite_system()
    except OrderViolation as exc:
        detail = ("derivation rejected: %s | module obstruction: grading "
                  "4s has rank %d (Kunneth) = %d (grid) but its basis "
                  "monomial z00^2*z01*z10*cw1*cw2 is divisible by the "
                  "excluded z00^2*cw2 (basic=%s), so the 13 exclusions "
                  "span rank 0 there" % (exc, kun, grid, basic))
        return False, detail
    rep = sys.check_confluence()
    return rep.ok, "%d pairs" % len(rep.pairs)


# ----------------------------------------------------------------------
# C02: the relation suite in both models and under the three maps
# ----------------------------------------------------------------------

def check_c02():
    R = flat_ring("h")
    bad = []
    for name, lhs, rhs in defining_relations(R):
        if not (R.element(lhs) - R.element(rhs)).is_zero():
            bad.append(name + ":flat")
        two = R.two.system
        diff = two.add(R.unflatten(lhs),
                       {m: -c for m, c in R.unflatten(rhs).items()})
        if two.reduce(diff):
            bad.append(name + ":two-level")
        d = _raw_diff(R, lhs, rhs)
        if not all(t.is_zero() for t in maps.eta(d)):
            bad.append(name + ":eta")
        if not maps.rho(d).is_zero():
            bad.append(name + ":rho")
        if not all(t.is_zero() for t in maps.phi(d)):
            bad.append(name + ":phi")
    return not bad, "bad: %s" % bad if bad else "8 relations x 5 checks"


# ----------------------------------------------------------------------
# C03: basis grids and element lists
# ----------------------------------------------------------------------

GRID1 = {(0, 0): 1, (0, 2): 2, (0, 4): 1, (2, 2): 2, (2, 4): 4, (2, 6): 2,
         (4, 4): 3, (4, 6): 6, (4, 8): 3, (6, 6): 4, (6, 8): 8, (6, 10): 4}
GRID2 = {(0, 0): 1, (0, 2): 1, (2, 0): 1, (2, 2): 3, (2, 4): 2,
         (4, 2): 2, (4, 4): 5, (4, 6): 3, (6, 4): 3, (6, 6): 7, (6, 8): 4}


_X0 = {(0, 0): 1}
_X1 = {(1, 0): 1}
_X2 = {(0, 1): 1}
_X12 = {(1, 0): 1, (0, 1): 1}
_Z = {}

LIST1 = [
    (dict(), (0, 0), (_X0, _X0, _X0, _X0)),
    (dict(z00=1, z01=1, cw1=1), (0, 2), (_Z, _Z, _X0, _X0)),
    (dict(z00=1, z10=1, cw2=1), (0, 2), (_Z, _X0, _Z, _X0)),
    (dict(z00=2, z01=1, z10=1, cw1=1, cw2=1), (0, 4), (_Z, _Z, _Z, _X0)),
    (dict(cw1=1, cxw1=1), (2, 2), (_X1, _X1, _X1, _X1)),
    (dict(cw2=1, cxw2=1), (2, 2), (_X2, _X2, _X2, _X2)),
    (dict(z00=1, z01=1, cw1=2, cxw1=1), (2, 4), (_Z, _Z, _X1, _X1)),
    (dict(z00=1, z10=1, cw1=1, cxw1=1, cw2=1), (2, 4), (_Z, _X1, _Z, _X1)),
    (dict(z00=1, z01=1, cw1=1, cw2=1, cxw2=1), (2, 4), (_Z, _Z, _X2, _X2)),
    (dict(z00=1, z10=1, cw2=2, cxw2=1), (2, 4), (_Z, _X2, _Z, _X2)),
    (dict(z00=2, z01=1, z10=1, cw1=2, cxw1=1, cw2=1), (2, 6),
     (_Z, _Z, _Z, _X1)),
    (dict(z00=2, z01=1, z10=1, cw1=1, cw2=2, cxw2=1), (2, 6),
     (_Z, _Z, _Z, _X2)),
]

LIST2 = [
    (dict(z01=1, z10=1), (0, 0), (_X0, _Z, _Z, _X0)),
    (dict(z00=1, z01=2, z10=1, cw1=1), (0, 2), (_Z, _Z, _Z, _X0)),
    (dict(cT=1), (2, 0), (_X12, _X0, _X0, _X12)),
    (dict(z01=1, z10=1, cw1=1, cxw1=1), (2, 2), (_X1, _Z, _Z, _X1)),
    (dict(z01=1, z10=1, cw2=1, cxw2=1), (2, 2), (_X2, _Z, _Z, _X2)),
    (dict(z00=1, z01=1, cw1=1, cT=1), (2, 2), (_Z, _Z, _X0, _X12)),
    (dict(z00=1, z01=2, z10=1, cw1=2, cxw1=1), (2, 4), (_Z, _Z, _Z, _X1)),
    (dict(z00=1, z01=2, z10=1, cw1=1, cw2=1, cxw2=1), (2, 4),
     (_Z, _Z, _Z, _X2)),
]


def _check_list(coset, data, window):
    R = flat_ring("h")
    cells = basis_enumerate(coset, window)
    listed = {}
    for exps, cell, quad in data:
        listed.setdefault(cell, []).append(
            (R.gens.monomial(**exps), quad))
    bad = []
    for cell, entries in listed.items():
        got = set(cells.get(cell, []))
        want = set(m for m, _ in entries)
        if not want <= got:
            bad.append("cell %s missing %s" % (cell, want - got))
        for mono, quad in entries:
            fs = maps.fixed_sets(FlatElement(R, {mono: HCoeff.one()},
                                             normalized=True))
            if fs != quad:
                bad.append("quadruple mismatch at %s: %s vs %s"
                           % (R.gens.format(mono), fs, quad))
    return bad


def check_c03():
    grid1 = basis_count_grid(GradingBT2(), (0, 6, 0, 10))
    grid2 = basis_count_grid(GradingBT2(m01=1, m10=1), (0, 6, 0, 10))
    bad = []
    if grid1 != GRID1:
        bad.append("grid1 mismatch: %s" % (grid1,))
    if grid2 != GRID2:
        bad.append("grid2 mismatch: %s" % (grid2,))
    bad += _check_list(GradingBT2(), LIST1, (0, 6, 0, 10))
    bad += _check_list(GradingBT2(m01=1, m10=1), LIST2, (0, 6, 0, 10))
    return not bad, "; ".join(bad) if bad else \
        "12 + 11 cells, 12 + 8 listed elements with fixed-set quadruples"


# ----------------------------------------------------------------------
# C04: the rho base change
# ----------------------------------------------------------------------

def _monomials_up_to_weight(wmax):
    from .rings import FLAT_WEIGHTS
    out = []

    def rec(i, rest, acc):
        if i == len(FLAT_WEIGHTS):
            out.append(tuple(acc))
            return
        w = FLAT_WEIGHTS[i]
        for e in range(rest // w + 1):
            rec(i + 1, rest - e * w, acc + [e])

    rec(0, wmax, [])
    return out


def check_c04():
    from .classes import _det
    from .rings import basis_monomials_in_grading, is_basis_monomial
    R = flat_ring("h")
    bad = []
    for name, lhs, rhs in maps.rho_simplified_relations():
        if lhs != rhs:
            bad.append("simplified %s" % name)
    # relations die in the rho base change of the presented ring
    Rr = flat_ring("rho")
    for name, lhs, rhs in defining_relations(R):
        lr = {m: c.rho() for m, c in lhs.items()}
        rr = {m: c.rho() for m, c in rhs.items()}
        d = Rr.element(lr) - Rr.element(rr)
        if not d.is_zero():
            bad.append("base-change %s" % name)
    # basis-to-basis: monomials free of tensor classes map to single
    # unit monomials.  The tensor classes restrict to unit multiples of
    # x1+x2, so the published basis-to-basis statement is checked as it
    # stands: the target is free over Z[iota^{+-1}], so basis monomials
    # are grouped by iota-orbit of gradings (fixed underlying degree and
    # Omega coordinates) and the transition matrix to the x-monomial
    # basis must be unimodular on each orbit.
    classes = {}
    plain = 0
    for m in _monomials_up_to_weight(8):
        if not is_basis_monomial(m):
            continue
        if m[-1] == 0 and m[-2] == 0:
            plain += 1
            ok, _ = maps.rho_unit_monomial_image(m)
            if not ok:
                bad.append("non-unit image for %s" % R.gens.format(m))
        g = R.monomial_grading(m)
        classes[(g.rho_deg(), g.m00, g.m01, g.m10)] = g
    checked = 0
    for (rho_deg, m00, m01, m10), g0 in sorted(classes.items()):
        monos = []
        for a in range(rho_deg - 32, rho_deg + 1, 2):
            g = GradingBT2(a, rho_deg - a, m00, m01, m10)
            monos.extend(basis_monomials_in_grading(g))
        d = rho_deg // 2
        if len(monos) != d + 1:
            bad.append("rank %d != %d at orbit of %s"
                       % (len(monos), d + 1, g0))
            continue
        zeta_part = None
        rows = []
        degenerate = False
        for m in monos:
            img = maps.rho(FlatElement(R, {m: HCoeff.one()},
                                       normalized=True))
            # one iota power and one zeta part per homogeneous image; the
            # iota power is a unit and is stripped row by row
            row = [0] * (d + 1)
            iexp = None
            for mm, c in img.terms.items():
                if iexp is None:
                    iexp = mm[0]
                if zeta_part is None:
                    zeta_part = mm[1:4]
                if mm[0] != iexp or mm[1:4] != zeta_part:
                    bad.append("inhomogeneous unit part at orbit of %s"
                               % (g0,))
                    degenerate = True
                row[mm[4]] = c
            rows.append(row)
        checked += 1
        if not degenerate and abs(_det(rows)) != 1:
            bad.append("non-unimodular transition at orbit of %s" % (g0,))
    return not bad, ("; ".join(bad[:6]) if bad
                     else "8 simplified + 8 base-changed relations; %d "
                          "tensor-free basis monomials map to unit "
                          "monomials; %d iota-orbits basis-to-basis"
                          % (plain, checked))


# ----------------------------------------------------------------------
# C05: the fixed-point isomorphism
# ----------------------------------------------------------------------

def check_c05():
    Rh = flat_ring("h")
    Rp = flat_ring("phi")
    bad = []
    table = maps.phi_bar_generator_table()
    for name, expected in table.items():
        got = maps.phi(Rh.gen(name))
        if not all(g == e for g, e in zip(got, expected)):
            bad.append("phi-bar(%s)" % name)
    # displayed rows
    data = maps.psi_slot00_data()
    rows = 0
    gx1 = maps.phi(data["x1"])
    if not all(gx1[i] == maps.PHI_RINGS[c].gen("x1")
               for i, c in enumerate(maps.COMPONENTS)):
        bad.append("x1 lift")
    rows += 1
    gx2 = maps.phi(data["x2"])
    if not all(gx2[i] == maps.PHI_RINGS[c].gen("x2")
               for i, c in enumerate(maps.COMPONENTS)):
        bad.append("x2 lift")
    rows += 1
    tabs = maps.psi_tables()
    for comp in maps.COMPONENTS:
        got = maps.phi(tabs[comp]["E"])
        ok = all((got[i] == maps.PHI_RINGS[c].one()) if c == comp
                 else got[i].is_zero()
                 for i, c in enumerate(maps.COMPONENTS))
        if not ok:
            bad.append("idempotent row %s" % comp)
        rows += 1
    for zname in ("z01", "z10", "z11"):
        got = maps.phi(data[zname + "inv"])
        ok = got[0] == maps.PHI_RINGS["00"].gen(zname, -1) and \
            all(got[i].is_zero() for i in (1, 2, 3))
        if not ok:
            bad.append("%s^-1 row" % zname)
        rows += 1
    got = maps.phi(tabs["01"]["z00inv"])
    ok = got[1] == maps.PHI_RINGS["01"].gen("z00", -1) and \
        all(got[i].is_zero() for i in (0, 2, 3))
    if not ok:
        bad.append("z00^-1 row (01 slot)")
    rows += 1
    # idempotence and absorption make psi well defined
    E = tabs["00"]["E"]
    if not (E * E == E):
        bad.append("E idempotent")
    rows += 1
    P = data["z01inv"]
    if not (P * E == P):
        bad.append("E absorbs slot elements")
    rows += 1
    # psi inverts phi-bar on all ten generators
    for name in Rp.gens.names:
        g = Rp.gen(name)
        if not maps.psi(maps.phi(g)) == g:
            bad.append("psi(phi(%s))" % name)
    return not bad, ("; ".join(bad) if bad
                     else "10 generator values, %d rows, psi o phi-bar = id "
                          "on 10 generators" % rows)


# ----------------------------------------------------------------------
# C06 .. C08
# ----------------------------------------------------------------------

def check_c06():
    rep = cls.unit_check(bound=3)
    ok = (rep["table_ok"] and rep["squares_ok"] and rep["count"] == 32
          and rep["matches_expected"])
    return ok, ("table %(table_ok)s, squares %(squares_ok)s, "
                "%(count)d units found, matches %(matches_expected)s" % rep)


def check_c07():
    R = flat_ring("h")
    bad = []
    duals = {
        "cw1": -(R.one() - cls.epsilon1()) * R.gen("cw1"),
        "cxw1": -((R.one() - R.scalar(HCoeff.kappa()))
                  * (R.one() - cls.epsilon1()) * R.gen("cxw1")),
        "cw2": -(R.one() - cls.epsilon2()) * R.gen("cw2"),
        "cxw2": -((R.one() - R.scalar(HCoeff.kappa()))
                  * (R.one() - cls.epsilon2()) * R.gen("cxw2")),
        "cT": -((R.one() - cls.epsilon1()) * (R.one() - cls.epsilon2())
                * R.gen("cT")),
        "cxT": -((R.one() - R.scalar(HCoeff.kappa()))
                 * (R.one() - cls.epsilon1()) * (R.one() - cls.epsilon2())
                 * R.gen("cxT")),
    }
    for name, want in duals.items():
        if cls.dual_class(name) != want:
            bad.append("formula %s" % name)
    for name in R.gens.names:
        if maps.delta(maps.delta(R.gen(name))) != R.gen(name):
            bad.append("involution %s" % name)
    return not bad, ("; ".join(bad) if bad
                     else "6 formulas, involution on 10 generators")


def check_c08():
    R = flat_ring("h")
    bad = []
    q1, q2 = cls.q1_class(), cls.q2_class()
    if cls.euler_omn(2, 0) != q1:
        bad.append("Q1 != e(O(2,0))")
    if cls.euler_omn(0, 2) != q2:
        bad.append("Q2 != e(O(0,2))")
    if maps.pi1(cls.bt1_q_class()) != q1:
        bad.append("pi1* Q != Q1")
    if maps.pi2(cls.bt1_q_class()) != q2:
        bad.append("pi2* Q != Q2")
    checks = 0
    for tw in (False, True):
        for m in range(-3, 4):
            for n in range(-3, 4):
                for k in (-1, 0, 1):
                    for l in (-1, 0, 1):
                        lhs = cls.euler_omn(m + 2 * k, n + 2 * l, tw)
                        rhs = cls.euler_tensor_fixed(
                            cls.euler_omn(m, n, tw),
                            cls.recursion_zeta1(m, n, tw),
                            q1 * k + q2 * l)
                        checks += 1
                        if lhs != rhs:
                            bad.append("recursion m=%d n=%d k=%d l=%d tw=%s"
                                       % (m, n, k, l, tw))
    return not bad, ("; ".join(bad[:4]) if bad
                     else "Q identities and %d recursion instances" % checks)


# ----------------------------------------------------------------------
# C09: relation redundancy via self maps
# ----------------------------------------------------------------------

def check_c09():
    R = flat_ring("h")
    B = bt1_ring("h")
    rels = {n: (l, r) for n, l, r in defining_relations(R)}
    bad = []
    l5, r5 = rels["z11cT"]
    l6, r6 = rels["z01cxT"]
    got = maps.chi1(_raw(R, l5)) - maps.chi1(_raw(R, r5))
    want = R.element(l6) - R.element(r6)
    if not (got == want and got.is_zero()):
        bad.append("chi1")
    # t* of the z11 cT relation reproduces the BT^1 fundamental relation
    tl = maps.tmap(_raw(R, l5))
    tr = maps.tmap(_raw(R, r5))
    kbar = HCoeff.one() - HCoeff.kappa()
    expect = B.gen("z0") * B.gen("cw") * kbar + B.scalar(HCoeff.e(2))
    if not (tl == tr == expect):
        bad.append("t*")
    # the pi pullbacks of the BT^1 relation give the two e^2 relations
    bn, bl, br = bt1_relations(B)[1]
    from .rings import BT1Element
    raw_b = BT1Element(B, dict(bl), normalized=True)
    raw_r = BT1Element(B, dict(br), normalized=True)
    d1 = maps.pi1(raw_b) - maps.pi1(raw_r)
    d2 = maps.pi2(raw_b) - maps.pi2(raw_r)
    if not (d1.is_zero() and (maps.pi1(raw_b) ==
                              R.element(rels["cxw1"][0]))):
        bad.append("pi1")
    if not (d2.is_zero() and (maps.pi2(raw_b) ==
                              R.element(rels["cxw2"][0]))):
        bad.append("pi2")
    return not bad, "; ".join(bad) if bad else "chi1, t*, pi1, pi2"


# ----------------------------------------------------------------------
# C10: the BU(2) comparison suite
# ----------------------------------------------------------------------

def _bu(name, **exps):
    return BU2Element.monomial(**exps)


def check_c10():
    R = flat_ring("h")
    bad = []
    # s* multiplicative on monomial pairs up to weight 8
    mono_pool = [dict(Z0=1), dict(Z1=1), dict(Z2=1), dict(cL=1),
                 dict(cxL=1), dict(cW=1), dict(cxW=1), dict(Z0=2, Z1=1),
                 dict(Z2=2, cL=1), dict(Z0=1, Z1=1, Z2=1)]
    pairs = 0
    for i in range(len(mono_pool)):
        for j in range(i, len(mono_pool)):
            m1 = BU2Element.monomial(**mono_pool[i])
            m2 = BU2Element.monomial(**mono_pool[j])
            if (maps.sstar(m1) * maps.sstar(m2)) != maps.sstar(m1 * m2):
                bad.append("s* mult %d,%d" % (i, j))
            pairs += 1
    # the Example: t[3] s*(z0^2 z1^2 cW) = 0, with the stated expansion
    img = maps.sstar(BU2Element.monomial(Z0=2, Z1=2, cW=1))
    want = (R.monomial(z01=2, cw1=1, cxw2=1) * HCoeff.xi()
            + R.monomial(z00=1, z01=2, z10=1, cw1=1) * HCoeff.e(2))
    if img != want:
        bad.append("example expansion")
    if not (img * HCoeff.t(3)).is_zero():
        bad.append("example t3 image")
    # module structure identities over BU(2)
    u1 = HCoeff.u(1)
    t2 = HCoeff.t(2)
    z01cw1 = R.monomial(z01=1, cw1=1)
    z10cxw1 = R.monomial(z10=1, cxw1=1)
    cc1 = R.monomial(cw1=1, cxw1=1)
    s = maps.sstar
    ident = [
        ("rw1", R.monomial(z10=1, cw2=1),
         s(_bu("", Z2=1, cL=1) + _bu("", Z0=1, Z1=1, cW=1) * u1) - z01cw1),
        ("rw2", R.monomial(z01=1, cxw2=1),
         s(_bu("", Z0=1, cL=1) + _bu("", Z1=1, Z2=1, cxW=1) * u1) - z10cxw1),
        ("rw3", R.monomial(cw2=1, cxw2=1),
         s(_bu("", cL=1, cxL=1) - _bu("", Z0=2, Z1=1, cW=1) * t2) - cc1),
        ("p1", z01cw1 * z01cw1,
         s(_bu("", Z2=1, cL=1) + _bu("", Z0=1, Z1=1, cW=1) * u1) * z01cw1
         - s(_bu("", Z1=1, cW=1))),
        ("p2", z10cxw1 * z10cxw1,
         s(_bu("", Z0=1, cL=1) + _bu("", Z1=1, Z2=1, cxW=1) * u1) * z10cxw1
         - s(_bu("", Z1=1, cxW=1))),
        ("p3", cc1 * cc1,
         s(_bu("", cL=1, cxL=1) - _bu("", Z0=2, Z1=1, cW=1) * t2) * cc1
         - s(_bu("", cW=1, cxW=1))),
        ("p4", z01cw1 * z10cxw1, s(_bu("", Z1=1)) * cc1),
        ("p5", z01cw1 * cc1,
         s(_bu("", cL=1, cxL=1) - _bu("", Z0=2, Z1=1, cW=1) * t2) * z01cw1
         + s(_bu("", cW=1)) * z10cxw1
         - s(_bu("", Z0=1, cL=1, cW=1) + _bu("", Z1=1, Z2=1, cW=1,
                                             cxW=1) * u1)),
        # The published sixth identity misprints zeta_1 c_lambda c_chi-omega
        # in the last pullback (the grading does not even match); the
        # chi1 chi2 transport of the fifth identity fixes it to
        # zeta_2 c_lambda c_chi-omega.
        ("p6", z10cxw1 * cc1,
         s(_bu("", cL=1, cxL=1) - _bu("", Z0=2, Z1=1, cW=1) * t2) * z10cxw1
         + s(_bu("", cxW=1)) * z01cw1
         - s(_bu("", Z2=1, cL=1, cxW=1) + _bu("", Z0=1, Z1=1, cW=1,
                                              cxW=1) * u1)),
        # the two groupings of the torsion term agree
        ("p6-t2-grouping", s(_bu("", Z0=2, Z1=1, cW=1)) * t2,
         s(_bu("", Z2=2, Z1=1, cxW=1)) * t2),
    ]
    for name, lhs, rhs in ident:
        if lhs != rhs:
            bad.append("identity %s" % name)
    # the Remark identity
    lhs = s(_bu("", Z0=1, Z1=1, cxL=1)) * z01cw1
    rhs = cc1 * HCoeff.xi() + s(_bu("", Z0=2, Z1=1, cW=1))
    if lhs != rhs:
        bad.append("remark identity")
    # mod-N simplified relations
    rels = {n: (l, r) for n, l, r in defining_relations(R)}
    m = R.gens.monomial
    modn_expect = {
        "prod-zeta": ({m(z00=1, z01=1, z10=1, z11=1): 1}, {}),
        "cxw1": ({m(z10=1, z11=1, cxw1=1): 1}, {m(z00=1, z01=1, cw1=1): 1}),
        "cxw2": ({m(z01=1, z11=1, cxw2=1): 1}, {m(z00=1, z10=1, cw2=1): 1}),
        "z00cT": ({m(z00=1, cT=1): 1},
                  {m(z10=1, cxw1=1): 1, m(z01=1, cxw2=1): 1}),
        "z11cT": ({m(z11=1, cT=1): 1},
                  {m(z01=1, cw1=1): 1, m(z10=1, cw2=1): 1}),
        "z01cxT": ({m(z01=1, cxT=1): 1},
                   {m(z11=1, cxw1=1): 1, m(z00=1, cw2=1): 1}),
        "z10cxT": ({m(z10=1, cxT=1): 1},
                   {m(z00=1, cw1=1): 1, m(z11=1, cxw2=1): 1}),
        "cTcxT": ({m(cT=1, cxT=1): 1},
                  {m(cw1=1, cxw1=1): 1, m(cw2=1, cxw2=1): 1}),
    }
    for name, (lhs, rhs) in rels.items():
        gl, gr = maps.mod_n_relation(lhs, rhs)
        el, er = modn_expect[name]
        if (gl, gr) != (el, er):
            bad.append("mod-N %s" % name)
    # the BU(2)-image relations mod N
    bu_rels = [
        ("zzz", maps.sstar(_bu("", Z0=1, Z1=1, Z2=1))),
        ("z1cxL", maps.sstar(_bu("", Z1=1, cxL=1))
         - maps.sstar(_bu("", Z0=1, Z2=1, cL=1))),
        ("z2cxW", maps.sstar(_bu("", Z2=2, cxW=1))
         - maps.sstar(_bu("", Z0=2, cW=1))),
    ]
    for name, elem in bu_rels:
        if maps.mod_n(elem):
            bad.append("mod-N BU(2) %s" % name)
    # the witnessing linear relation of the non-freeness proof
    witness = (maps.sstar(_bu("", Z0=1, Z1=1, cxL=1)) * z01cw1
               - maps.sstar(_bu("", Z0=2, Z1=1, cW=1)))
    if maps.mod_n(witness):
        bad.append("not-free witness")
    # H/N facts
    facts = (maps.modn_coeff(HCoeff.from_int(2)) == 0
             and maps.modn_coeff(HCoeff.g()) == 0
             and maps.modn_coeff(HCoeff.kappa()) == 0
             and maps.modn_coeff(HCoeff.one()) == 1
             and maps.modn_coeff(HCoeff.xi()) == 0)
    if not facts:
        bad.append("H/N facts")
    return not bad, ("; ".join(bad) if bad
                     else "%d s* pairs, example, 9 identities, remark, "
                          "mod-N lists, witness, H/N facts" % pairs)


# ----------------------------------------------------------------------
# C11: the pushforward
# ----------------------------------------------------------------------

def check_c11():
    bad = []
    if maps.nonequiv_pushforward({(0, 0): 1}) != {}:
        bad.append("s!(1)")
    if maps.nonequiv_pushforward({(1, 0): 1}) != {(0, 0): 1}:
        bad.append("s!(x1)")
    if maps.nonequiv_pushforward({(1, 1): 1}) != {}:
        bad.append("s!(x1 x2)")
    for g in ("one", "z01*cw1d", "z10*cxw1d", "cw1d*cxw1d"):
        if not maps.middle_decomposition_check(g):
            bad.append("decomposition %s" % g)
        if not all(maps.eta_route_check(g)):
            bad.append("eta route %s" % g)
    # module linearity of the packaged pushforward
    z1 = BU2Element.gen("Z1")
    zero = BU2Element({})
    one = BU2Element.scalar(1)
    val = maps.pushforward((z1, zero, zero, zero))
    want = z1 * maps.pushforward((one, zero, zero, zero))
    if not (val - want).star_image().is_zero():
        bad.append("linearity")
    return not bad, ("; ".join(bad) if bad
                     else "division rule, 4 decompositions, 4 eta routes, "
                          "linearity")


# ----------------------------------------------------------------------
# C12: Waner classes
# ----------------------------------------------------------------------

def check_c12():
    R = flat_ring("h")
    bad = []
    w = cls.waner_total([cls.line_bundle("w1"), cls.line_bundle("w2")])
    want0 = R.monomial(z01=1, z10=1, z11=2)
    middle = R.monomial(z01=1, z11=1, cw1=1) + R.monomial(z10=1, z11=1,
                                                          cw2=1)
    want2 = R.monomial(cw1=1, cw2=1)
    if w[0] != want0 or w[1] != middle or w[2] != want2:
        bad.append("W(w1+w2) expansion")
    if maps.sstar(BU2Element.monomial(Z1=1, Z2=2)) != want0:
        bad.append("t^0 coefficient vs s*(zeta^{w-4})")
    if maps.sstar(BU2Element.monomial(Z2=2, cL=1)) != middle:
        bad.append("middle coefficient vs s*(Z2^2 cL)")
    if maps.sstar(BU2Element.monomial(cW=1)) != want2:
        bad.append("t^2 coefficient vs s*(cW)")
    rng = random.Random(20260808)
    names = list(cls.LINE_BUNDLES)
    for trial in range(3):
        l1 = [cls.line_bundle(rng.choice(names))
              for _ in range(rng.randint(1, 2))]
        l2 = [cls.line_bundle(rng.choice(names))
              for _ in range(rng.randint(1, 2))]
        lhs = cls.waner_total(l1 + l2)
        rhs = cls.waner_product(cls.waner_total(l1), cls.waner_total(l2))
        if not (len(lhs) == len(rhs)
                and all(a == b for a, b in zip(lhs, rhs))):
            bad.append("multiplicativity trial %d" % trial)
    return not bad, ("; ".join(bad) if bad
                     else "expansion, middle coefficient, 3 random "
                          "multiplicativity trials")


# ----------------------------------------------------------------------
# C13: the Kunneth comparison
# ----------------------------------------------------------------------

def check_c13():
    window = (0, 8, 0, 8)
    bad = []
    zero1 = GradingBT1()
    got = basis_count_grid(GradingBT2(), window)
    want = kunneth_convolution(zero1, zero1, window)
    if got != want:
        bad.append("zero coset")
    # the SRO coset W00 - W11 = pi1*(W0) - pi2*(W1)
    alpha = GradingBT1(m0=1)
    beta = -GradingBT1(m1=1)
    coset = embed_bt1_pi1(alpha) + embed_bt1_pi2(beta)
    got = basis_count_grid(coset, window)
    want = kunneth_convolution(alpha, beta, window)
    if got != want:
        bad.append("W00-W11 coset: %s vs %s" % (got, want))
    return not bad, ("; ".join(bad) if bad
                     else "zero coset and W00-W11 coset windows to "
                          "degree 8")


# ----------------------------------------------------------------------
# C14: coefficient validation
# ----------------------------------------------------------------------

def check_c14():
    bad_rules = validate_rules(nmax=5)
    fails = check_h_confluence(nmax=4)
    ok = not bad_rules and not fails
    return ok, ("rule failures %s, overlap failures %d"
                % (bad_rules, len(fails)) if not ok
                else "all rules valid under rho and phi; overlaps join")


CRITERIA = [
    ("C01a", "BT1 3-rule confluence", check_c01a),
    ("C01b", "BT2 two-level confluence incl. Appendix joins", check_c01b),
    ("C01c", "derived 13-rule flat system confluence", check_c01c),
    ("C02", "relation suite in both models and under eta/rho/phi",
     check_c02),
    ("C03", "basis grids and element lists", check_c03),
    ("C04", "rho base change", check_c04),
    ("C05", "fixed-point isomorphism and psi inverse", check_c05),
    ("C06", "units", check_c06),
    ("C07", "dual classes", check_c07),
    ("C08", "Euler classes of O(m,n)", check_c08),
    ("C09", "relation redundancy (chi1, t*, pi*)", check_c09),
    ("C10", "BU(2) comparison suite", check_c10),
    ("C11", "pushforward", check_c11),
    ("C12", "Waner classes", check_c12),
    ("C13", "Kunneth counts", check_c13),
    ("C14", "point-coefficient validation", check_c14),
]

# C01c is a faithful implementation of a check that cannot pass; see the
# module docstring.
EXPECTED_FAILURES = frozenset(["C01c"])


def run_all(names=None):
    from concurrent.futures import ThreadPoolExecutor

    from .rewrite import worker_count

    selected = [(code, title, fn) for code, title, fn in CRITERIA
                if not names or code in names]

    def run_one(item):
        code, title, fn = item
        try:
            passed, details = fn()
        except Exception as exc:  # surface, never hide
            passed, details = False, "exception: %r" % (exc,)
        return {"name": code, "title": title, "passed": passed,
                "details": details,
                "expected": code not in EXPECTED_FAILURES}

    workers = worker_count()
    if workers > 1 and len(selected) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(run_one, selected))
    return [run_one(item) for item in selected]


def report_lines(results):
    lines = []
    for r in results:
        mark = "PASS" if r["passed"] else "FAIL"
        lines.append("%s %-5s %s: %s" % (mark, r["name"], r["title"],
                                         r["details"]))
    ok = all(r["passed"] or not r["expected"] for r in results)
    lines.append("overall: %s (%d/%d passed; expected failures: %s)"
                 % ("ok" if ok else "FAILED",
                    sum(1 for r in results if r["passed"]), len(results),
                    ", ".join(sorted(EXPECTED_FAILURES)) or "none"))
    return lines, ok
