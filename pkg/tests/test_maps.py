import random

import pytest

from equicohom.hcoeff import HCoeff
from equicohom.rings import (BU2Element, FlatElement, bt1_ring, flat_ring,
                             defining_relations)
from equicohom import maps
from equicohom.classes import dual_class

R = flat_ring("h")
B = bt1_ring("h")


def _raw(poly):
    return FlatElement(R, dict(poly), normalized=True)


def test_rho_of_cT():
    img = maps.rho(R.gen("cT"))
    # zeta^{T-2}(x1 + x2) = z01 z10 (x1 + x2)
    assert img.terms == {(0, 0, 1, 1, 1, 0): 1, (0, 0, 1, 1, 0, 1): 1}


def test_rho_relation_prod_zeta():
    d = R.monomial(z00=1, z01=1, z10=1, z11=1) - R.scalar(HCoeff.xi())
    assert maps.rho(_raw(d.poly)).is_zero()


def test_rho_kills_example_class():
    x = maps.sstar(BU2Element.monomial(Z0=2, Z1=2, cW=1)) * HCoeff.t(3)
    assert maps.rho(x).is_zero()


def test_eta_zeta_quadruple():
    q = maps.eta(R.gen("z01"))
    ring = maps.ETA_RINGS["01"]
    want = ring.scalar(HCoeff.xi()) * ring.gen("z00", -1) \
        * ring.gen("z10", -1) * ring.gen("z11", -1)
    assert q[1] == want
    for i, comp in enumerate(("00", "10", "11")):
        pass
    assert q[0] == maps.ETA_RINGS["00"].gen("z01")


def test_eta_of_relation_is_zero():
    name, lhs, rhs = defining_relations(R)[1]
    d = dict(lhs)
    for m, c in rhs.items():
        d[m] = d.get(m, HCoeff.zero()) - c
    quad = maps.eta(_raw(d))
    assert all(t.is_zero() for t in quad)


def test_eta_unit():
    quad = maps.eta(R.one())
    for comp, t in zip(maps.COMPONENTS, quad):
        assert t == maps.ETA_RINGS[comp].one()


def test_eta_multiplicative_sampled():
    rng = random.Random(5)
    gens = list(R.gens.names)
    for _ in range(25):
        x = R.gen(rng.choice(gens))
        y = R.gen(rng.choice(gens))
        qx, qy, qxy = maps.eta(x), maps.eta(y), maps.eta(x * y)
        for a, b, ab in zip(qx, qy, qxy):
            assert a * b == ab


def test_phi_rows():
    # phi-bar of the base-changed witness e^{-4} zeta^{w1+w2-4} cxw1 cxw2
    data = maps.psi_slot00_data()
    quad = maps.phi(data["E"])
    assert quad[0] == maps.PHI_RINGS["00"].one()
    assert all(quad[i].is_zero() for i in (1, 2, 3))
    # phi-bar(z00) = (0, z00, z00, z00)
    quad = maps.phi(R.gen("z00"))
    assert quad[0].is_zero()
    for i, comp in enumerate(("01", "10", "11"), start=1):
        assert quad[i] == maps.PHI_RINGS[comp].gen("z00")
    quad = maps.phi(R.one())
    assert all(quad[i] == maps.PHI_RINGS[c].one()
               for i, c in enumerate(maps.COMPONENTS))


def test_fixed_sets_quadruples():
    fs = maps.fixed_sets(R.monomial(cw1=1, cxw1=1))
    assert fs == ({(1, 0): 1},) * 4
    fs = maps.fixed_sets(R.monomial(z00=1, z01=1, cw1=1))
    assert fs == ({}, {}, {(0, 0): 1}, {(0, 0): 1})


def test_pullback_t_star():
    # t*(z11 cT) = z1 cxw, which reduces to (1-kappa) z0 cw + e^2
    got = maps.tmap(_raw({R.gens.monomial(z11=1, cT=1): HCoeff.one()}))
    kbar = HCoeff.one() - HCoeff.kappa()
    assert got == B.gen("z0") * B.gen("cw") * kbar + B.scalar(HCoeff.e(2))
    assert got == B.gen("z1") * B.gen("cxw")


def test_pullback_sstar_example():
    got = maps.sstar(BU2Element.monomial(Z0=2, Z1=2, cW=1))
    want = (R.monomial(z01=2, cw1=1, cxw2=1) * HCoeff.xi()
            + R.monomial(z00=1, z01=2, z10=1, cw1=1) * HCoeff.e(2))
    assert got == want


def test_pullback_involutions():
    for fn in (maps.delta, maps.chi1, maps.gamma):
        for name in R.gens.names:
            assert fn(fn(R.gen(name))) == R.gen(name)


def test_pullback_unknown_name():
    with pytest.raises(ValueError):
        maps.pullback("nope", R.one())


def test_mod_n():
    assert maps.mod_n(R.scalar(HCoeff.xi())) == {}
    assert maps.mod_n(R.scalar(HCoeff.from_int(2))) == {}
    assert maps.mod_n(R.one()) == {R.gens.one(): 1}
    assert maps.modn_coeff(HCoeff.kappa()) == 0
    assert maps.modn_coeff(HCoeff.g()) == 0


def test_nonequiv_pushforward():
    assert maps.nonequiv_pushforward({(0, 0): 1}) == {}
    assert maps.nonequiv_pushforward({(1, 0): 1}) == {(0, 0): 1}
    assert maps.nonequiv_pushforward({(1, 1): 1}) == {}
    # x1hat^2 = c1 x1hat - c2, so B = c1
    assert maps.nonequiv_pushforward({(2, 0): 1}) == {(1, 0): 1}


def test_pushforward_values_through_components():
    for g in ("one", "z01*cw1d", "z10*cxw1d", "cw1d*cxw1d"):
        assert maps.middle_decomposition_check(g)
        assert all(maps.eta_route_check(g))


def test_pushforward_module_linearity():
    zero = BU2Element({})
    one = BU2Element.scalar(1)
    a = BU2Element.gen("Z1")
    lhs = maps.pushforward((zero, a, zero, zero))
    rhs = a * maps.pushforward((zero, one, zero, zero))
    assert (lhs - rhs).star_image().is_zero()


def test_pushforward_grading_drop():
    # s_!(cw1d cxw1d) = cxLd; gradings drop by lambda = 2 + W01 + W10
    from equicohom.classes import bu2_dual_class
    from equicohom.grading import GradingBT2
    x = dual_class("cw1") * dual_class("cxw1")
    val = bu2_dual_class("cxL")
    lam = GradingBT2(2, 0, m01=1, m10=1)
    assert val.grading() + lam == x.grading()


def test_psi_well_defined_idempotents():
    tabs = maps.psi_tables()
    E = tabs["00"]["E"]
    assert E * E == E
    data = maps.psi_slot00_data()
    assert data["z01inv"] * E == data["z01inv"]


def test_psi_inverts_phi():
    Rp = flat_ring("phi")
    for name in ("z00", "cw1", "cT"):
        g = Rp.gen(name)
        assert maps.psi(maps.phi(g)) == g
