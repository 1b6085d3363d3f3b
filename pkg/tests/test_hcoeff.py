import random

import pytest

from equicohom.hcoeff import (EXI, HCoeff, Laurent1, OutsideFragmentError,
                              check_h_confluence, h_rules, validate_rules)


def test_one_minus_kappa_squares_to_one():
    x = HCoeff.one() - HCoeff.kappa()
    assert x * x == HCoeff.one()


def test_xi_t2_is_g():
    assert HCoeff.xi() * HCoeff.t(2) == HCoeff.g()
    assert HCoeff.g() == HCoeff.from_int(2) - HCoeff.kappa()


def test_u_kills_xi():
    assert (HCoeff.u(1) * HCoeff.xi()).is_zero()


def test_e2_un_ladder():
    assert HCoeff.e(2) * HCoeff.u(1) == HCoeff.kappa()
    assert HCoeff.e(2) * HCoeff.u(3) == HCoeff.u(2)
    assert HCoeff.e(4) * HCoeff.u(1) == 2 * HCoeff.e(2)


def test_u_products():
    assert HCoeff.u(1) * HCoeff.u(2) == 2 * HCoeff.u(3)


def test_t_products():
    assert HCoeff.t(2) * HCoeff.t(2) == 2 * HCoeff.t(4)
    # odd tau classes are 2-torsion and multiply to zero
    assert (2 * HCoeff.t(3)).is_zero()
    assert (HCoeff.t(3) * HCoeff.t(3)).is_zero()
    assert (HCoeff.t(2) * HCoeff.t(3)).is_zero()


def test_xi_t_ladder():
    assert HCoeff.xi() * HCoeff.t(4) == HCoeff.t(2)
    assert HCoeff.xi() * HCoeff.t(5) == HCoeff.t(3)
    assert (HCoeff.xi() * HCoeff.t(3)).is_zero()


def test_e_and_kappa_kill_t():
    assert (HCoeff.e() * HCoeff.t(2)).is_zero()
    assert (HCoeff.kappa() * HCoeff.t(4)).is_zero()


def test_mixed_torsion():
    mixed = HCoeff.e(1) * HCoeff.xi(1)
    assert not mixed.is_zero()
    assert (2 * mixed).is_zero()


def test_kappa_e_powers():
    assert HCoeff.kappa() * HCoeff.e(3) == 2 * HCoeff.e(3)
    assert (HCoeff.kappa() * HCoeff.xi()).is_zero()
    assert (HCoeff.g() * HCoeff.e()).is_zero()
    assert (HCoeff.g() * HCoeff.u(2)).is_zero()


def test_homogeneity_enforced():
    with pytest.raises(ValueError):
        HCoeff.e() + HCoeff.xi()


def test_outside_fragment():
    with pytest.raises(OutsideFragmentError):
        HCoeff.e() * HCoeff.u(1)


def test_rho_values():
    assert HCoeff.xi().rho() == Laurent1.term("iota", 2)
    assert HCoeff.t(2).rho() == Laurent1.term("iota", -2, 2)
    assert HCoeff.t(3).rho().is_zero()
    assert HCoeff.one().rho() == Laurent1.one("iota")
    assert HCoeff.g().rho() == Laurent1.term("iota", 0, 2)
    assert HCoeff.kappa().rho().is_zero()


def test_phi_values():
    assert HCoeff.u(1).phi() == Laurent1.term("e", -2, 2)
    assert HCoeff.xi().phi().is_zero()
    assert HCoeff.e().phi() == Laurent1.term("e", 1)
    assert HCoeff.kappa().phi() == Laurent1.term("e", 0, 2)
    assert HCoeff.g().phi().is_zero()


def test_rules_validate_under_rho_and_phi():
    assert validate_rules(nmax=5) == []


def test_rule_system_confluent():
    assert check_h_confluence(nmax=4) == []


def test_commutative_and_associative_sampled():
    rng = random.Random(7)
    atoms = [HCoeff.one(), HCoeff.kappa(), HCoeff.e(), HCoeff.xi(),
             HCoeff.u(1), HCoeff.u(2), HCoeff.t(2), HCoeff.t(3),
             HCoeff.e(2), HCoeff.xi(2)]
    for _ in range(60):
        x, y, z = (rng.choice(atoms) for _ in range(3))
        try:
            assert x * y == y * x
            assert (x * y) * z == x * (y * z)
        except OutsideFragmentError:
            pass  # a product escaping the fragment is allowed to error


def test_rule_count_sanity():
    names = [r[0] for r in h_rules(3)]
    assert "R-H1" in names and "R-H12" in names


def test_grading_bookkeeping():
    x = HCoeff.e(2) * HCoeff.xi()
    assert x.grading == (-2, 4)
    assert HCoeff.u(2).grading == (0, -4)
    assert HCoeff.zero().grading is None
