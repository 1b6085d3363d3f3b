import itertools

import pytest

from equicohom.grading import (GradingBT1, GradingBT2, GradingBU2,
                               embed_bt1_pi1, embed_bt1_pi2, embed_bu2,
                               format_grading, parse_grading,
                               parse_grading_bt1)


def test_canonical_form_eliminates_w11():
    g = GradingBT2(m11=1)
    assert g.key() == (-2, 2, -1, -1, -1)
    # sum of all four Omegas is 2s - 2
    total = GradingBT2(m00=1) + GradingBT2(m01=1) + GradingBT2(m10=1) \
        + GradingBT2(m11=1)
    assert total == GradingBT2(a=-2, b=2)


def test_grad_sum_of_tensor_factors():
    # grad(c_w1) + grad(c_xw1) = (2 + W10 + W11) + (2 + W00 + W01) = 2 + 2s
    cw1 = GradingBT2(2, 0, m10=1, m11=1)
    cxw1 = GradingBT2(2, 0, m00=1, m01=1)
    assert cw1 + cxw1 == GradingBT2(2, 2)


def test_add_identity_and_commutativity():
    g = GradingBT2(1, 2, 3, 4, 5)
    assert g + GradingBT2() == g
    h = GradingBT2(0, 1, -1, 2, 0, m11=3)
    assert g + h == h + g


def test_rho_deg():
    assert GradingBT2(2, 0, m01=1, m10=1).rho_deg() == 2
    assert GradingBT2().rho_deg() == 0
    assert GradingBT2(-2, 2).rho_deg() == 0  # the relation maps to 0


def test_phi_deg():
    g = GradingBT2(2, 4, m01=1, m10=1)
    assert g.phi_deg() == (2, 0, 0, 2)
    assert GradingBT2().phi_deg() == (0, 0, 0, 0)
    # both representatives of 2s - 2 agree
    raw = GradingBT2(m00=1) + GradingBT2(m01=1) + GradingBT2(m10=1) \
        + GradingBT2(m11=1)
    assert raw.phi_deg() == (-2, -2, -2, -2)
    assert GradingBT2(-2, 2).phi_deg() == (-2, -2, -2, -2)


def test_is_sro():
    assert not GradingBT2(2, 0, m01=1, m10=1).is_sro()
    assert GradingBT2(5, -3).is_sro()
    # (m00 + m11) - (m01 + m10) is representative independent; it is 2 on
    # W00 + W11 (not SRO) and 0 on W00 - W11 (SRO)
    assert not (GradingBT2(m00=1) + GradingBT2(m11=1)).is_sro()
    assert (GradingBT2(m00=1) - GradingBT2(m11=1)).is_sro()
    # the defining relation satisfies the characterization
    assert GradingBT2(m00=1, m01=1, m10=1, m11=1).is_sro()


def test_is_even():
    assert GradingBT2(2, 0, m01=1, m10=1).is_even()
    assert not GradingBT2(3, 1, m01=1, m10=1).is_even()
    assert not GradingBT2(0, 1).is_even()


def test_embeddings():
    w0 = GradingBT1(m0=1)
    assert embed_bt1_pi1(w0) == GradingBT2(m00=1, m01=1)
    assert embed_bt1_pi2(w0) == GradingBT2(m00=1, m10=1)
    assert embed_bt1_pi1(GradingBT1()) == GradingBT2()
    # s*(lambda) = s*(2 + W1) = 2 + W01 + W10
    lam = GradingBU2(a=2, n1=1)
    assert embed_bu2(lam) == GradingBT2(2, 0, m01=1, m10=1)


def test_additivity_of_rho_and_phi():
    samples = [GradingBT2(a, b, m00, m01, m10)
               for a in (-2, 1) for b in (0, 3)
               for m00 in (-1, 2) for m01 in (0, 1) for m10 in (-2, 0)]
    for g1 in samples[:6]:
        for g2 in samples[6:12]:
            assert (g1 + g2).rho_deg() == g1.rho_deg() + g2.rho_deg()
            assert (g1 + g2).phi_deg() == tuple(
                x + y for x, y in zip(g1.phi_deg(), g2.phi_deg()))


def test_sro_subgroup():
    sro = [g for g in (GradingBT2(a, b, m00, m01, m10)
                       for a in (-1, 0, 2) for b in (0, 1)
                       for m00 in (-1, 0, 1) for m01 in (-1, 0, 1)
                       for m10 in (-1, 0, 1)) if g.is_sro()]
    for g1 in sro[:10]:
        assert (-g1).is_sro()
        for g2 in sro[10:20]:
            assert (g1 + g2).is_sro()


def test_even_negation_symmetric():
    for key in itertools.product((-3, -1, 0, 2), repeat=2):
        g = GradingBT2(key[0], key[1], m01=1)
        assert g.is_even() == (-g).is_even()


def test_embed_injective_on_box():
    seen = {}
    rng = range(-5, 6)
    for a in rng:
        for b in rng:
            for m0 in rng:
                g = embed_bt1_pi1(GradingBT1(a, b, m0))
                assert g.key() not in seen
                seen[g.key()] = True
    seen = {}
    for a in (-5, 0, 5):
        for b in rng:
            for n0 in rng:
                for n1 in rng:
                    g = embed_bu2(GradingBU2(a, b, n0, n1))
                    key = g.key()
                    assert key not in seen
                    seen[key] = True


def test_bu2_requires_symmetry():
    with pytest.raises(ValueError):
        GradingBU2.from_bt2(GradingBT2(m01=1))


def test_parse_and_format_roundtrip():
    for text, key in [
        ("0", (0, 0, 0, 0, 0)),
        ("2+2*s", (2, 2, 0, 0, 0)),
        ("W01+W10", (0, 0, 0, 1, 1)),
        ("-3+s-2*W00", (-3, 1, -2, 0, 0)),
        ("W11", (-2, 2, -1, -1, -1)),
    ]:
        g = parse_grading(text)
        assert g.key() == key
        assert parse_grading(format_grading(g)) == g


def test_parse_bt1():
    g = parse_grading_bt1("2+W1")
    assert g == GradingBT1(2, 0, m1=1)
    with pytest.raises(ValueError):
        parse_grading_bt1("W7")


def test_parse_errors():
    with pytest.raises(ValueError):
        parse_grading("")
    with pytest.raises(ValueError):
        parse_grading("2+Q")
