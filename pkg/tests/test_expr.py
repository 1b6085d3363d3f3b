import pytest

from equicohom.expr import ParseError, format_element, parse_element
from equicohom.hcoeff import HCoeff
from equicohom.rings import BU2_GENS, BU2Element, bt1_ring, flat_ring

R = flat_ring("h")


def test_parse_simple():
    x = parse_element("z00*cT", "bt2")
    assert x == R.gen("z00") * R.gen("cT")


def test_parse_coefficients_and_powers():
    x = parse_element("(1-kappa)*z01^2 + e^2*u[1]*cw1", "bt2")
    want = (R.monomial(z01=2) * (HCoeff.one() - HCoeff.kappa())
            + R.gen("cw1") * (HCoeff.e(2) * HCoeff.u(1)))
    assert x == want


def test_parse_unary_minus():
    x = parse_element("-z00 + 2", "bt2")
    assert x == R.scalar(HCoeff.from_int(2)) - R.gen("z00")


def test_parse_bt1_and_bu2_and_h():
    assert parse_element("z0*z1", "bt1") == bt1_ring("h").scalar(HCoeff.xi())
    y = parse_element("Z0*cL", "bu2")
    assert y.poly == BU2Element.monomial(Z0=1, cL=1).poly
    assert parse_element("xi*t[2]", "h") == HCoeff.g()


def test_parse_error_position():
    with pytest.raises(ParseError) as exc:
        parse_element("z00*", "bt2")
    assert "position 4" in str(exc.value)
    with pytest.raises(ParseError) as exc:
        parse_element("z00 + quux", "bt2")
    assert "unknown symbol" in str(exc.value)
    with pytest.raises(ParseError):
        parse_element("", "bt2")
    with pytest.raises(ParseError):
        parse_element("(z00", "bt2")


def test_roundtrip_flat_elements():
    samples = [
        R.gen("z00") * R.gen("cT"),
        R.monomial(z01=2, cw1=1) * (HCoeff.one() - HCoeff.kappa()),
        R.scalar(HCoeff.t(2)) * R.monomial(z00=2, z01=1, z10=1, cw1=1,
                                           cw2=1),
        R.one() - R.gen("cw1") * HCoeff.u(1),
        R.zero(),
    ]
    for x in samples:
        text = format_element(x.poly, R.gens)
        assert parse_element(text, "bt2") == x, text


def test_roundtrip_bu2():
    x = BU2Element.monomial(Z0=1, Z2=1) * HCoeff.u(1) - BU2Element.gen("cxL")
    text = format_element(x.poly, BU2_GENS)
    y = parse_element(text, "bu2")
    assert y.poly == x.poly


def test_format_zero():
    assert format_element({}, R.gens) == "0"
