import pytest

from harmonic_kernels import (
    ParseError,
    SparsePolynomial,
    VariableSystem,
    format_polynomial,
    parse_polynomial,
)

S = VariableSystem([("x", 3, "real"), ("z", 2, "complex")])


def roundtrip(text):
    return format_polynomial(parse_polynomial(text, S))


def test_roundtrip_examples():
    assert roundtrip("1/2*z[1]^2*zbar[2]") == "1/2*z[1]^2*zbar[2]"
    assert roundtrip("(0,1)*x[1]") == "(0,1)*x[1]"
    assert roundtrip("x[1]+x[1]") == "2*x[1]"
    assert roundtrip("0") == "0"
    assert roundtrip("x[1]-x[1]") == "0"


def test_format_is_canonical_and_idempotent():
    texts = ["x[2]+x[1]^2-3*x[3]*x[1]", "zbar[1]*z[1]+(0,-2)*z[2]^3",
             "2*x[1]*x[2]+x[2]^2+x[1]^2", "-x[1]+1/3"]
    for t in texts:
        once = roundtrip(t)
        assert roundtrip(once) == once


def test_canonical_order_graded_then_lex():
    assert roundtrip("x[2]^2+x[1]*x[2]+x[1]^2") == "x[1]^2+x[1]*x[2]+x[2]^2"
    assert roundtrip("x[1]+x[1]^2") == "x[1]^2+x[1]"
    # bar flag sorts after the unbarred partner
    assert roundtrip("zbar[1]*z[1]") == "z[1]*zbar[1]"


def test_unit_and_negative_coefficients():
    assert roundtrip("1*x[1]") == "x[1]"
    assert roundtrip("-1*x[1]") == "-x[1]"
    assert roundtrip("x[2]-2/3*x[1]") == "-2/3*x[1]+x[2]"
    assert roundtrip("(-1,0)*x[1]") == "-x[1]"


def test_rational_and_complex_coefficients():
    assert roundtrip("3/6*x[1]") == "1/2*x[1]"
    assert roundtrip("(1/2,-3/4)*z[1]") == "(1/2,-3/4)*z[1]"
    p = parse_polynomial("(0,1)*x[1]+(0,-1)*x[1]", S)
    assert p.is_zero


def test_exponent_zero_and_spacing():
    assert roundtrip("x[1]^0") == "1"
    assert roundtrip("  2 * x[1] ^ 2  +  x[2] ") == "2*x[1]^2+x[2]"


def test_parse_errors_carry_position():
    for text, pos in (("", 0), ("x[1]^", 5), ("x[]", 2), ("q[1]", 0),
                      ("x[1]*", 5), ("(1,2*x[1]", 4), ("1/0*x[1]", 2),
                      ("x[1]+@", 5), ("zbar[9]", 0)):
        with pytest.raises(ParseError) as err:
            parse_polynomial(text, S)
        assert err.value.position == pos, (text, err.value.position)


def test_zero_polynomial_formats_as_zero():
    assert format_polynomial(SparsePolynomial.zero(S)) == "0"
