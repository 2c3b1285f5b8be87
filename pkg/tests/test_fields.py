import pytest
from gmpy2 import mpq
from hypothesis import given, settings
from hypothesis import strategies as st

from hopfbraid.errors import FieldMismatch, ParseError
from hopfbraid.fields import GF, QQ, cyclotomic, cyclotomic_polynomial, field_from_descriptor

FIELDS = [QQ, GF(7), GF(101), cyclotomic(3), cyclotomic(5), cyclotomic(8)]

small = st.integers(-20, 20)
nonzero_den = st.integers(1, 9)


@st.composite
def elements(draw, field):
    if field is QQ:
        return mpq(draw(small), draw(nonzero_den))
    if field.kind == "prime-field":
        return field(draw(small))
    return field.from_coefficients(
        [mpq(draw(small), draw(nonzero_den)) for _ in range(field.degree)]
    )


@pytest.mark.parametrize("field", FIELDS, ids=str)
@settings(max_examples=40, deadline=None)
@given(data=st.data())
def test_field_axioms(field, data):
    a, b, c = (data.draw(elements(field)) for _ in range(3))
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a and a * b == b * a
    assert a + field.zero == a and a * field.one == a
    assert a - a == field.zero
    if a != field.zero:
        assert a * field.inverse(a) == field.one


@pytest.mark.parametrize("m", [1, 2, 3, 4, 5, 6, 8, 12])
def test_root_of_unity(m):
    K = cyclotomic(m)
    z = K.zeta(1)
    assert z ** m == K.one
    assert all(z ** k != K.one for k in range(1, m))
    phi = cyclotomic_polynomial(m)
    assert sum((c * z ** k for k, c in enumerate(phi)), K.zero) == K.zero


def test_cyclotomic_polynomials():
    assert list(cyclotomic_polynomial(3)) == [1, 1, 1]
    assert list(cyclotomic_polynomial(4)) == [1, 0, 1]
    assert list(cyclotomic_polynomial(6)) == [1, -1, 1]
    assert cyclotomic(12).degree == 4


@pytest.mark.parametrize("field", FIELDS, ids=str)
@settings(max_examples=25, deadline=None)
@given(data=st.data())
def test_text_round_trip(field, data):
    a = data.draw(elements(field))
    assert field.parse(field.format(a)) == a


def test_text_forms():
    assert QQ.format(mpq(-3, 6)) == "-1/2"
    assert QQ.parse("4/2") == 2
    assert GF(5).format(GF(5)(-1)) == "4"
    K = cyclotomic(3)
    assert K.format(K.zeta(2)) == "[-1,-1]"
    assert K.parse("[0,1]") == K.zeta(1)
    with pytest.raises(ParseError):
        QQ.parse("1/0")
    with pytest.raises(ParseError):
        QQ.parse("abc")


def test_descriptors():
    for field in FIELDS:
        assert field_from_descriptor(field.descriptor()) == field
    assert GF(7) == GF(7) and GF(7) != GF(11)
    assert cyclotomic(3) != cyclotomic(6)


def test_mixing_fields_is_rejected():
    with pytest.raises(FieldMismatch):
        GF(5)(1) + GF(7)(1)
    with pytest.raises(FieldMismatch):
        cyclotomic(3).one + cyclotomic(5).one


def test_prime_field_inverse_and_zero():
    F = GF(11)
    assert F(3) * F.inverse(F(3)) == F.one
    with pytest.raises(ZeroDivisionError):
        F.inverse(F.zero)
