"""Field tower tests: cyclotomic fields, prime fields and extensions."""

import random
from fractions import Fraction

import pytest

from cycbrauer.scalars import (CyclotomicField, FieldSpec, FiniteField,
                               NoRootError, cyclotomic_polynomial, euler_phi,
                               field_with_root, make_field,
                               prod_one_minus_roots)


def random_elements(field, rng, count):
    out = []
    for _ in range(count):
        if isinstance(field, CyclotomicField):
            out.append(field.element([Fraction(rng.randint(-9, 9),
                                               rng.randint(1, 7))
                                      for _ in range(field.degree)]))
        else:
            out.append(field.element([rng.randrange(field.p)
                                      for _ in range(field.k)]))
    return out


@pytest.mark.parametrize("field", [
    CyclotomicField(1), CyclotomicField(3), CyclotomicField(4),
    CyclotomicField(5), CyclotomicField(12),
    FiniteField(7, 1), FiniteField(5, 2), FiniteField(2, 3),
])
def test_field_axioms(field):
    rng = random.Random(11)
    xs = random_elements(field, rng, 12)
    for a, b, c in zip(xs[0::3], xs[1::3], xs[2::3]):
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + b == b + a
        assert a * b == b * a
        assert a + field.zero == a
        assert a * field.one == a
        assert a - a == field.zero
        if a:
            assert a * a.inverse() == field.one


def test_cyclotomic_polynomials():
    assert list(cyclotomic_polynomial(1)) == [-1, 1]
    assert list(cyclotomic_polynomial(2)) == [1, 1]
    assert list(cyclotomic_polynomial(3)) == [1, 1, 1]
    assert list(cyclotomic_polynomial(4)) == [1, 0, 1]
    assert list(cyclotomic_polynomial(6)) == [1, -1, 1]
    assert list(cyclotomic_polynomial(12)) == [1, 0, -1, 0, 1]
    for m in range(1, 30):
        assert len(cyclotomic_polynomial(m)) - 1 == euler_phi(m)


def test_root_of_unity_orders():
    for m in (3, 4, 5, 6, 12):
        F = CyclotomicField(m)
        z = F.root_of_unity(m)
        assert z ** m == F.one
        for k in range(1, m):
            assert z ** k != F.one


def test_parse_format_roundtrip():
    F = CyclotomicField(5)
    rng = random.Random(3)
    for x in random_elements(F, rng, 10):
        assert F.parse_element(F.format_element(x)) == x


def test_field_with_root():
    F = field_with_root(0, 6)
    assert F.characteristic == 0
    K = field_with_root(7, 3)  # 7 = 1 mod 3
    assert K.characteristic == 7
    z = K.root_of_unity(3)
    assert z ** 3 == K.one and z != K.one
    # GF(5) has no cube root of unity; an extension is required
    K2 = field_with_root(5, 3)
    assert K2.characteristic == 5
    assert K2.root_of_unity(3) ** 3 == K2.one
    with pytest.raises(NoRootError):
        CyclotomicField(4).root_of_unity(3)


def test_reduction_hom():
    F = CyclotomicField(3)
    p = 13  # 13 = 1 mod 3, larger than any test denominator
    hom = F.reduction_hom(p)
    rng = random.Random(5)
    xs = random_elements(F, rng, 6)
    for a, b in zip(xs[0::2], xs[1::2]):
        assert hom(a * b) == hom(a) * hom(b) % p
        assert hom(a + b) == (hom(a) + hom(b)) % p


def test_prod_one_minus_roots():
    # prod_{a=1}^{m-1}(1 - zeta^a) = m for every m >= 2 (derivative of x^m-1)
    for m in range(2, 9):
        F = CyclotomicField(m)
        assert prod_one_minus_roots(m) == F.embed(m)


def test_field_spec_validation():
    make_field(FieldSpec("rational-cyclotomic", m=4))
    make_field(FieldSpec("prime-field", p=11))
    make_field(FieldSpec("prime-extension", p=3, k=2))
    with pytest.raises(ValueError):
        FieldSpec("prime-field", p=12).validate()
    with pytest.raises(ValueError):
        FieldSpec("nonsense").validate()
