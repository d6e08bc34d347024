"""Tests for finite field arithmetic and polynomials over F_q."""

import pytest
from pydantic import ValidationError
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_irreducible_p

from modplab.exceptions import ParameterError
from modplab.matrix_groups import poly
from modplab.matrix_groups.field import (
    FieldSpec,
    default_modulus,
    field_of_order,
    get_field,
)

ORDERS = [2, 3, 4, 5, 7, 8, 9, 13, 16, 25, 27]


@pytest.mark.parametrize("q", ORDERS)
def test_field_axioms(q):
    F = field_of_order(q)
    assert F.q == q
    for a in range(1, q):
        assert F.mul(a, F.inv(a)) == 1
        assert F.add(a, F.neg(a)) == 0
        assert F.pow(a, q - 1) == 1
    sample = list(range(min(q, 9)))
    for a in sample:
        for b in sample:
            assert F.add(a, b) == F.add(b, a)
            assert F.mul(a, b) == F.mul(b, a)
            for c in sample:
                assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))


@pytest.mark.parametrize("q", ORDERS)
def test_primitive_element_generates(q):
    F = field_of_order(q)
    powers = {F.generator_power(k) for k in range(q - 1)}
    assert powers == set(range(1, q))


def test_f4_arithmetic():
    F = get_field(2, 2)
    x = F.from_coeffs([0, 1])
    assert x == 2
    assert F.mul(x, x) == 3
    assert F.add(2, 3) == 1
    assert F.inv(2) == 3


def test_f9_arithmetic():
    F = get_field(3, 2)
    x = F.from_coeffs([0, 1])
    assert F.mul(x, x) == F.neg(1)
    assert F.to_coeffs(7) == [1, 2]


def test_prime_field_primitive_root():
    assert get_field(7).primitive_element == 3
    assert get_field(2).primitive_element == 1


def test_default_modulus():
    assert default_modulus(2, 2) == (1, 1, 1)
    assert default_modulus(5, 1) == (0, 1)
    modulus = default_modulus(3, 4)
    assert len(modulus) == 5 and modulus[-1] == 1
    assert gf_irreducible_p(list(reversed(modulus)), 3, ZZ)


def test_field_spec_rejects_bad_input():
    with pytest.raises(ValidationError, match="reducible"):
        FieldSpec(characteristic=2, degree=2, modulus=(1, 0, 1))
    with pytest.raises(ValidationError, match="not prime"):
        FieldSpec(characteristic=6, degree=1, modulus=(0, 1))
    with pytest.raises(ValidationError):
        FieldSpec(characteristic=2, degree=21)


def test_field_of_order_rejects_non_prime_powers():
    with pytest.raises(ParameterError):
        field_of_order(6)


def test_element_json():
    F = get_field(3, 2)
    assert F.element_from_json([1, 2]) == 7
    assert F.element_from_json(2) == 2
    with pytest.raises(ParameterError, match="ambiguous"):
        F.element_from_json(5)
    with pytest.raises(ParameterError, match="ambiguous"):
        F.element_from_json(-1)
    assert get_field(3).element_from_json(10) == 1
    assert F.element_to_json(7) == [1, 2]
    with pytest.raises(ParameterError):
        F.element_from_json(True)
    with pytest.raises(ParameterError):
        F.element_from_json([1, 2, 0])
    assert get_field(7).element_to_json(5) == 5


def test_root_of_unity():
    F = get_field(7)
    w = F.root_of_unity(3)
    assert w != 1 and F.pow(w, 3) == 1
    with pytest.raises(ParameterError):
        F.root_of_unity(4)


def test_poly_division_and_gcd():
    F = get_field(7)
    f = poly.from_roots(F, [1, 2, 2])
    g = poly.from_roots(F, [2, 3])
    quotient, remainder = poly.divmod_poly(F, f, g)
    assert poly.add(F, poly.mul(F, quotient, g), remainder) == f
    assert poly.gcd(F, f, g) == poly.from_roots(F, [2])
    assert poly.lcm(F, f, g) == poly.from_roots(F, [1, 2, 2, 3])


def test_poly_helpers():
    F = get_field(5)
    f = poly.from_roots(F, [1, 1, 1])
    assert f == (4, 3, 2, 1)
    assert poly.evaluate(F, f, 1) == 0
    assert poly.degree(()) == -1
    assert poly.constant_term_sign(F, f) == 1
    assert poly.format_poly(F, (1, 0, 2, 1)) == "X^3 + 2*X^2 + 1"
    assert poly.monic(F, (2, 4)) == (3, 1)
