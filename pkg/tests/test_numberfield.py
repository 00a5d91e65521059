import sympy
from gmpy2 import mpq

from cometric.numberfield import FieldElement, NumberField, scalar_sort_key


def field_sqrt5():
    return NumberField([sympy.sqrt(5)])


def test_arithmetic_in_q_sqrt5():
    k = field_sqrt5()
    r5 = k.from_sympy(sympy.sqrt(5))
    assert r5 * r5 == 5
    phi = (1 + r5) / 2
    assert phi * phi == phi + 1  # golden ratio equation
    assert (r5 + 1) - 1 == r5
    assert 2 * r5 == r5 + r5
    assert r5 / r5 == 1


def test_reflected_operations_with_rationals():
    k = field_sqrt5()
    r5 = k.from_sympy(sympy.sqrt(5))
    assert 1 - (1 - r5) == r5
    assert mpq(1, 2) * r5 * 2 == r5
    assert 5 / r5 == r5
    assert -(-r5) == r5


def test_power():
    k = field_sqrt5()
    r5 = k.from_sympy(sympy.sqrt(5))
    assert r5**4 == 25
    assert r5**0 == 1
    assert r5**3 == 5 * r5


def test_as_rational():
    k = field_sqrt5()
    r5 = k.from_sympy(sympy.sqrt(5))
    assert r5.as_rational() is None
    assert (r5 * r5).as_rational() == mpq(5)
    assert k.from_rational(mpq(3, 7)).as_rational() == mpq(3, 7)
    assert (r5 - r5).as_rational() == 0


def test_bool_and_eq():
    k = field_sqrt5()
    r5 = k.from_sympy(sympy.sqrt(5))
    assert bool(r5)
    assert not bool(r5 - r5)
    assert r5 != 2
    assert k.from_rational(2) == 2


def test_sort_key_orders_numerically():
    k = field_sqrt5()
    r5 = k.from_sympy(sympy.sqrt(5))
    vals = [r5, mpq(1), -1 * r5, mpq(4)]
    ordered = sorted(vals, key=scalar_sort_key)
    assert ordered[0] == -1 * r5
    assert ordered[1] == 1
    assert ordered[2] == r5
    assert ordered[3] == 4


def test_two_generators():
    k = NumberField([sympy.sqrt(2), sympy.sqrt(3)])
    r2 = k.from_sympy(sympy.sqrt(2))
    r3 = k.from_sympy(sympy.sqrt(3))
    assert (r2 * r3) * (r2 * r3) == 6
    assert (r2 + r3) ** 2 == 5 + 2 * (r2 * r3)


def test_isinstance_guard():
    k = field_sqrt5()
    r5 = k.from_sympy(sympy.sqrt(5))
    assert isinstance(r5, FieldElement)
