from itertools import product

import numpy as np
import pytest
from hypothesis import given, strategies as st

from isospec.groups.fields import build_field, field_of_order, is_irreducible

FIELDS = [(2, 1), (3, 1), (11, 1), (2, 2), (2, 3), (3, 2), (5, 2), (2, 4), (3, 3), (2, 6), (7, 2)]


def has_root(coeffs, p):
    return any(sum(c * x**i for i, c in enumerate(coeffs)) % p == 0 for x in range(p))


def test_build_field_examples():
    f = build_field(11, 1)
    assert f.order == 11 and f.modulus == (0, 1)
    assert build_field(2, 3).modulus == (1, 1, 0, 1)  # x^3 + x + 1
    g = build_field(5, 2)
    assert g.order == 25 and g.modulus == (2, 0, 1)  # x^2 + 2
    assert not has_root(g.modulus, 5)


def test_modulus_is_smallest_irreducible():
    for p, k in [(2, 3), (5, 2), (3, 3), (2, 4)]:
        f = build_field(p, k)
        code = sum(c * p**i for i, c in enumerate(f.modulus[:-1]))
        for smaller in range(code):
            coeffs = [(smaller // p**i) % p for i in range(k)] + [1]
            assert coeffs[0] == 0 or not is_irreducible(coeffs, p)


def test_cubic_irreducibility_by_roots():
    # degree <= 3: irreducible iff no root
    for p in (2, 3, 5):
        for low in product(range(p), repeat=3):
            coeffs = list(low) + [1]
            assert is_irreducible(coeffs, p) == (not has_root(coeffs, p))


def test_build_field_rejects():
    with pytest.raises(ValueError):
        build_field(4, 1)
    with pytest.raises(ValueError):
        build_field(2, 21)
    with pytest.raises(ValueError):
        field_of_order(12)


@pytest.mark.parametrize("p,k", FIELDS)
def test_field_axioms(p, k):
    f = build_field(p, k)
    q = f.order
    els = range(q)
    for a in els:
        assert f.add(a, f.neg(a)) == 0
        if a:
            assert f.mul(a, f.inv(a)) == 1
    units = [f.power(f.generator, i) for i in range(q - 1)]
    assert sorted(units) == list(range(1, q))


@pytest.mark.parametrize("p,k", FIELDS)
def test_tables_match_scalar_arithmetic(p, k):
    f = build_field(p, k)
    q = f.order
    a = np.arange(q)
    assert all(f.mul_table[x, y] == f.mul(x, y) for x in a for y in a)
    assert all(f.add_table[x, y] == f.add(x, y) for x in a for y in a)
    assert all(f.neg_table[x] == f.neg(x) for x in a)
    assert all(f.inv_table[x] == f.inv(x) for x in range(1, q))


@given(st.data())
def test_field_element_ring_laws(data):
    p, k = data.draw(st.sampled_from(FIELDS))
    f = build_field(p, k)
    x, y, z = (f.element(data.draw(st.integers(0, f.order - 1))) for _ in range(3))
    assert (x + y) * z == x * z + y * z
    assert x * y == y * x
    assert x - x == f.element(0)
    assert x ** (f.order) == x
    if x:
        assert x / x == f.element(1)
        assert x**-1 * x == f.element(1)


def test_field_element_coefficients():
    f = build_field(3, 2)
    e = f.element([1, 2])
    assert e.value == 7 and e.coefficients == [1, 2]
    with pytest.raises(ZeroDivisionError):
        f.element(1) / f.element(0)
