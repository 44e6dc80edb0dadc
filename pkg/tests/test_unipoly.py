from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from charzeta.unipoly import (UniPoly, count_real_roots, discriminant,
                              format_poly, poly_extended_gcd, poly_gcd,
                              resultant, signature, squarefree_part,
                              sturm_sequence)

small_polys = st.lists(st.integers(-9, 9), min_size=1, max_size=6).map(UniPoly)


def test_trailing_zeros_are_trimmed():
    assert UniPoly([1, 2, 0, 0]).coeffs == (1, 2)
    assert UniPoly([0, 0]).is_zero()
    assert UniPoly.zero().degree == -1


def test_divmod_roundtrip():
    f = UniPoly([1, 0, -3, 0, 1])
    g = UniPoly([2, 1, 1])
    q, r = divmod(f, g)
    assert q * g + r == f
    assert r.degree < g.degree


@given(small_polys, small_polys)
@settings(max_examples=60)
def test_product_divisible_by_factor(f, g):
    if g.is_zero():
        return
    q, r = divmod(f * g, g)
    assert r.is_zero()
    assert q == f


@given(small_polys, small_polys)
@settings(max_examples=60)
def test_gcd_divides_both(f, g):
    d = poly_gcd(f, g)
    if d.is_zero():
        assert f.is_zero() and g.is_zero()
        return
    assert divmod(f, d)[1].is_zero()
    assert divmod(g, d)[1].is_zero()


def test_extended_gcd_bezout():
    f = UniPoly([-1, -1, 0, 1])
    g = f.derivative()
    d, s, t = poly_extended_gcd(f, g)
    assert s * f + t * g == d
    assert d.degree == 0   # irreducible f is coprime to f'


def test_discriminants():
    assert discriminant(UniPoly([-1, -1, 0, 1])) == -23
    assert discriminant(UniPoly([-1, 3, 1, -3, 1])) == -283
    # disc(x^2 + bx + c) = b^2 - 4c
    assert discriminant(UniPoly([5, 3, 1])) == 9 - 20


def test_resultant_of_coprime_and_shared_root():
    f = UniPoly.from_roots([1, 2])
    g = UniPoly.from_roots([3])
    assert resultant(f, g) == (1 - 3) * (2 - 3)
    assert resultant(f, UniPoly.from_roots([2, 5])) == 0


def test_squarefree_part():
    f = UniPoly.from_roots([1, 1, 2])
    assert squarefree_part(f) == UniPoly.from_roots([1, 2])


def test_sturm_real_root_count():
    f = UniPoly([-1, -1, 0, 1])            # one real root
    assert count_real_roots(f) == 1
    assert count_real_roots(UniPoly.from_roots([-2, 0, 3])) == 3
    assert count_real_roots(UniPoly([1, 0, 1])) == 0


def test_signatures():
    assert signature(UniPoly([-1, -1, 0, 1])) == (1, 1)
    assert signature(UniPoly([4, 0, -2, 0, 1])) == (0, 2)   # totally imaginary
    assert signature(UniPoly([-2, 0, 1])) == (2, 0)
    with pytest.raises(ValueError):
        signature(UniPoly.from_roots([1, 1]))


def test_compose_and_evaluate():
    f = UniPoly([1, 2, 3])
    g = UniPoly([0, 0, 1])
    assert f.compose(g).evaluate(Fraction(2)) == f.evaluate(Fraction(4))


def test_format_poly_readable():
    assert format_poly(UniPoly([-1, -1, 0, 1])) == "T^3 - T - 1"
    assert format_poly(UniPoly([Fraction(1, 2), 1])) == "T + 1/2"
