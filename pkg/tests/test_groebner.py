from fractions import Fraction

import pytest

from charzeta.groebner import (MonomialOrder, NotZeroDimensionalError,
                               QuotientAlgebra, buchberger, filter_irreducible,
                               is_zero_dimensional, quotient_basis, radicalize,
                               solve_zero_dim)
from charzeta.multipoly import MultiPoly
from charzeta.unipoly import UniPoly


def V(n, i):
    return MultiPoly.var(n, i)


def C(n, c):
    return MultiPoly.const(n, c)


def test_buchberger_katsura2():
    # x + 2y - 1, x^2 + 2y^2 - x: a classic tiny system
    x, y = V(2, 0), V(2, 1)
    gens = [x + 2 * y - C(2, 1), x * x + 2 * y * y - x]
    gb = buchberger(gens, MonomialOrder("grevlex", 2))
    for g in gens:
        assert gb.contains(g)
    assert is_zero_dimensional(gb)
    assert len(quotient_basis(gb)) == 2


def test_normal_form_is_exact():
    # I = (x^2 - 2, y - x): NF(x^3) must be exactly 2y, not a scalar multiple
    x, y = V(2, 0), V(2, 1)
    gb = buchberger([x * x - C(2, 2), y - x], MonomialOrder("grevlex", 2))
    nf = gb.normal_form(x ** 3)
    assert nf == 2 * y or nf == 2 * x
    assert gb.contains(x ** 3 - nf)


def test_membership_and_trivial_ideal():
    x, y = V(2, 0), V(2, 1)
    gb = buchberger([x * y - C(2, 1), x - y], MonomialOrder("grevlex", 2))
    assert gb.contains(x * x - C(2, 1))
    assert not gb.contains(x - C(2, 1))
    triv = buchberger([x, x - C(2, 1)], MonomialOrder("grevlex", 2))
    assert triv.is_trivial()
    assert solve_zero_dim([x, x - C(2, 1)]) == []


def test_not_zero_dimensional_raises():
    x, y = V(2, 0), V(2, 1)
    gb = buchberger([x * y], MonomialOrder("grevlex", 2))
    assert not is_zero_dimensional(gb)
    with pytest.raises(NotZeroDimensionalError):
        quotient_basis(gb)
    with pytest.raises(NotZeroDimensionalError):
        solve_zero_dim([x * y])


def test_quotient_min_poly():
    x, y = V(2, 0), V(2, 1)
    gb = radicalize([x * x - C(2, 2), y * y - C(2, 3)],
                    MonomialOrder("grevlex", 2))
    alg = QuotientAlgebra(gb)
    assert alg.dim == 4
    assert alg.min_poly(x) == UniPoly([-2, 0, 1])
    assert alg.min_poly(x + y) == UniPoly([1, 0, -10, 0, 1])


def test_radicalize_strips_multiplicity():
    x = V(1, 0)
    gb = radicalize([(x - C(1, 1)) ** 3 * (x + C(1, 2)) ** 2],
                    MonomialOrder("grevlex", 1))
    assert QuotientAlgebra(gb).dim == 2


def test_solve_zero_dim_splits_components():
    x, y = V(2, 0), V(2, 1)
    comps = solve_zero_dim([x * x - C(2, 2), y - x])
    assert len(comps) == 1
    (comp,) = comps
    assert comp.field_poly == UniPoly([-2, 0, 1])
    assert comp.coords[0] == comp.coords[1]

    # (x^2 - 1)(x^2 - 2) = 0, y = x^2: rational and quadratic parts split
    comps = solve_zero_dim([(x * x - C(2, 1)) * (x * x - C(2, 2)), y - x * x])
    degs = sorted(c.degree for c in comps)
    assert degs == [1, 1, 2]
    for comp in comps:
        # back-substitution: y coordinate is x coordinate squared mod field poly
        h = comp.field_poly
        assert (comp.coords[0] * comp.coords[0] - comp.coords[1]) % h == UniPoly.zero()


def test_solve_zero_dim_needs_nonstandard_separator():
    # x and y both fail to separate the four points (±1, ±1)
    x, y = V(2, 0), V(2, 1)
    comps = solve_zero_dim([x * x - C(2, 1), y * y - C(2, 1)])
    assert sorted(c.degree for c in comps) == [1, 1, 1, 1]
    points = sorted((c.coords[0].coeffs, c.coords[1].coeffs) for c in comps)
    assert points == [((Fraction(-1),), (Fraction(-1),)),
                      ((Fraction(-1),), (Fraction(1),)),
                      ((Fraction(1),), (Fraction(-1),)),
                      ((Fraction(1),), (Fraction(1),))]


def test_filter_irreducible():
    # kappa = x - 4 kills the component at x = 4, keeps x = 0
    x = V(1, 0)
    comps = solve_zero_dim([x * (x - C(1, 4))])
    kappa = x - C(1, 4)
    kept = filter_irreducible(comps, kappa)
    assert len(comps) == 2 and len(kept) == 1
    assert kept[0].coords[0] == UniPoly.zero()
