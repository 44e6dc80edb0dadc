import pytest

from charzeta.groebner import NotZeroDimensionalError
from charzeta.holonomy import character_of, express_in_subfield, solve_holonomy
from charzeta.numberfield import NumberField
from charzeta.presentation import parse_presentation
from charzeta.traces import char_ideal, reducibility_locus, riley_ideal
from charzeta.unipoly import UniPoly


def test_quaternion_group_solution():
    # Q8 = <a, b | a^2 = b^2, b^-1 a b = a^-1> has the quaternion SL2 irrep
    # with character (0, 0, 0)
    pres = parse_presentation("gens: a b; rels: a^2B^2, Baba")
    sols = solve_holonomy(pres)
    irr = [s for s in sols if s.is_irreducible]
    assert len(irr) >= 1
    chars = [tuple(c.as_rational() if c.is_rational() else None
                   for c in s.character) for s in irr]
    assert (0, 0, 0) in chars
    quat = irr[chars.index((0, 0, 0))]
    assert quat.trace_field.degree == 1
    assert not quat.is_candidate          # rational trace field, no complex place


def test_knot_group_is_not_zero_dimensional():
    # a one-relator two-bridge presentation has a positive-dimensional
    # representation scheme (the character variety is a curve)
    trefoil = parse_presentation("gens: a b; rels: abaBAB")
    with pytest.raises(NotZeroDimensionalError):
        solve_holonomy(trefoil)


def test_solutions_satisfy_relator_equations(holonomies):
    pres = parse_presentation(
        "gens: a b; rels: ababaBa^2B, bababAb^2A")
    gens = riley_ideal(pres).generators
    for sol in holonomies["weeks"]:
        K = sol.base_field
        vals = [sol.x_expr, sol.y_expr, sol.r_expr]
        for g in gens:
            v = g.evaluate(vals)
            if not hasattr(v, "is_zero"):
                v = K.element(v)
            assert v.is_zero()
        # the x*y != 0 unit constraint really held
        assert not (sol.x_expr * sol.y_expr).is_zero()


def test_characters_lie_on_character_variety(holonomies):
    pres = parse_presentation(
        "gens: a b; rels: ababaBa^2B, bababAb^2A")
    ideal = char_ideal(pres)
    for sol in holonomies["weeks"]:
        K = sol.base_field
        for g in ideal.generators:
            v = g.evaluate(list(sol.character))
            if not hasattr(v, "is_zero"):
                v = K.element(v)
            assert v.is_zero()


def test_irreducibility_agrees_with_kappa(holonomies):
    kappa = reducibility_locus()
    saw_reducible = saw_irreducible = False
    for sol in holonomies["weeks"]:
        K = sol.base_field
        v = kappa.evaluate(list(sol.character))
        if not hasattr(v, "is_zero"):
            v = K.element(v)
        assert sol.is_irreducible == (not v.is_zero())
        saw_reducible |= not sol.is_irreducible
        saw_irreducible |= sol.is_irreducible
    assert saw_reducible and saw_irreducible


def test_character_of_requires_irreducible(holonomies):
    for sol in holonomies["weeks"]:
        if sol.is_irreducible:
            assert len(character_of(sol)) == 3
        else:
            with pytest.raises(ValueError):
                character_of(sol)


def test_express_in_subfield():
    K = NumberField(UniPoly([-1, -1, 0, 1]))
    a = K.gen()
    rep = express_in_subfield(a * a + 1, a, 3)
    assert rep == UniPoly([1, 0, 1])
    # a is not rational, so it has no expression in the degree-1 subfield
    assert express_in_subfield(a, K.one(), 1) is None
