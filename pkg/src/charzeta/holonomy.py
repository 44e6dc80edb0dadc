"""Explicit Riley-form solutions of the representation equations.

The Riley normalization puts rho(a) upper-triangular and rho(b)
lower-triangular with three unknowns (x, y, r); the relator equations cut out
a zero-dimensional scheme once the locus x*y = 0 is excluded.  Solutions are
packaged with their character triples and the number field they live in.
"""

from fractions import Fraction

from .multipoly import MultiPoly
from .unipoly import UniPoly, format_poly
from .groebner import solve_zero_dim, solve_linear, NotZeroDimensionalError
from .traces import riley_ideal, word_matrix, reducibility_locus
from .presentation import Word
from .numberfield import (NumberField, FieldElem, element_min_poly,
                          subfield_generated)


class HolonomySolution:
    """One Galois orbit of Riley-form solutions (x, y, r)."""

    def __init__(self, base_field, x_expr, y_expr, r_expr, character,
                 is_irreducible, trace_field=None, char_in_trace_field=None,
                 is_candidate=False):
        self.base_field = base_field
        self.x_expr = x_expr
        self.y_expr = y_expr
        self.r_expr = r_expr
        self.character = character            # (tr a, tr b, tr ab) in base
        self.is_irreducible = is_irreducible
        self.trace_field = trace_field        # subfield generated by traces
        self.char_in_trace_field = char_in_trace_field  # UniPolys in its gen
        self.is_candidate = is_candidate

    def __repr__(self):
        return ("HolonomySolution(field=%s, irreducible=%r)" %
                (format_poly(self.base_field.h), self.is_irreducible))


def express_in_subfield(elem, prim, degree):
    """Write elem as a polynomial of degree < degree in prim (both in the
    same field); None if elem is outside Q(prim)."""
    n = elem.field.degree

    def vec(e):
        c = list(e.rep.coeffs) + [Fraction(0)] * n
        return [c[i] for i in range(n)]

    cols = []
    cur = elem.field.one()
    for _ in range(degree):
        cols.append(vec(cur))
        cur = cur * prim
    sol = solve_linear(cols, vec(elem))
    if sol is None:
        return None
    return UniPoly(sol)


def _character(field, xv, yv, rv):
    vals = (xv, yv, rv)
    out = []
    for letters in ((1,), (2,), (1, 2)):
        M = word_matrix(Word(letters))
        tr = M[0][0].evaluate(vals) + M[1][1].evaluate(vals)
        out.append(field.element(tr) if not isinstance(tr, FieldElem) else tr)
    return tuple(out)


def solve_holonomy(pres, max_length=6):
    """All Riley-form solution components with x*y invertible.

    The non-unit locus is removed by adjoining u with u*x*y = 1; conjugate
    branches describing the same representations are merged by their
    character-orbit fingerprint.
    """
    ri = riley_ideal(pres)
    gens4 = [g.extend_vars(4) if hasattr(g, "extend_vars") else _lift4(g)
             for g in ri.generators]
    x4 = MultiPoly.var(4, 0)
    y4 = MultiPoly.var(4, 1)
    u4 = MultiPoly.var(4, 3)
    gens4.append(u4 * x4 * y4 - 1)
    comps = solve_zero_dim(gens4)
    if not comps:
        return []
    kappa = reducibility_locus()
    seen = {}
    order = []
    for comp in comps:
        K = NumberField(comp.field_poly)
        xv, yv, rv = (K.element(comp.coords[i]) for i in range(3))
        char = _character(K, xv, yv, rv)
        tr_comm = kappa.evaluate(char) + 2      # tr rho([a,b])
        if not isinstance(tr_comm, FieldElem):
            tr_comm = K.element(tr_comm)
        irr = tr_comm != K.element(2)
        # Galois-orbit fingerprint of the character triple
        fp_elem = char[0] + 3 * char[1] + 9 * char[2]
        key = (K.degree, tuple(element_min_poly(fp_elem).coeffs),
               tuple(tuple(element_min_poly(c).coeffs) for c in char))
        sol = HolonomySolution(K, xv, yv, rv, char, irr)
        if irr:
            tf, prim = subfield_generated(K, list(char))
            if tf is None:
                tf = NumberField(UniPoly.x())
            sol.trace_field = tf
            sol.char_in_trace_field = tuple(
                express_in_subfield(c, prim, tf.degree) for c in char)
            sol.is_candidate = tf.signature[1] == 1
        if key in seen:
            continue
        seen[key] = sol
        order.append(sol)
    order.sort(key=lambda s: (not s.is_irreducible, s.base_field.degree,
                              s.base_field.h.coeffs))
    return order


def _lift4(g):
    terms = {}
    for e, c in g.terms.items():
        terms[e + (0,)] = c
    return MultiPoly(4, terms)


def character_of(sol):
    """The character triple inside the trace subfield; errors on reducible
    solutions (their characters don't determine an irreducible orbit)."""
    if not sol.is_irreducible:
        raise ValueError("character_of is defined for irreducible solutions")
    return sol.char_in_trace_field
