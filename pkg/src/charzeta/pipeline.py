"""End-to-end orchestration: presentation -> character variety -> fields ->
zeta comparison, with plain-dict reports that serialize to JSON."""

from fractions import Fraction

from .presentation import parse_presentation, abelianization
from .traces import char_ideal, reducibility_locus
from .groebner import solve_zero_dim, filter_irreducible
from .unipoly import UniPoly, format_poly
from .numberfield import (NumberField, element_min_poly, invariant_trace_field,
                          is_isomorphic)


def poly_json(f):
    """Exact ascending-coefficient serialization."""
    return [str(c) for c in f.coeffs]


def poly_from_json(coeffs):
    return UniPoly([Fraction(c) for c in coeffs])


def analyze_presentation(text):
    """Shared front half of every command: parse, abelianize, solve the
    character variety, and classify components."""
    pres = parse_presentation(text)
    ab = abelianization(pres)
    comps = solve_zero_dim(char_ideal(pres).generators)
    kappa = reducibility_locus()
    irr = filter_irreducible(comps, kappa)
    irr_keys = {id(c) for c in irr}
    return {
        "presentation": pres,
        "abelianization": ab,
        "components": comps,
        "irreducible": irr,
        "is_irreducible": [id(c) in irr_keys for c in comps],
    }


def component_families(comps):
    """Group components by the multiset of coordinate minimal polynomials
    (the shape in which point lists are usually displayed)."""
    fams = {}
    order = []
    for comp in comps:
        K = NumberField(comp.field_poly)
        mins = tuple(sorted(
            tuple(element_min_poly(K.element(g)).coeffs) for g in comp.coords))
        if mins not in fams:
            fams[mins] = []
            order.append(mins)
        fams[mins].append(comp)
    return [fams[k] for k in order]


def canonical_candidates(analysis):
    """Indices (into analysis["components"]) of irreducible components whose
    invariant trace field has exactly one complex place."""
    out = []
    h1 = analysis["abelianization"].h1_c2_order
    for i, comp in enumerate(analysis["components"]):
        if not analysis["is_irreducible"][i]:
            continue
        K = NumberField(comp.field_poly)
        if K.degree % h1 != 0:
            continue
        try:
            inv, _ = invariant_trace_field(K, comp, h1)
        except Exception:
            continue
        if inv.signature[1] == 1:
            out.append(i)
    return out


def component_report(analysis):
    comps = analysis["components"]
    fams = component_families(comps)
    comp_idx = {id(c): i for i, c in enumerate(comps)}
    return {
        "components": [
            {
                "field_poly": poly_json(c.field_poly),
                "field_poly_text": format_poly(c.field_poly),
                "degree": c.field_poly.degree,
                "coords": [poly_json(g) for g in c.coords],
                "coords_text": [format_poly(g) for g in c.coords],
                "irreducible": analysis["is_irreducible"][i],
            }
            for i, c in enumerate(comps)
        ],
        "families": [[comp_idx[id(c)] for c in fam] for fam in fams],
        "n_points": sum(c.field_poly.degree for c in comps),
        "canonical_candidates": canonical_candidates(analysis),
    }


def tracefield_report(analysis, expected=None, expected_invariant=None):
    """Trace field / invariant trace field of the canonical component, with
    isomorphism certificates against expected polynomials when supplied."""
    cands = canonical_candidates(analysis)
    comps = analysis["components"]
    if len(cands) != 1:
        return {"error": "expected a unique canonical candidate, found %d"
                         % len(cands),
                "canonical_candidates": cands}
    comp = comps[cands[0]]
    K = NumberField(comp.field_poly)
    h1 = analysis["abelianization"].h1_c2_order
    inv, prim = invariant_trace_field(K, comp, h1)
    out = {
        "component": cands[0],
        "trace_field": poly_json(K.h),
        "trace_field_text": format_poly(K.h),
        "trace_field_disc": str(K.disc_h),
        "invariant_trace_field": poly_json(inv.h),
        "invariant_trace_field_text": format_poly(inv.h),
        "h1_c2_order": h1,
        "degree_ratio": K.degree // inv.degree,
        "component_count_check": (K.degree // inv.degree) == h1,
        "invariant_equals_trace": inv.degree == K.degree,
    }
    if expected is not None:
        flag, img = is_isomorphic(NumberField(expected), K)
        out["table_poly"] = poly_json(expected)
        out["table_isomorphic"] = flag
        out["table_certificate"] = poly_json(img.rep) if img is not None else None
    if expected_invariant is not None:
        flag, img = is_isomorphic(NumberField(expected_invariant), inv)
        out["invariant_table_poly"] = poly_json(expected_invariant)
        out["invariant_table_isomorphic"] = flag
        out["invariant_table_certificate"] = (
            poly_json(img.rep) if img is not None else None)
    return out
