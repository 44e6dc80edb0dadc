"""Built-in example presentations and their published reference data.

Each preset records a two-generator, two-relator presentation of a closed
hyperbolic 3-manifold group (where available) together with the expected
trace field and invariant trace field polynomials used for certification.
m004m61 ships only as a trace-field table fixture: no presentation is
available for it, so presentation-driven commands reject it.
"""

from .unipoly import UniPoly


class Preset:
    def __init__(self, name, presentation, trace_field, invariant_field=None,
                 volume=None):
        self.name = name
        self.presentation = presentation          # text or None (fixture)
        self.trace_field = trace_field            # expected UniPoly
        # None means the invariant trace field equals the trace field
        self.invariant_field = invariant_field
        self.volume = volume                      # external constant, if any


WEEKS_VOLUME = 0.9427073628


PRESETS = {
    "weeks": Preset(
        "weeks",
        "gens: a b ; rels: ababaBa^2B, bababAb^2A",
        UniPoly([-1, -1, 0, 1]),                       # T^3 - T - 1
        volume=WEEKS_VOLUME,
    ),
    "meyerhoff": Preset(
        "meyerhoff",
        "gens: a b ; rels: aBAbABabb, aBAbaaaaaabAB",
        UniPoly([-1, 3, 1, -3, 1]),                    # T^4 - 3T^3 + T^2 + 3T - 1
    ),
    "m010m12": Preset(
        "m010m12",
        "gens: a b ; rels: aBa^3Babab, ab^2A^2b^2aB",
        UniPoly([4, 0, -2, 0, 1]),                     # T^4 - 2T^2 + 4
        invariant_field=UniPoly([1, -1, 1]),           # T^2 - T + 1
    ),
    "m003m43": Preset(
        "m003m43",
        "gens: a b ; rels: a^2bAb^3Ab, aba^2B^2a^2b",
        UniPoly([1, 2, -2, -1, 1]),                    # T^4 - T^3 - 2T^2 + 2T + 1
    ),
    "m003m34": Preset(
        "m003m34",
        "gens: a b ; rels: ab^3abA^2b, abABAbabABa^2b^2a^2BAb",
        UniPoly([-1, 0, -1, 0, 0, 0, 1]),              # T^6 - T^2 - 1
        invariant_field=UniPoly([1, 0, -1, 1]),        # T^3 - T^2 + 1
    ),
    "m004m61": Preset(
        "m004m61",
        None,
        UniPoly([-4, 0, 14, 0, -7, 0, 1]),             # T^6 - 7T^4 + 14T^2 - 4
    ),
}


def get_preset(name):
    if name not in PRESETS:
        raise KeyError("unknown preset %r (have: %s)" %
                       (name, ", ".join(sorted(PRESETS))))
    return PRESETS[name]
