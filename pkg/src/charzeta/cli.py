"""Command-line front end.

    charzeta <charvar|zeta|holonomy|tracefield>
             [--preset NAME | --input FILE] [--prime-bound P]
             [--format text|json] [--component IDX]
             [--special-value] [--volume V] [--seed S] [--figure PATH]

Exit codes: 0 success / theorem holds, 2 parse error, 3 dimension guard,
4 canonical-component ambiguity, 5 resource budget exceeded.
"""

import argparse
import json
import sys
from fractions import Fraction

from . import modp
from .presentation import ParseError
from .groebner import NotZeroDimensionalError
from .unipoly import format_poly
from .numberfield import NumberField, element_min_poly
from .pipeline import (analyze_presentation, component_report, poly_json,
                       tracefield_report)
from .presets import get_preset
from .zeta import BudgetError, compare_zeta, special_value_check

EXIT_OK = 0
EXIT_GENERIC = 1
EXIT_PARSE = 2
EXIT_DIMENSION = 3
EXIT_AMBIGUOUS = 4
EXIT_BUDGET = 5


def _load_presentation(args):
    """(presentation text, preset or None); exits on bad input."""
    if args.preset:
        try:
            preset = get_preset(args.preset)
        except KeyError as e:
            _fail(str(e), EXIT_PARSE)
        if preset.presentation is None:
            _fail("preset %r is a trace-field table fixture without a known "
                  "presentation; only `tracefield` can report on it"
                  % args.preset, EXIT_PARSE)
        return preset.presentation, preset
    if args.input:
        try:
            with open(args.input) as fh:
                return fh.read(), None
        except OSError as e:
            _fail("cannot read %s: %s" % (args.input, e), EXIT_PARSE)
    _fail("one of --preset or --input is required", EXIT_PARSE)


def _fail(message, code):
    print("error: %s" % message, file=sys.stderr)
    sys.exit(code)


def _analyze(text):
    try:
        return analyze_presentation(text)
    except ParseError as e:
        _fail("presentation: %s" % e, EXIT_PARSE)
    except NotZeroDimensionalError:
        _fail("closed-manifold pipeline requires dim 0", EXIT_DIMENSION)


def _emit(data, fmt, render_text):
    if fmt == "json":
        data = dict(data)
        data["schema"] = 1
        print(json.dumps(data, sort_keys=True, indent=2))
    else:
        render_text(data)


def cmd_charvar(args):
    text, _ = _load_presentation(args)
    analysis = _analyze(text)
    rep = component_report(analysis)
    rep["presentation"] = text.strip()

    def render(d):
        print("presentation: %s" % d["presentation"])
        print("%d points in %d components, %d families"
              % (d["n_points"], len(d["components"]), len(d["families"])))
        for fi, fam in enumerate(d["families"]):
            print("family %d:" % (fi + 1))
            for ci in fam:
                c = d["components"][ci]
                tag = "irreducible" if c["irreducible"] else "reducible"
                print("  [%d] field %s  (x,y,z) = (%s)  %s"
                      % (ci, c["field_poly_text"],
                         ", ".join(c["coords_text"]), tag))
        print("canonical candidates: %s" % d["canonical_candidates"])

    _emit(rep, args.format, render)
    return EXIT_OK


def cmd_tracefield(args):
    if args.preset:
        preset = get_preset(args.preset)
        if preset.presentation is None:
            data = {
                "preset": preset.name,
                "fixture_only": True,
                "trace_field": poly_json(preset.trace_field),
                "trace_field_text": format_poly(preset.trace_field),
                "note": "table fixture: expected trace field only, no "
                        "presentation to compute from",
            }
            _emit(data, args.format,
                  lambda d: print("%s (fixture): expected trace field %s"
                                  % (d["preset"], d["trace_field_text"])))
            return EXIT_OK
    text, preset = _load_presentation(args)
    analysis = _analyze(text)
    expected = preset.trace_field if preset else None
    expected_inv = preset.invariant_field if preset else None
    rep = tracefield_report(analysis, expected, expected_inv)
    if "error" in rep:
        _fail(rep["error"] + "; use --component", EXIT_AMBIGUOUS)

    def render(d):
        print("trace field: %s  (disc %s)"
              % (d["trace_field_text"], d["trace_field_disc"]))
        print("invariant trace field: %s" % d["invariant_trace_field_text"])
        print("#H^1(pi, C2) = %d ; [K : invK] = %d ; check %s"
              % (d["h1_c2_order"], d["degree_ratio"],
                 "pass" if d["component_count_check"] else "FAIL"))
        if "table_isomorphic" in d:
            print("isomorphic to table polynomial: %s"
                  % d["table_isomorphic"])
        if "invariant_table_isomorphic" in d:
            print("invariant field isomorphic to table polynomial: %s"
                  % d["invariant_table_isomorphic"])

    _emit(rep, args.format, render)
    return EXIT_OK


def _pick_component(analysis, args):
    from .pipeline import canonical_candidates
    cands = canonical_candidates(analysis)
    if args.component is not None:
        if not 0 <= args.component < len(analysis["components"]):
            _fail("--component index out of range", EXIT_PARSE)
        return args.component
    if len(cands) != 1:
        _fail("canonical component is ambiguous, candidates: %s "
              "(pass --component IDX)" % cands, EXIT_AMBIGUOUS)
    return cands[0]


def cmd_zeta(args):
    text, preset = _load_presentation(args)
    analysis = _analyze(text)
    idx = _pick_component(analysis, args)
    comp = analysis["components"][idx]
    K = NumberField(comp.field_poly)
    try:
        report = compare_zeta(comp, K, args.prime_bound)
    except BudgetError as e:
        _fail(str(e), EXIT_BUDGET)
    data = {
        "presentation": text.strip(),
        "component": idx,
        "trace_field": poly_json(K.h),
        "trace_field_text": format_poly(K.h),
        "prime_bound": report.prime_bound,
        "bad_set": sorted(report.bad_set),
        "verdicts": {str(p): v for p, v in sorted(report.verdicts.items())},
        "mismatches": report.mismatches(),
        "theorem_holds": report.theorem_holds,
    }
    if args.special_value:
        volume = args.volume
        if volume is None and preset is not None:
            volume = preset.volume
        if volume is None:
            _fail("--special-value needs --volume (no external volume known "
                  "for this input)", EXIT_PARSE)
        from .numberfield import invariant_trace_field
        h1 = analysis["abelianization"].h1_c2_order
        inv, _ = invariant_trace_field(K, comp, h1)
        sv = special_value_check(inv, volume)
        data["special_value"] = {
            "volume": volume,
            "invariant_field_text": format_poly(inv.h),
            "ratio": str(sv.ratio),
            "nearest_rational": "%d/%d" % (sv.nearest_rational.numerator,
                                           sv.nearest_rational.denominator),
            "residual": str(sv.residual),
            "warning": sv.warning,
        }
    if args.figure:
        _render_figure(data, args.figure)
        data["figure"] = args.figure

    def render(d):
        print("trace field: %s" % d["trace_field_text"])
        print("prime bound %d ; bad set %s" % (d["prime_bound"], d["bad_set"]))
        for p, v in sorted(((int(p), v) for p, v in d["verdicts"].items())):
            print("  p=%-3d %s" % (p, v))
        print("theorem_holds: %s" % d["theorem_holds"])
        if "special_value" in d:
            sv = d["special_value"]
            print("special value: ratio %s ~ %s (residual %s)"
                  % (sv["ratio"], sv["nearest_rational"], sv["residual"]))
            if sv["warning"]:
                print("warning: %s" % sv["warning"])

    _emit(data, args.format, render)
    return EXIT_OK if data["theorem_holds"] else EXIT_GENERIC


def _render_figure(data, path):
    """Per-prime verdict chart saved next to the report output."""
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
    primes = sorted(int(p) for p in data["verdicts"])
    colors = {"match": "tab:green", "mismatch": "tab:red",
              "skipped-bad": "tab:orange"}
    fig, ax = plt.subplots(figsize=(8, 2.5))
    for p in primes:
        v = data["verdicts"][str(p)]
        ax.bar(p, 1, width=1.2, color=colors.get(v, "gray"))
    ax.set_yticks([])
    ax.set_xlabel("prime")
    ax.set_title("local zeta factor comparison (green=match, "
                 "orange=skipped-bad, red=mismatch)")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def cmd_holonomy(args):
    text, _ = _load_presentation(args)
    from .holonomy import solve_holonomy
    from .presentation import parse_presentation
    try:
        sols = solve_holonomy(parse_presentation(text))
    except ParseError as e:
        _fail("presentation: %s" % e, EXIT_PARSE)
    except NotZeroDimensionalError:
        _fail("closed-manifold pipeline requires dim 0", EXIT_DIMENSION)
    data = {"presentation": text.strip(), "solutions": []}
    for s in sols:
        entry = {
            "base_field": poly_json(s.base_field.h),
            "base_field_text": format_poly(s.base_field.h),
            "x_min_poly": poly_json(element_min_poly(s.x_expr)),
            "x_min_poly_text": format_poly(element_min_poly(s.x_expr)),
            "y_min_poly": poly_json(element_min_poly(s.y_expr)),
            "y_min_poly_text": format_poly(element_min_poly(s.y_expr)),
            "r_min_poly_text": format_poly(element_min_poly(s.r_expr)),
            "irreducible": s.is_irreducible,
        }
        if s.is_irreducible:
            entry["trace_field"] = poly_json(s.trace_field.h)
            entry["trace_field_text"] = format_poly(s.trace_field.h)
            entry["character"] = [poly_json(c) for c in s.char_in_trace_field]
            entry["character_text"] = [format_poly(c)
                                       for c in s.char_in_trace_field]
            entry["holonomy_candidate"] = s.is_candidate
        data["solutions"].append(entry)

    def render(d):
        for i, e in enumerate(d["solutions"]):
            tag = "irreducible" if e["irreducible"] else "reducible"
            print("solution %d (%s): base field %s"
                  % (i, tag, e["base_field_text"]))
            print("  x: %s" % e["x_min_poly_text"])
            print("  y: %s" % e["y_min_poly_text"])
            print("  r: %s" % e["r_min_poly_text"])
            if e["irreducible"]:
                print("  trace field: %s" % e["trace_field_text"])
                print("  character: (%s)" % ", ".join(e["character_text"]))
                print("  holonomy candidate: %s" % e["holonomy_candidate"])

    _emit(data, args.format, render)
    return EXIT_OK


def build_parser():
    ap = argparse.ArgumentParser(
        prog="charzeta",
        description="SL2 character varieties of two-generator groups, trace "
                    "fields, and Hasse-Weil vs Dedekind zeta comparison")
    ap.add_argument("command",
                    choices=["charvar", "zeta", "holonomy", "tracefield"])
    src = ap.add_mutually_exclusive_group()
    src.add_argument("--preset", help="built-in example name")
    src.add_argument("--input", help="presentation file")
    ap.add_argument("--prime-bound", type=int, default=100)
    ap.add_argument("--format", choices=["text", "json"], default="text")
    ap.add_argument("--component", type=int, default=None)
    ap.add_argument("--special-value", action="store_true")
    ap.add_argument("--volume", type=float, default=None)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--figure", default=None,
                    help="write a verdict chart (zeta command) to this file")
    return ap


def main(argv=None):
    args = build_parser().parse_args(argv)
    modp.DEFAULT_SEED = args.seed
    handler = {
        "charvar": cmd_charvar,
        "zeta": cmd_zeta,
        "holonomy": cmd_holonomy,
        "tracefield": cmd_tracefield,
    }[args.command]
    sys.exit(handler(args))


if __name__ == "__main__":
    main()
