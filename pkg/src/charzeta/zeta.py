"""Point counting over finite fields and zeta-function comparison.

Local factors Z(X,p,T) of a zero-dimensional affine scheme are recovered from
point counts over F_{p^n}, and compared prime by prime with the Dedekind zeta
local factors of the trace field.  Also implements the Borel volume formula
and the special-value ratio check.
"""

import itertools
import os
from fractions import Fraction
from math import lcm

import mpmath

from .multipoly import MultiPoly
from .unipoly import UniPoly, format_poly
from .modp import FF, count_roots_in_extension, from_unipoly
from .numberfield import (NumberField, dedekind_local_factor,
                          dedekind_splitting, is_isomorphic, primes_up_to)

DEFAULT_BUDGET = 2 * 10 ** 7


def exhaustive_budget():
    env = os.environ.get("CHARZETA_BUDGET")
    return int(env) if env else DEFAULT_BUDGET


class BadPrimeError(Exception):
    """The prime divides the model's denominator modulus."""


class CountsInconsistentError(Exception):
    """No nonnegative-integer solution of the Moebius system."""


class BudgetError(Exception):
    """Exhaustive enumeration would exceed the point budget and no
    univariate route is available."""


class SchemeModel:
    """Integer-coefficient model of a zero-dimensional affine scheme.

    generators: list of MultiPoly with integer coefficients.
    shape_poly: optional integer UniPoly h(T) such that the points biject
    with roots of h (shape position: every other coordinate is a polynomial
    in the root, with denominators dividing denominator_modulus).
    """

    def __init__(self, generators, nvars, denominator_modulus=1,
                 shape_poly=None):
        self.generators = generators
        self.nvars = nvars
        self.denominator_modulus = denominator_modulus
        self.shape_poly = shape_poly

    @classmethod
    def from_component(cls, comp):
        """Model an AlgebraicComponent: variables (T, x, y, z) with h(T) and
        d_i*x_i - d_i*g_i(T), denominators cleared into the modulus."""
        m = len(comp.coords)
        nvars = m + 1
        N = 1
        gens = []
        hd = lcm(*(c.denominator for c in comp.field_poly.coeffs), 1)
        N *= hd
        hpoly = UniPoly([c * hd for c in comp.field_poly.coeffs])
        gens.append(_unipoly_in_var(hpoly, nvars, 0))
        for i, g in enumerate(comp.coords):
            d = lcm(*(c.denominator for c in g.coeffs), 1)
            N *= d
            eq = (MultiPoly.var(nvars, i + 1) * d -
                  _unipoly_in_var(UniPoly([c * d for c in g.coeffs]),
                                  nvars, 0))
            gens.append(eq)
        return cls(gens, nvars, N, shape_poly=hpoly)


def _unipoly_in_var(f, nvars, idx):
    terms = {}
    for k, c in enumerate(f.coeffs):
        e = [0] * nvars
        e[idx] = k
        terms[tuple(e)] = Fraction(c)
    return MultiPoly(nvars, terms)


def _eval_ff(poly, values, field):
    """Evaluate an integer MultiPoly at FFElem values."""
    acc = field.zero()
    for e, c in poly.terms.items():
        ci = int(c)
        if ci % field.p == 0:
            continue
        term = field.elem([ci])
        for i, k in enumerate(e):
            if k:
                term = term * values[i] ** k
        acc = acc + term
    return acc


def count_points(model, p, n, budget=None, force_exhaustive=False):
    """#X(F_{p^n}) of the model.

    The shape-position univariate route is used when available (root
    counting via distinct-degree factorization); otherwise exhaustive
    enumeration, which must fit the point budget.  force_exhaustive
    selects enumeration even when a univariate route exists (the two
    paths must agree -- used as a cross-check).
    """
    if budget is None:
        budget = exhaustive_budget()
    if model.denominator_modulus % p == 0:
        raise BadPrimeError("p=%d divides the denominator modulus" % p)
    if model.shape_poly is not None and not force_exhaustive:
        return _count_shape(model, p, n)
    total = p ** (n * model.nvars)
    if total <= budget:
        return _count_exhaustive(model, p, n)
    raise BudgetError("p^(n*vars) = %d exceeds budget %d and the model has "
                      "no univariate route" % (total, budget))


def _count_exhaustive(model, p, n):
    field = FF(p, n)
    gens = model.generators
    count = 0
    for point in itertools.product(field.elements(), repeat=model.nvars):
        if all(_eval_ff(g, point, field).is_zero() for g in gens):
            count += 1
    return count


def _count_shape(model, p, n):
    hp = from_unipoly(model.shape_poly, p)
    return count_roots_in_extension(hp, p, n)


class LocalFactor:
    """Multiset of residue degrees {d_i}; encodes prod (1 - T^{d_i})^{-1}."""

    def __init__(self, degrees):
        self.degrees = tuple(sorted(degrees))

    def counts(self, n):
        """#X(F_{p^n}) this factor predicts."""
        return sum(d for d in self.degrees if n % d == 0)

    def series(self, order):
        """Exact rational coefficients of prod (1-T^d)^{-1} to given order."""
        coef = [Fraction(0)] * (order + 1)
        coef[0] = Fraction(1)
        for d in self.degrees:
            for k in range(d, order + 1):
                coef[k] += coef[k - d]
        return coef

    def __eq__(self, other):
        return isinstance(other, LocalFactor) and self.degrees == other.degrees

    def __repr__(self):
        return "LocalFactor(%r)" % list(self.degrees)


def exp_counts_series(counts, order):
    """exp(sum_n N_n T^n / n) truncated, with exact rational coefficients."""
    # log series L with L[0] = 0
    L = [Fraction(0)] * (order + 1)
    for n in range(1, min(len(counts), order) + 1):
        L[n] = Fraction(counts[n - 1], n)
    # exp via E' = L' * E
    E = [Fraction(0)] * (order + 1)
    E[0] = Fraction(1)
    for k in range(1, order + 1):
        s = Fraction(0)
        for j in range(1, k + 1):
            s += j * L[j] * E[k - j]
        E[k] = s / k
    return E


def _moebius(n):
    out = 1
    d = 2
    while d * d <= n:
        if n % d == 0:
            n //= d
            if n % d == 0:
                return 0
            out = -out
        d += 1
    if n > 1:
        out = -out
    return out


def local_factor_from_counts(counts):
    """Degrees multiset from counts N_1..N_m via Moebius inversion; the
    second half of the counts over-determines the system and is checked."""
    m = len(counts)
    a = {}
    for d in range(1, m + 1):
        s = 0
        for r in range(1, d + 1):
            if d % r == 0:
                s += _moebius(d // r) * counts[r - 1]
        if s % d != 0 or s < 0:
            raise CountsInconsistentError(
                "no nonnegative integer solution at degree %d" % d)
        a[d] = s // d
    degrees = []
    for d, mult in a.items():
        degrees.extend([d] * mult)
    lf = LocalFactor(degrees)
    for n in range(1, m + 1):
        if lf.counts(n) != counts[n - 1]:
            raise CountsInconsistentError("reconstruction mismatch at n=%d" % n)
    return lf


class ZetaComparisonReport:
    def __init__(self, prime_bound, verdicts, bad_set):
        self.prime_bound = prime_bound
        self.verdicts = verdicts            # p -> "match"|"mismatch"|"skipped-bad"
        self.bad_set = bad_set
        self.theorem_holds = all(
            v != "mismatch" or p in bad_set for p, v in verdicts.items())

    def mismatches(self):
        return sorted(p for p, v in self.verdicts.items() if v == "mismatch")

    def __repr__(self):
        return ("ZetaComparisonReport(bound=%d, theorem_holds=%r, "
                "bad_set=%r, mismatches=%r)" %
                (self.prime_bound, self.theorem_holds,
                 sorted(self.bad_set), self.mismatches()))


def compare_zeta(comp, K, prime_bound, budget=None):
    """Per-prime comparison of the component scheme's local zeta factors with
    the Dedekind local factors of K.  Fields must be isomorphic."""
    flag, _ = is_isomorphic(NumberField(comp.field_poly), K)
    if not flag:
        raise ValueError("component field is not isomorphic to the "
                         "supplied number field")
    model = SchemeModel.from_component(comp)
    disc_num = abs(Fraction(K.disc_h).numerator * Fraction(K.disc_h).denominator)
    bad_mod = model.denominator_modulus * disc_num
    bad_set = {p for p in primes_up_to(prime_bound) if bad_mod % p == 0}
    verdicts = {}
    nmax = 2 * K.degree
    for p in primes_up_to(prime_bound):
        try:
            counts = [count_points(model, p, n, budget=budget)
                      for n in range(1, nmax + 1)]
            lhs = local_factor_from_counts(counts)
        except (BadPrimeError, CountsInconsistentError):
            verdicts[p] = "skipped-bad" if p in bad_set else "mismatch"
            continue
        rhs = LocalFactor(dedekind_local_factor(dedekind_splitting(K, p)))
        verdicts[p] = "match" if lhs == rhs else "mismatch"
    return ZetaComparisonReport(prime_bound, verdicts, bad_set)


# -- volumes and special values --------------------------------------------------

def borel_volume(disc_k, degree, ram_norms, zeta_k_2, dps=50):
    """Borel's volume formula:
    |disc|^{3/2} * zeta_k(2) * prod (N(p)-1) / (4*pi^2)^{degree-1}."""
    if degree < 2:
        raise ValueError("field degree must be at least 2")
    if zeta_k_2 <= 1:
        raise ValueError("zeta_k(2) must exceed 1")
    if any(q < 2 for q in ram_norms):
        raise ValueError("ramified prime norms must be at least 2")
    with mpmath.workdps(dps):
        v = abs(mpmath.mpf(disc_k)) ** mpmath.mpf("1.5") * zeta_k_2
        for q in ram_norms:
            v *= q - 1
        v /= (4 * mpmath.pi ** 2) ** (degree - 1)
        return v


class SpecialValueResult:
    def __init__(self, ratio, nearest_rational, residual, warning=None):
        self.ratio = ratio
        self.nearest_rational = nearest_rational
        self.residual = residual
        self.warning = warning

    def __repr__(self):
        return ("SpecialValueResult(ratio=%s, nearest=%s, residual=%s%s)" %
                (self.ratio, self.nearest_rational, self.residual,
                 ", warning=%r" % self.warning if self.warning else ""))


def special_value_check(K_inv, volume, prime_bound=10 ** 5, max_denominator=48,
                        dps=50):
    """ratio = zeta(K_inv,2) * |disc|^{3/2} / ((4 pi^2)^{deg-1} * volume),
    with the nearest rational of bounded denominator and the residual."""
    from .numberfield import dedekind_zeta_value
    if volume <= 0:
        raise ValueError("volume must be positive")
    warning = None
    if K_inv.signature[1] != 1:
        warning = ("field has signature %r, not one complex place; the "
                   "special-value statement applies to arithmetic closed "
                   "manifolds" % (K_inv.signature,))
    with mpmath.workdps(dps):
        z, _ = dedekind_zeta_value(K_inv, 2, prime_bound, "euler", dps=dps)
        disc = abs(Fraction(K_inv.disc_h))
        num = z * mpmath.mpf(disc.numerator) ** mpmath.mpf("1.5") / \
            mpmath.mpf(disc.denominator) ** mpmath.mpf("1.5")
        ratio = num / ((4 * mpmath.pi ** 2) ** (K_inv.degree - 1) *
                       mpmath.mpf(volume))
        nearest = Fraction(str(ratio)).limit_denominator(max_denominator)
        residual = abs(ratio - mpmath.mpf(nearest.numerator) /
                       nearest.denominator)
    return SpecialValueResult(ratio, nearest, residual, warning)
