"""Buchberger Groebner basis engine over Q, plus zero-dimensional solving.

Internally polynomials are dicts {exponent tuple: int} kept primitive
(coefficient gcd 1); reductions are fraction-free.  Pair handling uses the
Gebauer-Moeller criteria with sugar-degree selection.

Zero-dimensional varieties are decomposed through quotient-algebra linear
algebra: a squarefree univariate is added per variable (Seidenberg) to cut
to the radical, a separating linear form is found, and each variable is
rewritten as a polynomial in it; factoring its minimal polynomial then
splits the variety into irreducible components given by a number field and
coordinate expressions.
"""

from fractions import Fraction
from math import gcd

from .multipoly import MultiPoly
from .unipoly import UniPoly, squarefree_part
from .qfactor import factor_rational


class MonomialOrder:
    """lex or grevlex, with an optional variable priority permutation.

    priority[0] is the most significant variable index.
    """

    def __init__(self, kind, nvars, priority=None):
        if kind not in ("lex", "grevlex"):
            raise ValueError("unknown order kind %r" % kind)
        self.kind = kind
        self.nvars = nvars
        self.priority = tuple(priority) if priority is not None else tuple(range(nvars))
        if sorted(self.priority) != list(range(nvars)):
            raise ValueError("priority must be a permutation of variables")
        self._cache = {}

    def key(self, mono):
        k = self._cache.get(mono)
        if k is None:
            if self.kind == "lex":
                k = tuple(mono[p] for p in self.priority)
            else:
                k = (sum(mono), tuple(-mono[p] for p in reversed(self.priority)))
            self._cache[mono] = k
        return k

    def __repr__(self):
        return "MonomialOrder(%s, priority=%s)" % (self.kind, self.priority)


def _mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _mono_divides(a, b):
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def _mono_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def _mono_coprime(a, b):
    return all(x == 0 or y == 0 for x, y in zip(a, b))


def _to_int_terms(p):
    """MultiPoly -> primitive {mono: int}."""
    if not p.terms:
        return {}
    den = 1
    for c in p.terms.values():
        den = den * c.denominator // gcd(den, c.denominator)
    terms = {e: c.numerator * (den // c.denominator) for e, c in p.terms.items()}
    g = 0
    for v in terms.values():
        g = gcd(g, v)
    return {e: v // g for e, v in terms.items()}


def _primitive(terms):
    g = 0
    for v in terms.values():
        g = gcd(g, v)
        if g == 1:
            return terms
    if g in (0, 1):
        return terms
    return {e: v // g for e, v in terms.items()}


def _lead(terms, key):
    return max(terms, key=key)


def _reduce_full(terms, basis, key):
    """Full normal form of {mono:int} modulo basis = [(lm, lc, terms)].

    Fraction-free: the result is only defined up to a positive rational
    multiple, which is all ideal membership and normal-form-zero tests need;
    callers wanting monic forms rescale afterwards.
    """
    h = dict(terms)
    out = {}
    steps = 0
    while h:
        m = _lead(h, key)
        c = h[m]
        hit = None
        for lm, lc, gterms in basis:
            if _mono_divides(lm, m):
                hit = (lm, lc, gterms)
                break
        if hit is None:
            out[m] = c
            del h[m]
            continue
        lm, lc, gterms = hit
        delta = tuple(a - b for a, b in zip(m, lm))
        # h <- lc*h - c*x^delta*g ; scale pending output too
        if lc != 1:
            for e in h:
                h[e] *= lc
            for e in out:
                out[e] *= lc
        for e, gc in gterms.items():
            em = _mono_mul(e, delta)
            v = h.get(em, 0) - c * gc
            if v:
                h[em] = v
            elif em in h:
                del h[em]
        steps += 1
        if steps & 3 == 0 and h:
            # periodic content strip keeps the integers from snowballing;
            # the result is only needed up to a positive multiple
            g = 0
            for v in h.values():
                g = gcd(g, v)
                if g == 1:
                    break
            else:
                for v in out.values():
                    g = gcd(g, v)
                    if g == 1:
                        break
            if g > 1:
                for e in h:
                    h[e] //= g
                for e in out:
                    out[e] //= g
    return _primitive(out)


class GroebnerBasis:
    """Reduced Groebner basis with its order; polys are monic MultiPoly."""

    def __init__(self, polys, order, nvars):
        self.polys = polys
        self.order = order
        self.nvars = nvars
        self._int = []
        key = order.key
        for p in polys:
            t = _to_int_terms(p)
            lm = _lead(t, key)
            self._int.append((lm, t[lm], t))

    @property
    def leading_monomials(self):
        return [lm for lm, _, _ in self._int]

    def is_trivial(self):
        return len(self.polys) == 1 and self.polys[0].is_constant() and \
            not self.polys[0].is_zero()

    def normal_form(self, p):
        """Exact normal form of a MultiPoly modulo the (monic) basis."""
        key = self.order.key
        h = dict(p.terms)
        out = {}
        heads = [(lm, g.terms) for (lm, _, _), g in zip(self._int, self.polys)]
        while h:
            m = _lead(h, key)
            c = h[m]
            hit = None
            for lm, gterms in heads:
                if _mono_divides(lm, m):
                    hit = (lm, gterms)
                    break
            if hit is None:
                out[m] = c
                del h[m]
                continue
            lm, gterms = hit
            delta = tuple(a - b for a, b in zip(m, lm))
            for e, gc in gterms.items():
                em = _mono_mul(e, delta)
                v = h.get(em, 0) - c * gc
                if v:
                    h[em] = v
                elif em in h:
                    del h[em]
        return MultiPoly(self.nvars, out)

    def contains(self, p):
        return self.normal_form(p).is_zero()


def _spoly(fi, fj):
    (lmi, lci, ti), (lmj, lcj, tj) = fi, fj
    tau = _mono_lcm(lmi, lmj)
    di = tuple(a - b for a, b in zip(tau, lmi))
    dj = tuple(a - b for a, b in zip(tau, lmj))
    g = gcd(lci, lcj)
    ci, cj = lcj // g, lci // g
    out = {}
    for e, c in ti.items():
        out[_mono_mul(e, di)] = c * ci
    for e, c in tj.items():
        em = _mono_mul(e, dj)
        v = out.get(em, 0) - c * cj
        if v:
            out[em] = v
        elif em in out:
            del out[em]
    return out


def buchberger(gens, order):
    """Reduced Groebner basis of the ideal generated by `gens`.

    gens: nonempty list of MultiPoly over a common variable count with
    nonnegative exponents.
    """
    if not gens:
        raise ValueError("empty generator list")
    nvars = gens[0].nvars
    key = order.key
    G = []          # list of (lm, lc, terms, sugar)
    pairs = []      # list of (sugar, lcm_key, i, j, lcm)

    def add_pairs(t):
        # Gebauer-Moeller update when appending element index t
        lmt = G[t][0]
        newp = []
        for i in range(t):
            lcm = _mono_lcm(G[i][0], lmt)
            newp.append([i, lcm])
        # criterion M: drop (i,t) if lcm(i,t) strictly divisible by lcm(j,t)
        keep = []
        for i, lcm in newp:
            drop = False
            for j, lcm2 in newp:
                if j == i:
                    continue
                if lcm2 != lcm and _mono_divides(lcm2, lcm):
                    drop = True
                    break
            if not drop:
                keep.append([i, lcm])
        # criterion F: among equal lcms keep one, prefer coprime (then dropped by B)
        seen = {}
        for i, lcm in keep:
            if lcm not in seen:
                seen[lcm] = i
        keep = [(i, lcm) for lcm, i in seen.items()]
        # criterion B (Buchberger 1): coprime leading monomials reduce to 0
        keep = [(i, lcm) for i, lcm in keep if not _mono_coprime(G[i][0], lmt)]
        # prune old pairs made redundant by lmt
        survivors = []
        for (s, lk, i, j, lcm) in pairs:
            if _mono_divides(lmt, lcm) and _mono_lcm(G[i][0], lmt) != lcm \
                    and _mono_lcm(G[j][0], lmt) != lcm:
                continue
            survivors.append((s, lk, i, j, lcm))
        pairs[:] = survivors
        for i, lcm in keep:
            s = max(G[i][3] + sum(lcm) - sum(G[i][0]),
                    G[t][3] + sum(lcm) - sum(lmt))
            pairs.append((s, key(lcm), i, t, lcm))

    def append_poly(terms, sugar):
        terms = _primitive(terms)
        lm = _lead(terms, key)
        lc = terms[lm]
        if lc < 0:
            terms = {e: -c for e, c in terms.items()}
            lc = -lc
        G.append((lm, lc, terms, sugar))
        add_pairs(len(G) - 1)

    for g in gens:
        t = _to_int_terms(g)
        if t:
            append_poly(t, sum(_lead(t, key)))

    if not G:
        raise ValueError("all generators are zero")

    while pairs:
        pairs.sort(key=lambda q: (q[0], q[1]))
        s, lk, i, j, lcm = pairs.pop(0)
        sp = _spoly(G[i][:3], G[j][:3])
        if not sp:
            continue
        red = _reduce_full(sp, [(lm, lc, t) for lm, lc, t, _ in G], key)
        if red:
            append_poly(red, s)

    # interreduce to the unique reduced basis
    items = [(lm, lc, t) for lm, lc, t, _ in G]
    # drop elements whose lm is divisible by another lm
    minimal = []
    for idx, (lm, lc, t) in enumerate(items):
        if any(_mono_divides(items[k][0], lm) for k in range(len(items))
               if k != idx and (items[k][0] != lm or k < idx)):
            continue
        minimal.append((lm, lc, t))
    reduced = []
    for idx, (lm, lc, t) in enumerate(minimal):
        others = [minimal[k] for k in range(len(minimal)) if k != idx]
        reduced.append(_reduce_head_kept(dict(t), lm, others, key))
    polys = []
    for t in reduced:
        lm = _lead(t, key)
        lc = t[lm]
        polys.append(MultiPoly(nvars, {e: Fraction(v, lc) for e, v in t.items()}))
    polys.sort(key=lambda p: key(_lead(_to_int_terms(p), key)))
    return GroebnerBasis(polys, order, nvars)


def _reduce_head_kept(terms, head, basis, key):
    """Normal form where the head monomial is never reduced (it is the
    element's own leading monomial during interreduction)."""
    h = dict(terms)
    out = {}
    steps = 0
    while h:
        m = _lead(h, key)
        c = h[m]
        hit = None
        if m != head:
            for lm, lc, gterms in basis:
                if _mono_divides(lm, m):
                    hit = (lm, lc, gterms)
                    break
        if hit is None:
            out[m] = c
            del h[m]
            continue
        lm, lc, gterms = hit
        delta = tuple(a - b for a, b in zip(m, lm))
        if lc != 1:
            for e in h:
                h[e] *= lc
            for e in out:
                out[e] *= lc
        for e, gc in gterms.items():
            em = _mono_mul(e, delta)
            v = h.get(em, 0) - c * gc
            if v:
                h[em] = v
            elif em in h:
                del h[em]
    return _primitive(out)


def is_zero_dimensional(gb):
    """True iff every variable has a pure power among the leading monomials."""
    if gb.is_trivial():
        return True
    lms = gb.leading_monomials
    for i in range(gb.nvars):
        if not any(m[i] > 0 and all(v == 0 for j, v in enumerate(m) if j != i)
                   for m in lms):
            return False
    return True


def quotient_basis(gb):
    """Monomials not divisible by any leading monomial (the staircase)."""
    if not is_zero_dimensional(gb):
        raise NotZeroDimensionalError(
            "not zero-dimensional -- closed-manifold pipeline only")
    if gb.is_trivial():
        return []
    lms = gb.leading_monomials
    # bound per variable from the pure powers
    bounds = []
    for i in range(gb.nvars):
        b = min(m[i] for m in lms
                if m[i] > 0 and all(v == 0 for j, v in enumerate(m) if j != i))
        bounds.append(b)
    out = []
    from itertools import product
    for mono in product(*(range(b) for b in bounds)):
        if not any(_mono_divides(lm, mono) for lm in lms):
            out.append(mono)
    out.sort(key=gb.order.key)
    return out


class NotZeroDimensionalError(ValueError):
    pass


# -- linear algebra over Q ----------------------------------------------------

def _first_dependence(vectors):
    """Smallest k with vectors[k] in span(vectors[:k]), plus the coefficients:
    returns (k, coeffs) with vectors[k] = sum coeffs[i]*vectors[i].  None if
    the whole list is independent."""
    rows = []          # reduced echelon rows: (pivot index, row, combo)
    n = len(vectors[0]) if vectors else 0
    for k, v in enumerate(vectors):
        cur = list(v)
        combo = [Fraction(0)] * k
        for piv, row, rc in rows:
            c = cur[piv]
            if c:
                for i in range(n):
                    cur[i] -= c * row[i]
                for i in range(len(rc)):
                    combo[i] -= c * rc[i]
        piv = next((i for i, c in enumerate(cur) if c), None)
        if piv is None:
            return k, [-c for c in combo]
        inv = 1 / cur[piv]
        row = [c * inv for c in cur]
        rows.append((piv, row, [c * inv for c in combo] + [inv]))
    return None


def solve_linear(matrix_cols, target):
    """Solve sum_j x_j * matrix_cols[j] = target over Q; None if unsolvable."""
    m = len(target)
    n = len(matrix_cols)
    aug = [[matrix_cols[j][i] for j in range(n)] + [target[i]] for i in range(m)]
    piv_cols = []
    r = 0
    for c in range(n):
        pr = next((i for i in range(r, m) if aug[i][c]), None)
        if pr is None:
            continue
        aug[r], aug[pr] = aug[pr], aug[r]
        inv = 1 / aug[r][c]
        aug[r] = [v * inv for v in aug[r]]
        for i in range(m):
            if i != r and aug[i][c]:
                f = aug[i][c]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[r])]
        piv_cols.append(c)
        r += 1
        if r == m:
            break
    # consistency
    for i in range(r, m):
        if aug[i][n]:
            return None
    x = [Fraction(0)] * n
    for i, c in enumerate(piv_cols):
        x[c] = aug[i][n]
    return x


# -- quotient algebra ----------------------------------------------------------

class QuotientAlgebra:
    """Q[vars]/I for a zero-dimensional ideal, with a monomial basis."""

    def __init__(self, gb):
        self.gb = gb
        self.basis = quotient_basis(gb)
        self.index = {m: i for i, m in enumerate(self.basis)}
        self.dim = len(self.basis)

    def to_vector(self, p):
        nf = self.gb.normal_form(p) if not self._in_basis(p) else p
        v = [Fraction(0)] * self.dim
        for e, c in nf.terms.items():
            if e not in self.index:
                raise ValueError("normal form outside the staircase")
            v[self.index[e]] = c
        return v

    def _in_basis(self, p):
        return all(e in self.index for e in p.terms)

    def multiply(self, p, q):
        return self.gb.normal_form(p * q)

    def min_poly(self, p):
        """Minimal polynomial of the multiplication class of p."""
        one = MultiPoly.const(self.gb.nvars, 1)
        powers = [one]
        vectors = [self.to_vector(one)]
        cur = one
        for k in range(1, self.dim + 2):
            cur = self.multiply(cur, p)
            vectors.append(self.to_vector(cur))
            dep = _first_dependence(vectors)
            if dep is not None:
                _, coeffs = dep
                return UniPoly([-c for c in coeffs] + [Fraction(1)])
            powers.append(cur)
        raise RuntimeError("min_poly did not terminate")


def radicalize(gens, order):
    """Groebner basis of an ideal with the same variety, made radical by
    adding the squarefree part of each variable's minimal polynomial
    (Seidenberg's criterion)."""
    gb = buchberger(gens, order)
    if gb.is_trivial():
        return gb
    alg = QuotientAlgebra(gb)
    extras = []
    for i in range(gb.nvars):
        xi = MultiPoly.var(gb.nvars, i)
        m = alg.min_poly(xi)
        sf = squarefree_part(m)
        if sf.degree < m.degree:
            extras.append(MultiPoly.from_unipoly(sf, gb.nvars, i))
    if not extras:
        return gb
    # restart from the computed basis, not the raw generators: the old GB
    # polys are already interreduced, which keeps the second run cheap
    return buchberger(list(gb.polys) + extras, order)


class AlgebraicComponent:
    """One irreducible component of a reduced zero-dimensional variety:
    a number field Q[T]/(field_poly) and per-variable coordinates."""

    def __init__(self, field_poly, coords):
        self.field_poly = field_poly          # monic irreducible UniPoly
        self.coords = list(coords)            # UniPoly of degree < deg(field_poly)

    @property
    def degree(self):
        return self.field_poly.degree

    def __repr__(self):
        return "AlgebraicComponent(%r, coords=%r)" % (self.field_poly, self.coords)


def solve_zero_dim(gens, order=None, check=True):
    """Decompose the reduced variety of a zero-dimensional ideal.

    Returns a list of AlgebraicComponent sorted by (degree, coefficients).
    Raises NotZeroDimensionalError on positive-dimensional input.
    """
    nvars = gens[0].nvars
    if order is None:
        order = MonomialOrder("grevlex", nvars)
    gb = radicalize(gens, order)
    if gb.is_trivial():
        return []
    if not is_zero_dimensional(gb):
        raise NotZeroDimensionalError(
            "not zero-dimensional -- closed-manifold pipeline only")
    alg = QuotientAlgebra(gb)
    D = alg.dim

    # deterministic search for a separating linear form
    candidates = []
    for i in reversed(range(nvars)):
        candidates.append(MultiPoly.var(nvars, i))
    smalls = [1, -1, 2, -2, 3, -3, 5, 7]
    for c1 in smalls:
        for c2 in (smalls if nvars >= 3 else [0]):
            t = MultiPoly.var(nvars, nvars - 1)
            t = t + c1 * MultiPoly.var(nvars, 0)
            if nvars >= 3 and c2:
                t = t + c2 * MultiPoly.var(nvars, 1)
            candidates.append(t)

    sep = None
    for t in candidates:
        m = alg.min_poly(t)
        if m.degree == D:
            sep = t
            sep_min = m
            break
    if sep is None:
        raise RuntimeError("no separating linear form found")

    # powers of sep span the algebra; express each variable in that basis
    one = MultiPoly.const(nvars, 1)
    powers = [one]
    for _ in range(D - 1):
        powers.append(alg.multiply(powers[-1], sep))
    cols = [alg.to_vector(p) for p in powers]
    coord_exprs = []
    for i in range(nvars):
        target = alg.to_vector(alg.gb.normal_form(MultiPoly.var(nvars, i)))
        sol = solve_linear(cols, target)
        if sol is None:
            raise RuntimeError("separating form failed to span")
        coord_exprs.append(UniPoly(sol))

    _, factors = factor_rational(sep_min)
    comps = []
    for h, mult in factors:
        coords = [g % h for g in coord_exprs]
        comp = AlgebraicComponent(h, coords)
        if check:
            for g in gens:
                val = g.substitute_unipoly(coords, modulus=h)
                if not val.is_zero():
                    raise RuntimeError("component back-substitution failed")
        comps.append(comp)
    comps.sort(key=lambda c: (c.degree, c.field_poly.coeffs))
    return comps


def filter_irreducible(components, kappa):
    """Components where the reducibility polynomial is nonzero (a unit)."""
    out = []
    for comp in components:
        val = kappa.substitute_unipoly(comp.coords, modulus=comp.field_poly)
        if not val.is_zero():
            out.append(comp)
    return out
