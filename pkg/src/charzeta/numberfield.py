"""Arithmetic in number fields Q[T]/(h).

Elements are residue classes of rational polynomials modulo a monic
irreducible defining polynomial.  On top of the basic field arithmetic this
module provides minimal polynomials of elements, root finding / isomorphism
testing between fields (via norms and resultants), subfield generation (used
for invariant trace fields), Dedekind-style prime splitting read off from
factorization of h mod p, and numeric Dedekind zeta values.
"""

from fractions import Fraction

import mpmath

from .unipoly import (UniPoly, discriminant, format_poly, poly_extended_gcd,
                      signature, squarefree_part)
from .qfactor import factor_rational, is_irreducible_q
from .modp import factor_mod_p, BadReductionError
from .groebner import _first_dependence


class NumberField:
    """Q[T]/(h) for a monic irreducible h with rational coefficients."""

    def __init__(self, h):
        h = h.monic()
        if h.degree < 1:
            raise ValueError("defining polynomial must be non-constant")
        if not is_irreducible_q(h):
            raise ValueError("defining polynomial is not irreducible: %s"
                             % format_poly(h))
        self.h = h
        self.degree = h.degree
        self.disc_h = discriminant(h)
        self.signature = signature(h)      # (r1, r2)

    def element(self, rep):
        if isinstance(rep, FieldElem):
            if rep.field is not self and rep.field.h != self.h:
                raise ValueError("element of a different field")
            return FieldElem(self, rep.rep)
        if not isinstance(rep, UniPoly):
            rep = UniPoly.const(Fraction(rep))
        return FieldElem(self, rep % self.h)

    def gen(self):
        return self.element(UniPoly.x())

    def zero(self):
        return self.element(0)

    def one(self):
        return self.element(1)

    def __eq__(self, other):
        return isinstance(other, NumberField) and self.h == other.h

    def __hash__(self):
        return hash(("NumberField", self.h))

    def __repr__(self):
        return "NumberField(%s)" % format_poly(self.h)


class FieldElem:
    """Residue class rep(T) mod h; rep has degree < deg h."""

    __slots__ = ("field", "rep")

    def __init__(self, field, rep):
        self.field = field
        self.rep = rep % field.h

    def _coerce(self, other):
        if isinstance(other, FieldElem):
            if other.field.h != self.field.h:
                raise ValueError("mixed fields")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.element(other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return FieldElem(self.field, self.rep + o.rep)

    __radd__ = __add__

    def __neg__(self):
        return FieldElem(self.field, -self.rep)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return FieldElem(self.field, self.rep - o.rep)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return FieldElem(self.field, (self.rep * o.rep) % self.field.h)

    __rmul__ = __mul__

    def inverse(self):
        if self.rep.is_zero():
            raise ZeroDivisionError("inverse of zero field element")
        g, s, _ = poly_extended_gcd(self.rep, self.field.h)
        # g is a nonzero constant since h is irreducible
        return FieldElem(self.field, s * UniPoly.const(1 / g.coeffs[0]))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        out = self.field.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self.rep == o.rep

    def __hash__(self):
        return hash((self.field.h, self.rep))

    def is_zero(self):
        return self.rep.is_zero()

    def is_rational(self):
        return self.rep.degree <= 0

    def as_rational(self):
        if not self.is_rational():
            raise ValueError("not a rational element")
        return self.rep.coeffs[0] if self.rep.coeffs else Fraction(0)

    def __repr__(self):
        return "FieldElem(%s)" % format_poly(self.rep)


def _vec(rep, n):
    c = list(rep.coeffs) + [Fraction(0)] * n
    return tuple(c[:n])


def element_min_poly(e):
    """Monic irreducible minimal polynomial of a field element, found as the
    first linear dependence among 1, e, e^2, ..."""
    n = e.field.degree
    vectors = []
    cur = e.field.one()
    for _ in range(n + 1):
        vectors.append(_vec(cur.rep, n))
        dep = _first_dependence(vectors)
        if dep is not None:
            k, coeffs = dep
            return UniPoly(list(-c for c in coeffs) + [Fraction(1)])
        cur = cur * e
    raise RuntimeError("no dependence among powers -- broken field arithmetic")


# -- polynomials with FieldElem coefficients ----------------------------------
# Represented as coefficient lists (ascending degree), trimmed.

def _ktrim(c):
    while c and c[-1].is_zero():
        c.pop()
    return c


def _kadd(a, b, K):
    m = max(len(a), len(b))
    return _ktrim([(a[i] if i < len(a) else K.zero()) +
                   (b[i] if i < len(b) else K.zero()) for i in range(m)])


def _kmul(a, b, K):
    if not a or not b:
        return []
    out = [K.zero()] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca.is_zero():
            continue
        for j, cb in enumerate(b):
            out[i + j] = out[i + j] + ca * cb
    return _ktrim(out)


def _kdivmod(a, b, K):
    if not b:
        raise ZeroDivisionError
    r = list(a)
    q = [K.zero()] * max(len(a) - len(b) + 1, 0)
    inv = b[-1].inverse()
    while len(r) >= len(b):
        c = r[-1] * inv
        d = len(r) - len(b)
        q[d] = c
        for i, cb in enumerate(b):
            r[d + i] = r[d + i] - c * cb
        r.pop()                    # leading term cancels exactly
        _ktrim(r)
    return q, r


def _kgcd(a, b, K):
    a, b = list(a), list(b)
    while b:
        _, r = _kdivmod(a, b, K)
        a, b = b, r
    if a:
        inv = a[-1].inverse()
        a = [c * inv for c in a]
    return a


def _lift_q_poly(f, K):
    """A rational UniPoly viewed with coefficients in K."""
    return _ktrim([K.element(c) for c in f.coeffs])


def _compose_shift(f, K, s):
    """f(T - s*alpha) as a polynomial over K (alpha = K.gen()), by Horner."""
    shift = [(-s) * K.gen(), K.one()]        # T - s*alpha
    out = []
    for c in reversed(f.coeffs):
        out = _kadd(_kmul(out, shift, K), [K.element(c)], K)
    return out


def _interpolate(points):
    """Lagrange interpolation through (x_i, y_i) with rational coordinates."""
    out = UniPoly.zero()
    xs = [x for x, _ in points]
    for i, (xi, yi) in enumerate(points):
        if yi == 0:
            continue
        num = UniPoly.const(yi)
        den = Fraction(1)
        for j, xj in enumerate(xs):
            if j == i:
                continue
            num = num * UniPoly([-xj, Fraction(1)])
            den *= xi - xj
        out = out + num * UniPoly.const(1 / den)
    return out


def _norm_resultant(f, K, s):
    """Res_x(h(x), f(T - s*x)) in Q[T], by evaluation-interpolation."""
    from .unipoly import resultant
    h = K.h
    deg = h.degree * max(f.degree, 0)
    points = []
    t = 0
    while len(points) < deg + 1:
        # f(t - s*x) as a polynomial in x
        inner = UniPoly([Fraction(t), Fraction(-s)])
        ft = f.compose(inner)
        points.append((Fraction(t), resultant(h, ft)))
        t += 1
    return _interpolate(points)


def roots_in_field(f, K):
    """All roots of the rational polynomial f inside K (Trager-style)."""
    f = squarefree_part(f)
    roots = []
    _, factors = factor_rational(f)
    for g, _ in factors:
        d = g.degree
        if d == 1:
            roots.append(K.element(-g.coeffs[0]))
            continue
        if K.degree % d != 0:
            continue
        # find a shift making the norm squarefree, then read roots off the
        # gcd of g(T - s*alpha) with the rational factors of the norm
        for s in range(1, 40):
            norm = _norm_resultant(g, K, s)
            if squarefree_part(norm).degree == norm.degree:
                break
        else:
            raise RuntimeError("no squarefree norm shift found")
        _, nfactors = factor_rational(norm)
        for nf, _ in nfactors:
            gk = _kgcd(_compose_shift(g, K, s), _lift_q_poly(nf, K), K)
            if len(gk) == 2:
                # monic linear factor T + c: its root is beta + s*alpha,
                # so the root of g itself is -c - s*alpha
                roots.append(-gk[0] - s * K.gen())
    # deterministic order
    roots.sort(key=lambda r: tuple(r.rep.coeffs))
    return roots


def is_isomorphic(K, L):
    """Field isomorphism test.  Returns (flag, image) where image is a root
    of K.h inside L (the image of K's generator), or None."""
    if K.degree != L.degree:
        return False, None
    ratio = Fraction(K.disc_h) / Fraction(L.disc_h)
    num, den = ratio.numerator, ratio.denominator
    if num < 0 or _isqrt_exact(num * den) is None:
        return False, None
    r = roots_in_field(K.h, L)
    if r:
        return True, r[0]
    return False, None


def _isqrt_exact(n):
    if n < 0:
        return None
    import math
    s = math.isqrt(n)
    return s if s * s == n else None


# -- subfields -----------------------------------------------------------------

class SaturationError(Exception):
    pass


def subfield_generated(K, gens, target_degree=None):
    """Smallest subfield of K containing all gens.

    Returns (subfield, primitive) with primitive in K of minimal polynomial
    subfield.h.  If target_degree is given, generation past it raises
    SaturationError (a pipeline inconsistency).
    """
    t = K.zero()
    t_min = UniPoly.x()          # minpoly of 0 is T
    for e in gens:
        if e.is_rational():
            continue
        # try combinations t + c*e; the degree of Q(t + c*e) equals the
        # degree of Q(t, e) for all but finitely many c (< n^2 of them)
        best = None
        for c in range(0, 2 * K.degree * K.degree + 2):
            cand = t + c * e
            m = element_min_poly(cand)
            if best is None or m.degree > best[1].degree:
                best = (cand, m)
            if best[1].degree == K.degree:
                break
        t, t_min = best
        if target_degree is not None and t_min.degree > target_degree:
            raise SaturationError(
                "subfield degree %d exceeds target %d"
                % (t_min.degree, target_degree))
    if t_min.degree == 0:
        t_min = UniPoly.x()      # the rational subfield: Q = Q[T]/(T)
    sub = NumberField(t_min) if t_min.degree >= 1 else None
    return sub, t


def invariant_trace_field(K, comp, h1order, max_length=6):
    """Subfield of the trace field generated by traces of squared words.

    comp supplies the coordinate expressions (x, y, z) as polynomials in the
    generator of K; words of increasing length are folded in until the
    subfield degree reaches deg(K)/h1order.
    """
    from .traces import trace_polynomial
    from .presentation import Word
    if K.degree % h1order != 0:
        raise ValueError("h1 order does not divide the field degree")
    target = K.degree // h1order
    coords = [K.element(g) for g in comp.coords]
    t = K.zero()
    gens_seen = set()
    for L in range(1, max_length + 1):
        for letters in _words_of_length(L):
            w = Word(letters)
            ww = w.concat(w)
            val = trace_polynomial(ww).evaluate(coords)
            if isinstance(val, Fraction):
                continue
            key = tuple(val.rep.coeffs)
            if key in gens_seen:
                continue
            gens_seen.add(key)
            sub, t = subfield_generated(K, [t, val], target_degree=target)
            if sub is not None and sub.degree == target:
                return sub, t
        # degree-1 target: Q itself
        if target == 1:
            return NumberField(UniPoly([Fraction(0), Fraction(1)])), t
    raise SaturationError("saturation failure: invariant field degree "
                          "did not reach %d for word length <= %d"
                          % (target, max_length))


def _words_of_length(L):
    """Reduced words in two generators, positive and negative letters."""
    alphabet = (1, -1, 2, -2)
    def rec(prefix):
        if len(prefix) == L:
            yield tuple(prefix)
            return
        for a in alphabet:
            if prefix and prefix[-1] == -a:
                continue
            prefix.append(a)
            yield from rec(prefix)
            prefix.pop()
    yield from rec([])


# -- Dedekind splitting and zeta -----------------------------------------------

class DedekindSplitting:
    """Factor pattern of h modulo p: parts [(f_i, e_i)], flagged good when
    p does not divide disc(h)."""

    def __init__(self, p, parts, good):
        self.p = p
        self.parts = parts
        self.good = good

    def __repr__(self):
        return "DedekindSplitting(p=%d, parts=%r, good=%r)" % (
            self.p, self.parts, self.good)


def dedekind_splitting(K, p):
    disc_num = (Fraction(K.disc_h).numerator *
                Fraction(K.disc_h).denominator)
    good = disc_num % p != 0
    try:
        factors = factor_mod_p(K.h, p)
    except BadReductionError:
        # denominators of h would collide with p; h is monic integral in all
        # pipeline uses, so treat as a bad prime with a single opaque part
        return DedekindSplitting(p, [(K.degree, 1)], False)
    parts = sorted((f.degree, m) for f, m in factors)
    return DedekindSplitting(p, parts, good)


def dedekind_local_factor(split):
    """Residue-degree multiset {f_i}, one per prime part (e_i ignored),
    encoding the local factor prod (1 - T^{f_i})^{-1}."""
    return sorted(f for f, _ in split.parts)


def splitting_fingerprint(K, primes):
    """Map p -> residue-degree multiset at good primes (an arithmetical-
    equivalence fingerprint)."""
    out = {}
    for p in primes:
        s = dedekind_splitting(K, p)
        if s.good:
            out[p] = tuple(dedekind_local_factor(s))
    return out


def primes_up_to(n):
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0:2] = b"\x00\x00"
    for i in range(2, int(n ** 0.5) + 1):
        if sieve[i]:
            sieve[i * i::i] = b"\x00" * len(sieve[i * i::i])
    return [i for i in range(2, n + 1) if sieve[i]]


def dedekind_zeta_value(K, s, prime_bound, method="euler", dps=50):
    """Truncated Dedekind zeta value zeta(K, s).

    euler: closed-form product of local factors over p <= prime_bound.
    dirichlet: the same local data expanded as Dirichlet series, each local
    factor summed over prime powers p^k <= prime_bound^2, then multiplied.
    Returns (value, truncation_estimate).
    """
    if prime_bound < 2:
        raise ValueError("prime bound must be at least 2")
    if s < 2:
        raise ValueError("need s >= 2 for absolute convergence")
    with mpmath.workdps(dps):
        total = mpmath.mpf(1)
        cut = prime_bound * prime_bound
        for p in primes_up_to(prime_bound):
            degs = dedekind_local_factor(dedekind_splitting(K, p))
            if method == "euler":
                local = mpmath.mpf(1)
                for f in degs:
                    local /= 1 - mpmath.mpf(p) ** (-s * f)
            elif method == "dirichlet":
                # coefficients of prod (1 - T^f)^{-1} up to p^k <= cut
                kmax = 0
                q = 1
                while q * p <= cut:
                    q *= p
                    kmax += 1
                coef = [0] * (kmax + 1)
                coef[0] = 1
                for f in degs:
                    for k in range(f, kmax + 1):
                        coef[k] += coef[k - f]
                local = mpmath.mpf(0)
                for k, a in enumerate(coef):
                    if a:
                        local += a * mpmath.mpf(p) ** (-s * k)
            else:
                raise ValueError("unknown method %r" % method)
            total *= local
        # tail estimate: log of the omitted factors is at most
        # deg * sum_{m > bound} m^{-s} <= deg / ((s-1) * bound^{s-1})
        est = total * K.degree / ((s - 1) * mpmath.mpf(prime_bound) ** (s - 1))
        return total, est
