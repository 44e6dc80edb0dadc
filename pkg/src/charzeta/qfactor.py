"""Factorization of univariate polynomials over Q.

Zassenhaus: squarefree split, factor mod a good small prime, Hensel lift
to a bound past Mignotte, then recombine factor subsets.  Degrees in this
project stay <= ~24, so subset search is cheap.
"""

from fractions import Fraction
from math import gcd, isqrt
import itertools

from .unipoly import UniPoly, poly_gcd, squarefree_part
from . import modp


def _primes():
    yield 2
    n = 3
    while True:
        if all(n % d for d in range(3, isqrt(n) + 1, 2)):
            yield n
        n += 2


def _mignotte_bound(f):
    """Bound on |coefficients| of any monic factor of integer poly f."""
    n = f.degree
    norm = isqrt(sum(int(c) * int(c) for c in f.coeffs)) + 1
    return (2 ** n) * norm * abs(int(f.leading())) + 1


def _hensel_lift_pair(f, g, h, p, k):
    """Lift f = g*h (mod p) to mod p^k.

    f, g, h are integer coefficient lists with g, h monic; the Bezout pair
    is lifted quadratically alongside (von zur Gathen & Gerhard, Alg. 15.10).
    """
    _, s, t = _xgcd_fp(g, h, p)
    m = p
    g, h = list(g), list(h)
    while m < p ** k:
        m2 = m * m
        e = _isub(f, _imul(g, h), m2)
        q, r = _idivmod(_imul(s, e), h, m2)
        g = _itrim([(a + b) % m2 for a, b in
                    _zippad(g, _iadd(_imul(t, e), _imul(q, g), m2))])
        h = _itrim([(a + b) % m2 for a, b in _zippad(h, r)])
        b = _isub(_iadd(_imul(s, g), _imul(t, h), m2), [1], m2)
        c, d = _idivmod(_imul(s, b), h, m2)
        s = _isub(s, d, m2)
        t = _isub(t, _iadd(_imul(t, b), _imul(c, g), m2), m2)
        m = m2
    pk = p ** k
    return [c % pk for c in g], [c % pk for c in h]


def _zippad(a, b):
    n = max(len(a), len(b))
    return zip(a + [0] * (n - len(a)), b + [0] * (n - len(b)))


def _itrim(c):
    while c and c[-1] == 0:
        c.pop()
    return c


def _imul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _itrim(out)


def _iadd(a, b, m=None):
    out = [(x + y) for x, y in _zippad(list(a), list(b))]
    if m:
        out = [v % m for v in out]
    return _itrim(out)


def _isub(a, b, m=None):
    out = [(x - y) for x, y in _zippad(list(a), list(b))]
    if m:
        out = [v % m for v in out]
    return _itrim(out)


def _idivmod(a, b, m):
    """Division mod m; b must be monic."""
    assert b and b[-1] == 1
    r = [v % m for v in a]
    db = len(b) - 1
    q = [0] * max(0, len(r) - db)
    for i in range(len(r) - 1, db - 1, -1):
        c = r[i] % m
        if c:
            q[i - db] = c
            for j, y in enumerate(b):
                r[i - db + j] = (r[i - db + j] - c * y) % m
    return _itrim(q), _itrim(r[:db])


def _xgcd_fp(g, h, p):
    r0, r1 = [c % p for c in g], [c % p for c in h]
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while modp.trim(list(r1)):
        q, r = modp.pdivmod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, modp.psub(s0, modp.pmul(q, s1, p), p)
        t0, t1 = t1, modp.psub(t0, modp.pmul(q, t1, p), p)
    inv = pow(r0[-1], p - 2, p)
    return ([c * inv % p for c in r0], [c * inv % p for c in s0],
            [c * inv % p for c in t0])


def _center(c, m):
    c %= m
    return c - m if c > m // 2 else c


def _factor_squarefree_int(f):
    """Factor a primitive squarefree integer UniPoly into irreducibles over Z."""
    if f.degree <= 1:
        return [f]
    fc = f.int_coeffs()
    lc = fc[-1]
    # choose a prime not dividing lc with f squarefree mod p
    for p in _primes():
        if lc % p == 0:
            continue
        fp = [c % p for c in fc]
        if not modp.trim(list(modp.pderiv(fp, p))):
            continue
        if len(modp.pgcd(fp, modp.pderiv(fp, p), p)) == 1:
            break
    factors_p = [g.int_coeffs() for g, _ in modp.factor_fp(fp, p)]
    if len(factors_p) == 1:
        return [f]
    bound = 2 * _mignotte_bound(f)
    k = 1
    while p ** k < bound:
        k += 1
    # lift all modular factors: iteratively split f_p = g * rest
    pk = p ** k
    lifted = []
    rem = [c % pk for c in fc]
    # make rem monic mod p^k by scaling with lc inverse; track in recombination
    lc_inv = pow(lc, -1, pk)
    rem_monic = _itrim([c * lc_inv % pk for c in rem])
    work = [c % p for c in rem_monic]
    fcur = rem_monic
    mods = [list(g) for g in factors_p]
    for i, g in enumerate(mods[:-1]):
        rest = [1]
        for h in mods[i + 1:]:
            rest = modp.pmul(rest, h, p)
        G, H = _hensel_lift_pair(fcur, g, rest, p, k)
        lifted.append(G)
        fcur = H
    lifted.append(fcur)
    # recombination
    result = []
    remaining = UniPoly(fc)
    idx = list(range(len(lifted)))
    used = set()
    for size in range(1, len(lifted) + 1):
        again = True
        while again:
            again = False
            avail = [i for i in idx if i not in used]
            if size > len(avail):
                break
            for combo in itertools.combinations(avail, size):
                prod = [int(remaining.leading()) % pk]
                for i in combo:
                    prod = _itrim([c % pk for c in _imul(prod, lifted[i])])
                cand = UniPoly([_center(c, pk) for c in prod]).primitive()
                if cand.degree < 1:
                    continue
                q, r = remaining.divmod(cand)
                if r.is_zero():
                    result.append(cand)
                    remaining = q.primitive()
                    used.update(combo)
                    again = True
                    break
    if remaining.degree >= 1:
        result.append(remaining.primitive())
    return result


def factor_rational(f):
    """Full factorization over Q.

    Returns (content: Fraction, [(monic irreducible UniPoly, multiplicity)]).
    """
    if f.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    cont, prim = f.content_and_primitive()
    if prim.degree == 0:
        return cont, []
    sf = squarefree_part(prim).primitive()
    final = []
    lead = cont
    for irr in _factor_squarefree_int(sf):
        m = 0
        h = prim
        while True:
            q, r = h.divmod(irr)
            if r.is_zero():
                m += 1
                h = q
            else:
                break
        lead *= irr.leading() ** m
        final.append((irr.monic(), m))
    final.sort(key=lambda t: (t[0].degree, t[0].coeffs))
    return lead, final


def rational_roots(f):
    """All rational roots (with multiplicity collapsed) of f."""
    roots = []
    _, factors = factor_rational(f)
    for g, _ in factors:
        if g.degree == 1:
            roots.append(-g[0] / g[1])
    return sorted(roots)


def is_irreducible_q(f):
    if f.degree <= 0:
        return False
    _, factors = factor_rational(f)
    return len(factors) == 1 and factors[0][1] == 1 and factors[0][0].degree == f.degree
