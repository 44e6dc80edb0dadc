"""Polynomial arithmetic and factorization over F_p, and F_{p^n} elements.

Polynomials over F_p are plain lists of ints in [0, p), ascending degree,
no trailing zeros.  Factorization is squarefree + distinct-degree +
equal-degree (Cantor-Zassenhaus) splitting with an explicitly seeded RNG;
very small fields fall back to exhaustive root search.
"""

import random

from .unipoly import UniPoly


class BadReductionError(ValueError):
    """Leading coefficient vanishes mod p."""


DEFAULT_SEED = 0


def trim(c):
    while c and c[-1] == 0:
        c.pop()
    return c


def pnormal(f, p):
    return trim([c % p for c in f])


def padd(f, g, p):
    n = max(len(f), len(g))
    return trim([((f[i] if i < len(f) else 0) + (g[i] if i < len(g) else 0)) % p
                 for i in range(n)])


def psub(f, g, p):
    n = max(len(f), len(g))
    return trim([((f[i] if i < len(f) else 0) - (g[i] if i < len(g) else 0)) % p
                 for i in range(n)])


def pmul(f, g, p):
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] = (out[i + j] + a * b) % p
    return trim(out)


def pdivmod(f, g, p):
    if not g:
        raise ZeroDivisionError
    r = list(f)
    dg = len(g) - 1
    inv = pow(g[-1], p - 2, p)
    q = [0] * max(0, len(r) - dg)
    for i in range(len(r) - 1, dg - 1, -1):
        if r[i]:
            c = r[i] * inv % p
            q[i - dg] = c
            for j, b in enumerate(g):
                r[i - dg + j] = (r[i - dg + j] - c * b) % p
    return trim(q), trim(r[:dg])


def pmod(f, g, p):
    return pdivmod(f, g, p)[1]


def pgcd(f, g, p):
    a, b = list(f), list(g)
    while b:
        a, b = b, pmod(a, b, p)
    if a:
        inv = pow(a[-1], p - 2, p)
        a = [c * inv % p for c in a]
    return a


def pmonic(f, p):
    if not f:
        return f
    inv = pow(f[-1], p - 2, p)
    return [c * inv % p for c in f]


def ppowmod(f, e, m, p):
    """f^e mod m over F_p."""
    result = [1]
    base = pmod(f, m, p)
    while e:
        if e & 1:
            result = pmod(pmul(result, base, p), m, p)
        base = pmod(pmul(base, base, p), m, p)
        e >>= 1
    return result


def pderiv(f, p):
    return trim([(i * c) % p for i, c in enumerate(f)][1:])


def peval(f, x, p):
    acc = 0
    for c in reversed(f):
        acc = (acc * x + c) % p
    return acc


def from_unipoly(f, p):
    """Reduce a rational UniPoly with p-integral coefficients mod p."""
    out = []
    for c in f.coeffs:
        if c.denominator % p == 0:
            raise BadReductionError("denominator divisible by %d" % p)
        out.append(c.numerator * pow(c.denominator, p - 2, p) % p)
    return trim(out)


def to_unipoly(f):
    return UniPoly(f)


# -- factorization over F_p --------------------------------------------------

def _squarefree_decomposition(f, p):
    """Yield (g, multiplicity) with g squarefree, product g^m = f (monic)."""
    out = []
    m = 1
    while len(f) > 1:
        df = pderiv(f, p)
        if not df:
            # f = h(x^p); take p-th root
            root = [f[i] for i in range(0, len(f), p)]
            # coefficients need p-th root, identity on F_p
            for g, mult in _squarefree_decomposition(trim(root), p):
                out.append((g, mult * p))
            return out
        c = pgcd(f, df, p)
        w = pdivmod(f, c, p)[0]
        while len(w) > 1:
            y = pgcd(w, c, p)
            z = pdivmod(w, y, p)[0]
            if len(z) > 1:
                out.append((z, m))
            c = pdivmod(c, y, p)[0]
            w = y
            m += 1
        if len(c) > 1:
            # c collects the factors with multiplicity divisible by p; it has
            # zero derivative, so the recursion applies the factor of p itself.
            for g, mult in _squarefree_decomposition(c, p):
                out.append((g, mult))
            return out
        m = 1
        f = c
        break
    return out


def _distinct_degree(f, p):
    """Split squarefree monic f into [(product of irred factors of degree d, d)]."""
    out = []
    h = [0, 1]          # x
    g = list(f)
    d = 0
    while len(g) - 1 >= 2 * (d + 1):
        d += 1
        h = ppowmod(h, p, g, p)
        gd = pgcd(psub(h, [0, 1], p), g, p)
        if len(gd) > 1:
            out.append((gd, d))
            g = pdivmod(g, gd, p)[0]
            h = pmod(h, g, p)
    if len(g) > 1:
        out.append((g, len(g) - 1))
    return out


def _equal_degree_split(f, d, p, rng):
    """Cantor-Zassenhaus split of monic squarefree f, all factors of degree d."""
    n = len(f) - 1
    if n == d:
        return [f]
    # deterministic exhaustive root search for tiny cases
    if d == 1 and p <= 257:
        roots = [x for x in range(p) if peval(f, x, p) == 0]
        return [[(-r) % p, 1] for r in sorted(roots)]
    while True:
        a = [rng.randrange(p) for _ in range(n)] + [1]
        if p == 2:
            # trace map
            t = list(a)
            acc = list(a)
            for _ in range(d - 1):
                acc = ppowmod(acc, 2, f, p)
                t = padd(t, acc, p)
            g = pgcd(t, f, p)
        else:
            e = (p ** d - 1) // 2
            b = ppowmod(a, e, f, p)
            g = pgcd(psub(b, [1], p), f, p)
        if 0 < len(g) - 1 < n:
            q = pdivmod(f, g, p)[0]
            return _equal_degree_split(g, d, p, rng) + _equal_degree_split(q, d, p, rng)


def factor_mod_p(f, p, seed=None):
    """Factor a rational polynomial mod p into monic irreducibles.

    Returns a list of (UniPoly over F_p given as int-coefficient UniPoly,
    multiplicity), sorted deterministically.  Raises BadReductionError if p
    divides the leading coefficient (or any cleared denominator).
    """
    fp = from_unipoly(f, p)
    if not fp or len(fp) - 1 < f.degree:
        raise BadReductionError("leading coefficient divisible by %d" % p)
    return factor_fp(fp, p, seed=seed)


def factor_fp(fp, p, seed=None):
    """Factor an F_p coefficient list into monic irreducibles with multiplicity."""
    if seed is None:
        seed = DEFAULT_SEED
    rng = random.Random(hash((seed, p, tuple(fp))))
    fp = pmonic(fp, p)
    result = []
    for g, mult in _squarefree_decomposition(fp, p):
        for block, d in _distinct_degree(g, p):
            for irr in _equal_degree_split(block, d, p, rng):
                result.append((pmonic(irr, p), mult))
    result.sort(key=lambda t: (len(t[0]), t[0]))
    return [(UniPoly(g), m) for g, m in result]


def is_irreducible_fp(fp, p):
    """Rabin's irreducibility test for an F_p coefficient list."""
    n = len(fp) - 1
    if n <= 0:
        return False
    if n == 1:
        return True
    fp = pmonic(fp, p)
    h = ppowmod([0, 1], p ** n, fp, p)
    if psub(h, [0, 1], p):
        return False
    for q in set(_prime_factors(n)):
        h = ppowmod([0, 1], p ** (n // q), fp, p)
        if len(pgcd(psub(h, [0, 1], p), fp, p)) != 1:
            return False
    return True


def _prime_factors(n):
    out = []
    d = 2
    while d * d <= n:
        while n % d == 0:
            out.append(d)
            n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def count_roots_in_extension(fp, p, n):
    """Number of roots of the F_p polynomial fp in F_{p^n}.

    A root generates F_{p^d} for d the degree of its minimal polynomial,
    so the count is the sum of d over irreducible factors of degree d | n
    (squarefree part; repeated factors contribute one root set).
    """
    total = 0
    for irr, _ in factor_fp(fp, p):
        d = irr.degree
        if d >= 1 and n % d == 0:
            total += d
    return total


# -- F_{p^n} -----------------------------------------------------------------

def find_irreducible(p, n, seed=0):
    """A monic irreducible of degree n over F_p (deterministic for fixed seed)."""
    if n == 1:
        return [0, 1]
    rng = random.Random(hash((seed, p, n)))
    while True:
        f = [rng.randrange(p) for _ in range(n)] + [1]
        if is_irreducible_fp(f, p):
            return f


class FF:
    """The field F_{p^n} as F_p[x]/(modulus)."""

    def __init__(self, p, n, modulus=None):
        self.p = p
        self.n = n
        self.modulus = modulus if modulus is not None else find_irreducible(p, n)
        assert len(self.modulus) - 1 == n

    @property
    def order(self):
        return self.p ** self.n

    def elem(self, coeffs):
        return FFElem(self, pmod(pnormal(list(coeffs), self.p), self.modulus, self.p))

    def zero(self):
        return FFElem(self, [])

    def one(self):
        return FFElem(self, [1])

    def gen(self):
        return self.elem([0, 1])

    def elements(self):
        """All p^n elements (ascending base-p enumeration)."""
        from itertools import product
        for tup in product(range(self.p), repeat=self.n):
            yield FFElem(self, trim(list(tup)))

    def __eq__(self, other):
        return (isinstance(other, FF) and self.p == other.p
                and self.n == other.n and self.modulus == other.modulus)

    def __repr__(self):
        return "FF(%d^%d)" % (self.p, self.n)


class FFElem:
    __slots__ = ("field", "value")

    def __init__(self, field, value):
        self.field = field
        self.value = value

    def __add__(self, other):
        return FFElem(self.field, padd(self.value, other.value, self.field.p))

    def __sub__(self, other):
        return FFElem(self.field, psub(self.value, other.value, self.field.p))

    def __mul__(self, other):
        return FFElem(self.field, pmod(pmul(self.value, other.value, self.field.p),
                                       self.field.modulus, self.field.p))

    def __pow__(self, e):
        if e < 0:
            return self.inverse() ** (-e)
        return FFElem(self.field, ppowmod(self.value, e, self.field.modulus, self.field.p))

    def inverse(self):
        if not self.value:
            raise ZeroDivisionError
        return self ** (self.field.order - 2)

    def is_zero(self):
        return not self.value

    def __eq__(self, other):
        return isinstance(other, FFElem) and self.value == other.value and self.field == other.field

    def __hash__(self):
        return hash((tuple(self.value), self.field.p, self.field.n))

    def __repr__(self):
        return "FFElem(%s over %r)" % (self.value, self.field)


def eval_unipoly_ff(f, x):
    """Evaluate a rational UniPoly at an FFElem (coefficients reduced mod p)."""
    fld = x.field
    p = fld.p
    acc = fld.zero()
    for c in reversed(f.coeffs):
        cval = c.numerator * pow(c.denominator, p - 2, p) % p
        acc = acc * x + fld.elem([cval])
    return acc
