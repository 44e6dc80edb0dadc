"""Exact univariate polynomials over Q.

Coefficients are `fractions.Fraction`; the zero polynomial has degree -1.
Everything here is pure and allocation-happy rather than clever: inputs
are tiny (degree <= ~40 throughout the pipeline).
"""

from fractions import Fraction
from math import gcd


class UniPoly:
    """Univariate polynomial with exact rational coefficients.

    Stored as a tuple of Fractions in ascending degree with no trailing
    zeros, so equality is structural.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    # -- construction helpers ------------------------------------------------

    @classmethod
    def zero(cls):
        return cls(())

    @classmethod
    def one(cls):
        return cls((1,))

    @classmethod
    def x(cls):
        return cls((0, 1))

    @classmethod
    def const(cls, c):
        return cls((c,))

    @classmethod
    def from_roots(cls, roots):
        f = cls.one()
        for r in roots:
            f = f * cls((-Fraction(r), 1))
        return f

    # -- basic queries -------------------------------------------------------

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def leading(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __getitem__(self, i):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    # -- arithmetic ----------------------------------------------------------

    def __neg__(self):
        return UniPoly([-c for c in self.coeffs])

    def __add__(self, other):
        if not isinstance(other, UniPoly):
            other = UniPoly.const(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly([self[i] + other[i] for i in range(n)])

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, UniPoly):
            other = UniPoly.const(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly([self[i] - other[i] for i in range(n)])

    def __rsub__(self, other):
        return UniPoly.const(other) - self

    def __mul__(self, other):
        if not isinstance(other, UniPoly):
            c = Fraction(other)
            return UniPoly([c * a for a in self.coeffs])
        if self.is_zero() or other.is_zero():
            return UniPoly.zero()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power")
        result = UniPoly.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def divmod(self, other):
        """Polynomial division: self = q*other + r with deg r < deg other."""
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        r = list(self.coeffs)
        q = [Fraction(0)] * max(0, len(r) - len(other.coeffs) + 1)
        d = other.degree
        lc = other.leading()
        for i in range(len(r) - 1, d - 1, -1):
            if r[i]:
                c = r[i] / lc
                q[i - d] = c
                for j, b in enumerate(other.coeffs):
                    r[i - d + j] -= c * b
        return UniPoly(q), UniPoly(r[:d] if d > 0 else [])

    __divmod__ = divmod

    def __mod__(self, other):
        return self.divmod(other)[1]

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def monic(self):
        if self.is_zero():
            return self
        lc = self.leading()
        return UniPoly([c / lc for c in self.coeffs])

    def derivative(self):
        return UniPoly([i * c for i, c in enumerate(self.coeffs)][1:])

    def evaluate(self, v):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * v + c
        return acc

    def compose(self, other):
        """self(other(x))."""
        acc = UniPoly.zero()
        for c in reversed(self.coeffs):
            acc = acc * other + UniPoly.const(c)
        return acc

    def shift(self, a):
        """self(x + a)."""
        return self.compose(UniPoly((Fraction(a), 1)))

    def scale_arg(self, s):
        """self(s*x)."""
        s = Fraction(s)
        return UniPoly([c * s**i for i, c in enumerate(self.coeffs)])

    def reverse(self):
        """x^deg * self(1/x)."""
        return UniPoly(list(reversed(self.coeffs)))

    # -- integer normal forms --------------------------------------------------

    def content_and_primitive(self):
        """(c, g) with self = c*g, g primitive with integer coefficients and
        positive leading coefficient."""
        if self.is_zero():
            return Fraction(0), self
        den = 1
        for c in self.coeffs:
            den = den * c.denominator // gcd(den, c.denominator)
        num = 0
        for c in self.coeffs:
            num = gcd(num, c.numerator * (den // c.denominator))
        cont = Fraction(num, den)
        if self.leading() < 0:
            cont = -cont
        return cont, UniPoly([c / cont for c in self.coeffs])

    def primitive(self):
        return self.content_and_primitive()[1]

    def int_coeffs(self):
        """Coefficient list as ints; raises if any coefficient is not integral."""
        out = []
        for c in self.coeffs:
            if c.denominator != 1:
                raise ValueError("non-integer coefficient %s" % c)
            out.append(c.numerator)
        return out

    def __repr__(self):
        return "UniPoly(%s)" % format_poly(self)


def format_poly(f, var="T"):
    if f.is_zero():
        return "0"
    parts = []
    for i in range(f.degree, -1, -1):
        c = f[i]
        if not c:
            continue
        if i == 0:
            term = str(c)
        else:
            xp = var if i == 1 else "%s^%d" % (var, i)
            if c == 1:
                term = xp
            elif c == -1:
                term = "-" + xp
            else:
                term = "%s*%s" % (c, xp)
        parts.append(term)
    out = parts[0]
    for t in parts[1:]:
        out += " - " + t[1:] if t.startswith("-") else " + " + t
    return out


def poly_gcd(f, g):
    """Monic gcd over Q."""
    a, b = f, g
    while not b.is_zero():
        a, b = b, a % b
    return a.monic() if not a.is_zero() else a


def poly_extended_gcd(f, g):
    """(d, u, v) with u*f + v*g = d, d monic gcd."""
    r0, r1 = f, g
    s0, s1 = UniPoly.one(), UniPoly.zero()
    t0, t1 = UniPoly.zero(), UniPoly.one()
    while not r1.is_zero():
        q, r = r0.divmod(r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0.is_zero():
        return r0, s0, t0
    lc = r0.leading()
    inv = 1 / lc
    return r0 * inv, s0 * inv, t0 * inv


def squarefree_part(f):
    """f / gcd(f, f'), made monic."""
    if f.degree <= 0:
        return f.monic() if not f.is_zero() else f
    g = poly_gcd(f, f.derivative())
    return (f // g).monic()


def resultant(f, g):
    """Res(f, g) over Q via the subresultant-free Euclidean recursion."""
    if f.is_zero() or g.is_zero():
        return Fraction(0)
    a, b = f, g
    res = Fraction(1)
    while b.degree > 0:
        r = a % b
        if r.is_zero():
            return Fraction(0)
        res *= b.leading() ** (a.degree - r.degree)
        if (a.degree * b.degree) % 2 == 1:
            res = -res
        a, b = b, r
    # b is a nonzero constant
    res *= b.leading() ** a.degree
    return res


def discriminant(f):
    """Resultant-based discriminant; integer for monic integer f."""
    if f.is_zero():
        raise ValueError("discriminant of the zero polynomial")
    n = f.degree
    if n < 1:
        raise ValueError("discriminant needs degree >= 1")
    r = resultant(f, f.derivative())
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    return sign * r / f.leading()


def sturm_sequence(f):
    seq = [f, f.derivative()]
    while not seq[-1].is_zero() and seq[-1].degree > 0:
        seq.append(-(seq[-2] % seq[-1]))
    if seq[-1].is_zero():
        seq.pop()
    return seq


def _sign_variations(seq, x, at_inf=0):
    signs = []
    for f in seq:
        if at_inf:
            if f.is_zero():
                continue
            s = f.leading()
            if at_inf < 0 and f.degree % 2 == 1:
                s = -s
        else:
            s = f.evaluate(x)
        if s > 0:
            signs.append(1)
        elif s < 0:
            signs.append(-1)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_real_roots(f):
    """Number of distinct real roots, by Sturm's theorem (exact)."""
    if f.degree < 1:
        return 0
    seq = sturm_sequence(f)
    return _sign_variations(seq, None, at_inf=-1) - _sign_variations(seq, None, at_inf=1)


def signature(f):
    """(real_roots, complex_pairs) of a squarefree rational polynomial."""
    if f.is_zero():
        raise ValueError("signature of the zero polynomial")
    if poly_gcd(f, f.derivative()).degree > 0:
        raise ValueError("polynomial is not squarefree; take squarefree_part first")
    r = count_real_roots(f)
    return r, (f.degree - r) // 2
