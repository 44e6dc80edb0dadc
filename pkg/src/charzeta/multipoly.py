"""Sparse multivariate (optionally Laurent) polynomials over Q.

Terms are a dict mapping dense exponent tuples to nonzero Fractions.
Negative exponents are allowed so that Riley-form matrix entries can live
in Q[x, 1/x, y, 1/y, r]; ideal-level code clears them before Groebner
computations.
"""

from fractions import Fraction

from .unipoly import UniPoly


class MultiPoly:
    __slots__ = ("nvars", "terms")

    def __init__(self, nvars, terms=None):
        self.nvars = nvars
        t = {}
        if terms:
            for e, c in terms.items():
                c = Fraction(c)
                if c:
                    t[tuple(e)] = c
        self.terms = t

    # -- constructors ---------------------------------------------------------

    @classmethod
    def const(cls, nvars, c):
        c = Fraction(c)
        return cls(nvars, {(0,) * nvars: c} if c else {})

    @classmethod
    def var(cls, nvars, i, power=1):
        e = [0] * nvars
        e[i] = power
        return cls(nvars, {tuple(e): Fraction(1)})

    @classmethod
    def zero(cls, nvars):
        return cls(nvars, {})

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return all(all(v == 0 for v in e) for e in self.terms)

    def constant_value(self):
        return self.terms.get((0,) * self.nvars, Fraction(0))

    def total_degree(self):
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def __eq__(self, other):
        return (isinstance(other, MultiPoly) and self.nvars == other.nvars
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    # -- arithmetic -----------------------------------------------------------

    def __neg__(self):
        return MultiPoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __add__(self, other):
        if not isinstance(other, MultiPoly):
            other = MultiPoly.const(self.nvars, other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            elif e in out:
                del out[e]
        r = MultiPoly(self.nvars)
        r.terms = out
        return r

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, MultiPoly):
            other = MultiPoly.const(self.nvars, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            c = Fraction(other)
            if not c:
                return MultiPoly.zero(self.nvars)
            return MultiPoly(self.nvars, {e: c * v for e, v in self.terms.items()})
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                elif e in out:
                    del out[e]
        r = MultiPoly(self.nvars)
        r.terms = out
        return r

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power")
        result = MultiPoly.const(self.nvars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- evaluation / substitution ---------------------------------------------

    def evaluate(self, values):
        """Evaluate at a point; values may be Fractions or any ring elements
        supporting +, *, and integer powers (negative exponents need an
        `inverse` or Fraction value)."""
        acc = None
        for e, c in self.terms.items():
            term = None
            for i, k in enumerate(e):
                if k == 0:
                    continue
                v = values[i]
                f = v ** k if k > 0 else _inv_pow(v, -k)
                term = f if term is None else term * f
            term = c if term is None else term * c
            acc = term if acc is None else acc + term
        if acc is None:
            return Fraction(0)
        return acc

    def substitute_unipoly(self, reps, modulus=None):
        """Substitute UniPoly expressions for each variable; optionally reduce
        mod a univariate modulus after each product (coordinates in a number
        field). Exponents must be nonnegative."""
        red = (lambda f: f % modulus) if modulus is not None else (lambda f: f)
        acc = UniPoly.zero()
        for e, c in self.terms.items():
            term = UniPoly.const(c)
            for i, k in enumerate(e):
                if k < 0:
                    raise ValueError("negative exponent in substitution")
                for _ in range(k):
                    term = red(term * reps[i])
            acc = acc + term
        return red(acc)

    def min_exponents(self):
        if not self.terms:
            return (0,) * self.nvars
        return tuple(min(e[i] for e in self.terms) for i in range(self.nvars))

    def shift_exponents(self, delta):
        return MultiPoly(self.nvars,
                         {tuple(a + b for a, b in zip(e, delta)): c
                          for e, c in self.terms.items()})

    def clear_laurent(self):
        """Multiply by the monomial clearing all negative exponents."""
        m = self.min_exponents()
        delta = tuple(-v if v < 0 else 0 for v in m)
        return self.shift_exponents(delta)

    def as_unipoly(self, i):
        """View as univariate in variable i (other exponents must be 0)."""
        coeffs = {}
        for e, c in self.terms.items():
            if any(v != 0 for j, v in enumerate(e) if j != i):
                raise ValueError("not univariate in variable %d" % i)
            coeffs[e[i]] = c
        if not coeffs:
            return UniPoly.zero()
        d = max(coeffs)
        return UniPoly([coeffs.get(k, Fraction(0)) for k in range(d + 1)])

    @classmethod
    def from_unipoly(cls, f, nvars, i):
        t = {}
        for k, c in enumerate(f.coeffs):
            if c:
                e = [0] * nvars
                e[i] = k
                t[tuple(e)] = c
        return cls(nvars, t)

    def format(self, names):
        if not self.terms:
            return "0"
        parts = []
        for e, c in sorted(self.terms.items(), key=lambda t: (-sum(t[0]), t[0])):
            mon = "*".join(
                (names[i] if k == 1 else "%s^%d" % (names[i], k))
                for i, k in enumerate(e) if k)
            if not mon:
                parts.append(str(c))
            elif c == 1:
                parts.append(mon)
            elif c == -1:
                parts.append("-" + mon)
            else:
                parts.append("%s*%s" % (c, mon))
        out = parts[0]
        for t in parts[1:]:
            out += " - " + t[1:] if t.startswith("-") else " + " + t
        return out

    def __repr__(self):
        return "MultiPoly(%s)" % self.format(["v%d" % i for i in range(self.nvars)])


def _inv_pow(v, k):
    if isinstance(v, Fraction) or isinstance(v, int):
        return Fraction(1, 1) / Fraction(v) ** k
    return v.inverse() ** k
