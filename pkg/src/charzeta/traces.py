"""Trace polynomials of words in SL2 and the character/representation ideals.

Coordinates are x = tr(a), y = tr(b), z = tr(ab).  The engine rewrites any
word over {a, b} into these through the Cayley-Hamilton trace relations

    tr(uv) + tr(u v^-1) = tr(u) tr(v),        tr(w) = tr(w^-1),

memoizing on the cyclic-reduction class (traces are conjugation invariant).
"""

from fractions import Fraction

from .multipoly import MultiPoly
from .presentation import Word

X, Y, Z = 0, 1, 2
VARNAMES = ("x", "y", "z")


def _mp(terms):
    return MultiPoly(3, terms)


_BASE = {
    (): _mp({(0, 0, 0): 2}),
    (1,): _mp({(1, 0, 0): 1}),
    (2,): _mp({(0, 1, 0): 1}),
    (1, 2): _mp({(0, 0, 1): 1}),
    (2, 1): _mp({(0, 0, 1): 1}),
}


def _canonical_cyclic(letters):
    """Canonical representative of the conjugation + inversion class."""
    if not letters:
        return ()
    best = None
    for seq in (letters, tuple(-l for l in reversed(letters))):
        for i in range(len(seq)):
            rot = seq[i:] + seq[:i]
            if best is None or rot < best:
                best = rot
    return best


def _cyclic_reduce(letters):
    ls = list(letters)
    changed = True
    while changed and ls:
        changed = False
        # free reduction
        out = []
        for l in ls:
            if out and out[-1] == -l:
                out.pop()
                changed = True
            else:
                out.append(l)
        ls = out
        while len(ls) >= 2 and ls[0] == -ls[-1]:
            ls = ls[1:-1]
            changed = True
    return tuple(ls)


class TraceCalculus:
    """Memoized trace-polynomial computation for a fixed two-generator group."""

    def __init__(self):
        self.memo = {}

    def trace(self, word):
        """Trace polynomial in Q[x, y, z] of a Word over two generators."""
        if isinstance(word, Word):
            if word.max_generator() > 2:
                raise ValueError("trace coordinates support exactly 2 generators")
            letters = word.letters
        else:
            letters = tuple(word)
        return self._trace(_cyclic_reduce(letters))

    def _trace(self, letters):
        key = _canonical_cyclic(letters)
        if key in self.memo:
            return self.memo[key]
        result = self._compute(key)
        self.memo[key] = result
        return result

    def _compute(self, letters):
        letters = _cyclic_reduce(letters)
        if letters in _BASE:
            return _BASE[letters]
        # work on the representative with the fewest inverse letters, so the
        # inverse-elimination step is strictly decreasing (tr w = tr w^-1)
        nneg = sum(1 for l in letters if l < 0)
        if 2 * nneg > len(letters):
            letters = tuple(-l for l in reversed(letters))
        if letters in _BASE:
            return _BASE[letters]
        n = len(letters)
        # single-generator power: Chebyshev-like recursion (tr g = tr g^-1)
        if all(l == letters[0] for l in letters):
            t = _BASE[(abs(letters[0]),)]
            return _power_trace(t, n)
        # eliminate an inverse letter: rotate it to the end, then
        # tr(m g^-1) = tr(m) tr(g) - tr(m g)
        neg = next((i for i, l in enumerate(letters) if l < 0), None)
        if neg is not None:
            rot = letters[neg + 1:] + letters[:neg + 1]
            m, ginv = rot[:-1], rot[-1]
            g = (-ginv,)
            return (self._trace(m) * self._trace(g)
                    - self._trace(m + g))
        # positive word: find a cyclically adjacent repeated letter g g m
        for i in range(n):
            if letters[i] == letters[(i + 1) % n]:
                rot = letters[i:] + letters[:i]
                # tr(g (g m)) = tr(g) tr(g m) - tr(m)
                return (self._trace((rot[0],)) * self._trace(rot[1:])
                        - self._trace(rot[2:]))
        # alternating positive word (abab...): power of ab
        half = n // 2
        t = self._trace(letters[:2])
        return _power_trace(t, half)


def _power_trace(t, k):
    """tr(g^k) as a polynomial in t = tr(g): T_0 = 2, T_1 = t,
    T_k = t*T_{k-1} - T_{k-2}."""
    two = MultiPoly.const(3, 2)
    if k == 0:
        return two
    prev, cur = two, t
    for _ in range(k - 1):
        prev, cur = cur, t * cur - prev
    return cur


_calc = TraceCalculus()


def trace_polynomial(word):
    """Module-level memoized trace polynomial (pure, deterministic)."""
    return _calc.trace(word)


def reducibility_locus():
    """kappa = x^2 + y^2 + z^2 - x*y*z - 4 = tr([a,b]) - 2.

    A character with kappa != 0 is irreducible.
    """
    return _mp({(2, 0, 0): 1, (0, 2, 0): 1, (0, 0, 2): 1,
                (1, 1, 1): -1, (0, 0, 0): -4})


class CharIdeal:
    def __init__(self, generators, source):
        self.generators = generators
        self.source = source


def char_ideal(pres):
    """Defining ideal of the SL2 character variety in (x, y, z).

    Per relator w: tr(w) - 2, tr(wa) - x, tr(wb) - y.
    """
    if len(pres.generators) != 2:
        raise ValueError("trace coordinates support exactly 2 generators")
    gens = []
    x = MultiPoly.var(3, X)
    y = MultiPoly.var(3, Y)
    for w in pres.relators:
        gens.append(trace_polynomial(w) - 2)
        gens.append(trace_polynomial(w.concat(Word([1]))) - x)
        gens.append(trace_polynomial(w.concat(Word([2]))) - y)
    return CharIdeal(gens, pres)


# -- Riley-form representation ideal -------------------------------------------
#
# rho(a) = [[x, 1], [0, 1/x]],  rho(b) = [[y, 0], [r, 1/y]].
# Matrix entries live in Q[x, 1/x, y, 1/y, r]; we track them as Laurent
# MultiPoly in (x, y, r) and clear denominators per relator entry.

RILEY_VARS = ("x", "y", "r")


def _laurent_var(i, power=1):
    e = [0, 0, 0]
    e[i] = power
    return MultiPoly(3, {tuple(e): Fraction(1)})


def _riley_matrices():
    one = MultiPoly.const(3, 1)
    zero = MultiPoly.zero(3)
    x, xinv = _laurent_var(0, 1), _laurent_var(0, -1)
    y, yinv = _laurent_var(1, 1), _laurent_var(1, -1)
    r = _laurent_var(2, 1)
    mats = {
        1: ((x, one), (zero, xinv)),
        -1: ((xinv, -one), (zero, x)),
        2: ((y, zero), (r, yinv)),
        -2: ((yinv, zero), (-r, y)),
    }
    return mats


def _mat_mul(A, B):
    return tuple(
        tuple(sum((A[i][k] * B[k][j] for k in range(2)),
                  MultiPoly.zero(3)) for j in range(2))
        for i in range(2))


def word_matrix(word):
    """The 2x2 Laurent-polynomial matrix of a word in Riley form."""
    mats = _riley_matrices()
    one = MultiPoly.const(3, 1)
    zero = MultiPoly.zero(3)
    M = ((one, zero), (zero, one))
    for l in word.letters:
        M = _mat_mul(M, mats[l])
    return M


class RileyIdeal:
    def __init__(self, generators, source):
        self.generators = generators
        self.source = source


def riley_ideal(pres):
    """Entries of rho(w) - I per relator, denominators cleared by monomials
    in x and y; generators are honest polynomials in (x, y, r)."""
    if len(pres.generators) != 2:
        raise ValueError("Riley form supports exactly 2 generators")
    one = MultiPoly.const(3, 1)
    gens = []
    for w in pres.relators:
        M = word_matrix(w)
        delta = [M[0][0] - one, M[0][1], M[1][0], M[1][1] - one]
        for entry in delta:
            if entry.is_zero():
                continue
            cleared = entry.clear_laurent()
            gens.append(cleared)
    return RileyIdeal(gens, pres)
