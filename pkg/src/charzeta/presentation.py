"""Group presentations: parsing, free-word reduction, abelianization via
integer Smith normal form, and #H^1(pi, C_2).

Word letters are nonzero ints: +k is the k-th generator (1-based), -k its
inverse.
"""

import re


class ParseError(ValueError):
    def __init__(self, message, position=None):
        self.position = position
        super().__init__(message if position is None
                         else "%s (at position %d)" % (message, position))


class Word:
    """Free-group word over a generator list; stored reduced."""

    __slots__ = ("letters",)

    def __init__(self, letters, reduce=True):
        letters = list(letters)
        if reduce:
            letters = _free_reduce(letters)
        self.letters = tuple(letters)

    def __len__(self):
        return len(self.letters)

    def __eq__(self, other):
        return isinstance(other, Word) and self.letters == other.letters

    def __hash__(self):
        return hash(self.letters)

    def inverse(self):
        return Word([-l for l in reversed(self.letters)], reduce=False)

    def concat(self, other):
        return Word(self.letters + other.letters)

    def cyclic_reduce(self):
        ls = list(self.letters)
        while len(ls) >= 2 and ls[0] == -ls[-1]:
            ls = ls[1:-1]
        return Word(ls, reduce=False)

    def max_generator(self):
        return max((abs(l) for l in self.letters), default=0)

    def exponent_sums(self, ngens):
        out = [0] * ngens
        for l in self.letters:
            out[abs(l) - 1] += 1 if l > 0 else -1
        return out

    def text(self, generators):
        out = []
        for l in self.letters:
            name = generators[abs(l) - 1]
            out.append(name if l > 0 else name.upper())
        return "".join(out)

    def __repr__(self):
        return "Word(%s)" % (self.letters,)


def _free_reduce(letters):
    out = []
    for l in letters:
        if out and out[-1] == -l:
            out.pop()
        else:
            out.append(l)
    return out


def word_reduce(w):
    return Word(w.letters)


def word_inverse(w):
    return w.inverse()


def word_concat(u, v):
    return u.concat(v)


class GroupPresentation:
    def __init__(self, generators, relators):
        self.generators = list(generators)
        self.relators = list(relators)
        for r in self.relators:
            if r.max_generator() > len(self.generators):
                raise ParseError("relator uses an undeclared generator")

    def __repr__(self):
        return "GroupPresentation(%s | %s)" % (
            " ".join(self.generators),
            ", ".join(r.text(self.generators) for r in self.relators))

    def text(self):
        return "gens: %s; rels: %s" % (
            " ".join(self.generators),
            ", ".join(r.text(self.generators) for r in self.relators))


def parse_word(text, generators, offset=0):
    """A word over the generators: lowercase = generator, uppercase = inverse,
    x^k repeats the preceding letter k times."""
    gen_index = {g: i + 1 for i, g in enumerate(generators)}
    letters = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch == "^":
            j = i + 1
            if j < len(text) and text[j] in "+-":
                j += 1
            k = j
            while k < len(text) and text[k].isdigit():
                k += 1
            if k == j:
                raise ParseError("malformed exponent", offset + i)
            if not letters:
                raise ParseError("exponent with nothing to repeat", offset + i)
            e = int(text[i + 1:k])
            last = letters[-1]
            if e == 0:
                letters.pop()
            elif e > 0:
                letters.extend([last] * (e - 1))
            else:
                letters.pop()
                letters.extend([-last] * (-e))
            i = k
            continue
        low = ch.lower()
        if low not in gen_index:
            raise ParseError("unknown symbol %r" % ch, offset + i)
        idx = gen_index[low]
        letters.append(idx if ch.islower() else -idx)
        i += 1
    return Word(letters)


def parse_presentation(text):
    """Parse `gens: a b; rels: w1, w2` (whitespace insensitive)."""
    m = re.match(r"\s*gens\s*:\s*(.*?)\s*;\s*rels\s*:\s*(.*)\s*$",
                 text, re.DOTALL)
    if not m:
        raise ParseError("expected 'gens: ... ; rels: ...'")
    gens = m.group(1).split()
    if not gens:
        raise ParseError("no generators declared")
    for g in gens:
        if not (len(g) == 1 and g.isalpha() and g.islower()):
            raise ParseError("generator names must be single lowercase letters: %r" % g)
    rel_text = m.group(2).strip()
    if not rel_text:
        raise ParseError("empty relator list")
    relators = []
    base = m.start(2)
    for chunk in rel_text.split(","):
        w = parse_word(chunk.strip(), gens, offset=base)
        if len(w) == 0:
            raise ParseError("trivial relator (reduces to the empty word)")
        relators.append(w)
    return GroupPresentation(gens, relators)


# -- Smith normal form ---------------------------------------------------------

def smith_normal_form(matrix):
    """(U, S, V) with U*M*V = S diagonal, U, V unimodular, and the diagonal
    nonnegative with the divisibility chain d1 | d2 | ...

    Plain integer row/column reduction; fine at presentation scale.
    """
    m = len(matrix)
    n = len(matrix[0]) if m else 0
    S = [list(row) for row in matrix]
    U = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
    V = [[1 if i == j else 0 for j in range(n)] for i in range(n)]

    def row_op(i, j, q):        # row_i -= q*row_j
        S[i] = [a - q * b for a, b in zip(S[i], S[j])]
        U[i] = [a - q * b for a, b in zip(U[i], U[j])]

    def col_op(i, j, q):        # col_i -= q*col_j
        for r in range(m):
            S[r][i] -= q * S[r][j]
        for r in range(n):
            V[r][i] -= q * V[r][j]

    def swap_rows(i, j):
        S[i], S[j] = S[j], S[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for r in range(m):
            S[r][i], S[r][j] = S[r][j], S[r][i]
        for r in range(n):
            V[r][i], V[r][j] = V[r][j], V[r][i]

    t = 0
    while t < min(m, n):
        # find pivot: entry of smallest nonzero magnitude in S[t:, t:]
        piv = None
        for i in range(t, m):
            for j in range(t, n):
                if S[i][j] and (piv is None or abs(S[i][j]) < abs(S[piv[0]][piv[1]])):
                    piv = (i, j)
        if piv is None:
            break
        swap_rows(t, piv[0])
        swap_cols(t, piv[1])
        done = False
        while not done:
            done = True
            for i in range(t + 1, m):
                if S[i][t]:
                    q = S[i][t] // S[t][t]
                    row_op(i, t, q)
                    if S[i][t]:
                        swap_rows(t, i)
                        done = False
            for j in range(t + 1, n):
                if S[t][j]:
                    q = S[t][j] // S[t][t]
                    col_op(j, t, q)
                    if S[t][j]:
                        swap_cols(t, j)
                        done = False
        # divisibility: fold any non-multiple entry into column t
        bad = None
        for i in range(t + 1, m):
            for j in range(t + 1, n):
                if S[i][j] % S[t][t]:
                    bad = i
                    break
            if bad is not None:
                break
        if bad is not None:
            row_op(t, bad, -1)      # adds row `bad` into row t
            continue
        if S[t][t] < 0:
            S[t] = [-v for v in S[t]]
            U[t] = [-v for v in U[t]]
        t += 1
    return U, S, V


class AbelianizationResult:
    def __init__(self, invariant_factors, h1_c2_order):
        self.invariant_factors = invariant_factors
        self.h1_c2_order = h1_c2_order

    def __repr__(self):
        return "AbelianizationResult(factors=%s, h1_c2_order=%d)" % (
            self.invariant_factors, self.h1_c2_order)


def abelianization(pres):
    """Invariant factors of the abelianized group and #Hom(pi, C_2).

    The abelianization is the cokernel of the relator exponent-sum matrix;
    0 encodes a free Z factor.  #Hom(pi, C_2) = 2^(number of invariant
    factors that are even or zero).
    """
    ngens = len(pres.generators)
    rows = [r.exponent_sums(ngens) for r in pres.relators]
    if not rows:
        rows = [[0] * ngens]
    _, S, _ = smith_normal_form(rows)
    diag = [S[i][i] for i in range(min(len(S), ngens))]
    nontrivial = [d for d in diag if d not in (0, 1)]
    rank = ngens - sum(1 for d in diag if d != 0)
    factors = nontrivial + [0] * rank
    h1 = 2 ** sum(1 for d in factors if d == 0 or d % 2 == 0)
    return AbelianizationResult(factors, h1)


def count_c2_homs_brute(pres):
    """#Hom(pi, C_2) by enumerating sign assignments on generators."""
    from itertools import product
    ngens = len(pres.generators)
    count = 0
    for signs in product((1, -1), repeat=ngens):
        ok = True
        for r in pres.relators:
            v = 1
            for l in r.letters:
                v *= signs[abs(l) - 1]
            if v != 1:
                ok = False
                break
        if ok:
            count += 1
    return count
