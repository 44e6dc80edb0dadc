from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from charzeta.multipoly import MultiPoly
from charzeta.presentation import Word, parse_presentation
from charzeta.traces import (char_ideal, reducibility_locus, riley_ideal,
                             trace_polynomial, word_matrix)

x_poly = MultiPoly.var(3, 0)
y_poly = MultiPoly.var(3, 1)
z_poly = MultiPoly.var(3, 2)

words = st.lists(st.sampled_from([1, -1, 2, -2]), min_size=0, max_size=8)


def test_base_traces():
    assert trace_polynomial(Word([])) == MultiPoly.const(3, 2)
    assert trace_polynomial(Word([1])) == x_poly
    assert trace_polynomial(Word([2])) == y_poly
    assert trace_polynomial(Word([1, 2])) == z_poly
    assert trace_polynomial(Word([-1])) == x_poly           # tr g = tr g^-1
    assert trace_polynomial(Word([1, -2])) == x_poly * y_poly - z_poly


def test_commutator_trace_is_kappa_plus_two():
    comm = Word([1, 2, -1, -2])
    assert trace_polynomial(comm) == reducibility_locus() + 2


@given(words)
@settings(max_examples=80, deadline=None)
def test_trace_invariant_under_inversion_and_conjugation(letters):
    w = Word(letters)
    t = trace_polynomial(w)
    assert trace_polynomial(w.inverse()) == t
    conj = Word([1]).concat(w).concat(Word([-1]))
    assert trace_polynomial(conj) == t


@given(words, words)
@settings(max_examples=60, deadline=None)
def test_fricke_identity(u_letters, v_letters):
    u, v = Word(u_letters), Word(v_letters)
    lhs = trace_polynomial(u.concat(v)) + trace_polynomial(u.concat(v.inverse()))
    assert lhs == trace_polynomial(u) * trace_polynomial(v)


# -- exact matrix oracle -------------------------------------------------------

def _mat_mul_q(A, B):
    return tuple(tuple(sum(A[i][k] * B[k][j] for k in range(2))
                       for j in range(2)) for i in range(2))


def _word_product(letters, A, B, Ainv, Binv):
    M = ((Fraction(1), Fraction(0)), (Fraction(0), Fraction(1)))
    table = {1: A, -1: Ainv, 2: B, -2: Binv}
    for l in letters:
        M = _mat_mul_q(M, table[l])
    return M


def _sl2_pair(s, t, u):
    """An exact SL2(Q) pair built from elementary matrices."""
    E = lambda v: ((Fraction(1), Fraction(v)), (Fraction(0), Fraction(1)))
    F = lambda v: ((Fraction(1), Fraction(0)), (Fraction(v), Fraction(1)))
    A = _mat_mul_q(E(s), F(t))
    B = _mat_mul_q(F(u), E(s - t))
    inv = lambda M: ((M[1][1], -M[0][1]), (-M[1][0], M[0][0]))
    return A, B, inv(A), inv(B)


@given(words, st.integers(-3, 3), st.integers(-3, 3), st.integers(-3, 3))
@settings(max_examples=120, deadline=None)
def test_trace_polynomial_matches_matrix_oracle(letters, s, t, u):
    A, B, Ainv, Binv = _sl2_pair(s, t, u)
    M = _word_product(letters, A, B, Ainv, Binv)
    AB = _mat_mul_q(A, B)
    coords = [A[0][0] + A[1][1], B[0][0] + B[1][1], AB[0][0] + AB[1][1]]
    assert trace_polynomial(Word(letters)).evaluate(coords) == M[0][0] + M[1][1]


def test_char_ideal_shape():
    pres = parse_presentation("gens: a b; rels: ababaBa^2B, bababAb^2A")
    ideal = char_ideal(pres)
    assert len(ideal.generators) == 6    # three per relator
    with pytest.raises(ValueError):
        char_ideal(parse_presentation("gens: a b c; rels: abc"))


def test_word_matrix_has_determinant_one():
    for letters in [(1,), (2,), (1, 2, -1, -2), (1, 1, 2, -1, 2, 2)]:
        M = word_matrix(Word(letters))
        det = M[0][0] * M[1][1] - M[0][1] * M[1][0]
        assert det == MultiPoly.const(3, 1)


def test_word_matrix_trace_matches_trace_polynomial():
    # substitute an explicit Riley-form representation and compare traces
    x0, y0, r0 = Fraction(3), Fraction(5, 2), Fraction(-2)
    vals = [x0, y0, r0]
    tr_a = x0 + 1 / x0
    tr_b = y0 + 1 / y0
    tr_ab = x0 * y0 + r0 + 1 / (x0 * y0)
    for letters in [(1, 2), (1, 2, -1, -2), (2, 1, 1, -2), (1, 2, 2, 1, 2)]:
        M = word_matrix(Word(letters))
        got = (M[0][0] + M[1][1]).evaluate(vals)
        want = trace_polynomial(Word(letters)).evaluate([tr_a, tr_b, tr_ab])
        assert got == want


def test_riley_ideal_vanishes_on_representation():
    # relator a^4: rho(a)^4 = I forces x^4 = 1 in the Riley form; substituting
    # a genuine solution must kill every generator of the ideal
    pres = parse_presentation("gens: a b; rels: abAB")
    ideal = riley_ideal(pres)
    # y = 1, r = 0 makes rho(b) the identity, so [a, b] = 1 holds
    for gen in ideal.generators:
        assert gen.evaluate([Fraction(2), Fraction(1), Fraction(0)]) == 0
    # and a representation violating the relator leaves some generator nonzero
    assert any(gen.evaluate([Fraction(2), Fraction(3), Fraction(1)]) != 0
               for gen in ideal.generators)
