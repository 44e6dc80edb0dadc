import pytest
from hypothesis import given, settings, strategies as st

from charzeta.presentation import (ParseError, Word, abelianization,
                                   count_c2_homs_brute, parse_presentation,
                                   parse_word, smith_normal_form)


def test_parse_word_basics():
    gens = ["a", "b"]
    assert parse_word("abAB", gens).letters == (1, 2, -1, -2)
    assert parse_word("a^3", gens).letters == (1, 1, 1)
    assert parse_word("a^-2", gens).letters == (-1, -1)
    assert parse_word("b^0 a", gens).letters == (1,)
    assert parse_word("aA", gens).letters == ()      # free reduction
    assert parse_word("a b", gens).letters == (1, 2)


def test_parse_word_errors():
    with pytest.raises(ParseError):
        parse_word("ac", ["a", "b"])
    with pytest.raises(ParseError):
        parse_word("a^", ["a", "b"])
    with pytest.raises(ParseError):
        parse_word("^2", ["a", "b"])


def test_word_operations():
    w = Word([1, 2, -1])
    assert w.inverse().letters == (1, -2, -1)
    assert w.concat(w.inverse()).letters == ()
    assert Word([-1, 2, 2, 1]).cyclic_reduce().letters == (2, 2)
    assert Word([1, 2, -1, -2]).exponent_sums(2) == [0, 0]
    assert w.text(["a", "b"]) == "abA"


def test_parse_presentation():
    pres = parse_presentation("gens: a b; rels: abAB, a^5")
    assert pres.generators == ["a", "b"]
    assert len(pres.relators) == 2
    for bad in ["rels: ab", "gens: ; rels: a", "gens: a b; rels: ",
                "gens: ab; rels: a", "gens: a b; rels: aA"]:
        with pytest.raises(ParseError):
            parse_presentation(bad)


int_matrix = st.lists(
    st.lists(st.integers(-9, 9), min_size=1, max_size=4),
    min_size=1, max_size=4,
).filter(lambda rows: len({len(r) for r in rows}) == 1)


def _det(mat):
    n = len(mat)
    if n == 1:
        return mat[0][0]
    return sum((-1) ** j * mat[0][j] *
               _det([row[:j] + row[j + 1:] for row in mat[1:]])
               for j in range(n))


def _matmul(a, b):
    return [[sum(x * y for x, y in zip(row, col)) for col in zip(*b)]
            for row in a]


@given(int_matrix)
@settings(max_examples=60, deadline=None)
def test_smith_normal_form_properties(mat):
    U, S, V = smith_normal_form(mat)
    m, n = len(mat), len(mat[0])
    assert _matmul(_matmul(U, mat), V) == S
    assert abs(_det(U)) == 1 and abs(_det(V)) == 1
    diag = [S[i][i] for i in range(min(m, n))]
    for i in range(m):
        for j in range(n):
            if i != j:
                assert S[i][j] == 0
    for d, e in zip(diag, diag[1:]):
        assert d >= 0
        if d:
            assert e % d == 0


def test_abelianization_examples():
    # Z/5 x Z/5
    pres = parse_presentation("gens: a b; rels: a^5, b^5, abAB")
    ab = abelianization(pres)
    assert ab.invariant_factors == [5, 5]
    assert ab.h1_c2_order == 1
    # free group of rank 2
    free = abelianization(parse_presentation("gens: a b; rels: abAB"))
    assert free.invariant_factors == [0, 0]
    assert free.h1_c2_order == 4
    # Z/12 = Z/4 x Z/3 has one even invariant factor
    tw = abelianization(parse_presentation("gens: a b; rels: a^4b^6, a^2B"))
    assert tw.h1_c2_order == 2


def test_c2_hom_count_matches_brute_force():
    texts = [
        "gens: a b; rels: a^5, b^5, abAB",
        "gens: a b; rels: abAB",
        "gens: a b; rels: a^4b^6, a^2B",
        "gens: a b; rels: ababaBa^2B, bababAb^2A",
        "gens: a b; rels: aBa^3Babab, ab^2A^2b^2aB",
    ]
    for text in texts:
        pres = parse_presentation(text)
        assert abelianization(pres).h1_c2_order == count_c2_homs_brute(pres)
