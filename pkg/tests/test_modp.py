from hypothesis import given, settings, strategies as st

from charzeta import modp
from charzeta.modp import (FF, count_roots_in_extension, eval_unipoly_ff,
                           factor_mod_p, find_irreducible, from_unipoly,
                           is_irreducible_fp, pmul, to_unipoly)
from charzeta.unipoly import UniPoly

H = UniPoly([-1, -1, 0, 1])     # T^3 - T - 1


def test_splitting_patterns_of_cubic():
    assert [(g.degree, m) for g, m in factor_mod_p(H, 2)] == [(3, 1)]
    assert sorted((g.degree, m) for g, m in factor_mod_p(H, 5)) == [(1, 1), (2, 1)]
    assert sorted((g.degree, m) for g, m in factor_mod_p(H, 7)) == [(1, 1), (2, 1)]
    # ramified at the discriminant prime
    assert sorted((g.degree, m) for g, m in factor_mod_p(H, 23)) == [(1, 1), (1, 2)]


def test_factorization_multiplies_back():
    for p in (2, 3, 5, 7, 11, 13, 23, 97):
        prod = [1]
        for g, m in factor_mod_p(H, p):
            for _ in range(m):
                prod = pmul(prod, [int(c) % p for c in g.coeffs], p)
        assert to_unipoly(prod) == to_unipoly(from_unipoly(H, p))


def test_repeated_factor_and_frobenius_power():
    # x^p - x = prod of all linear polys mod p
    p = 5
    f = [0, p - 1] + [0] * (p - 2) + [1]
    factors = factor_mod_p(to_unipoly(f), p)
    assert sorted(g.coeffs[0] for g, _ in factors) == [0, 1, 2, 3, 4]
    # squarefree decomposition must handle h(x^p)
    g = to_unipoly([1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1])   # (1+x+x^2)^5 mod 5
    fac = factor_mod_p(g, 5)
    assert all(m % 5 == 0 for _, m in fac)


def test_rabin_irreducibility():
    assert is_irreducible_fp([1, 1, 0, 1], 2)             # x^3 + x + 1
    assert not is_irreducible_fp([1, 0, 1], 2)            # (x+1)^2
    assert is_irreducible_fp(find_irreducible(7, 4), 7)


def test_roots_in_extension_match_brute_force():
    for p in (2, 3, 5):
        for n in (1, 2, 3):
            field = FF(p, n)
            brute = sum(1 for a in field.elements()
                        if eval_unipoly_ff(H, a).is_zero())
            assert count_roots_in_extension(from_unipoly(H, p), p, n) == brute


def test_spec_count_examples():
    hp = from_unipoly(H, 5)
    assert [count_roots_in_extension(hp, 5, n) for n in (1, 2, 3, 4)] == [1, 3, 1, 3]
    hp2 = from_unipoly(H, 2)
    assert [count_roots_in_extension(hp2, 2, n) for n in (1, 2, 3)] == [0, 0, 3]


def test_ff_axioms():
    field = FF(3, 2)
    elems = list(field.elements())
    assert len(elems) == 9
    for a in elems:
        assert (a + field.zero()).value == a.value
        if not a.is_zero():
            assert (a * a.inverse()) == field.one()
        # Frobenius: a^(p^n) = a
        assert a ** 9 == a


def test_determinism_with_seed():
    a = factor_mod_p(H, 101, seed=1)
    b = factor_mod_p(H, 101, seed=1)
    assert a == b
    modp.DEFAULT_SEED = 0
    assert factor_mod_p(H, 101) == factor_mod_p(H, 101)


@given(st.integers(0, 2), st.lists(st.integers(0, 6), min_size=2, max_size=7))
@settings(max_examples=40, deadline=None)
def test_random_factorization_consistent(pidx, coeffs):
    p = (3, 5, 7)[pidx]
    f = to_unipoly([c % p for c in coeffs])
    if f.degree < 1:
        return
    prod = [1]
    total = 0
    for g, m in factor_mod_p(f, p):
        total += g.degree * m
        for _ in range(m):
            prod = pmul(prod, [int(c) % p for c in g.coeffs], p)
    assert total == f.degree
    monic = from_unipoly(f.monic(), p)
    assert to_unipoly(prod) == to_unipoly(monic)
