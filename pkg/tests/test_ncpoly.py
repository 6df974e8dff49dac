
import pytest
from hypothesis import given, strategies as st

from cdindex.ncpoly import (
    NCPoly,
    NotCDExpressible,
    ab_to_cd,
    cd_to_ab,
    cd_words,
    comodule_rho,
    coproduct,
    coproduct_word,
    counit,
    format_poly,
    mixed_words,
    mul_words,
    parse,
    prime,
    primed_part,
    specialize,
    swap_ab,
    to_cd,
    unprime,
    unprimed_part,
    word_degree,
)

from oracles import dense_ab_to_cd

cd_word = st.integers(0, 6).flatmap(lambda n: st.sampled_from(cd_words(n)))
coeff = st.one_of(st.integers(-5, 5), st.fractions(min_value=-8, max_value=8, max_denominator=4))
cd_poly = st.dictionaries(cd_word, coeff, max_size=5).map(NCPoly)
mixed_word = st.integers(0, 5).flatmap(lambda n: st.sampled_from(mixed_words(n)))
mixed_poly = st.dictionaries(mixed_word, st.integers(-4, 4), max_size=5).map(NCPoly)


def test_degrees():
    assert word_degree("cd") == 3
    assert word_degree("CDe") == 2
    assert word_degree("") == 0


def test_primed_split():
    assert primed_part("CDcd") == "CD"
    assert unprimed_part("CDcd") == "cd"
    assert unprimed_part("De") == "e"


def test_e_multiplication():
    assert mul_words("D", "e") == "De"
    assert mul_words("e", "c") is None
    # primed and unprimed letters commute; primed ones are kept on the left
    assert mul_words("c", "D") == "Dc"
    assert mul_words("", "e") == "e"


@pytest.mark.parametrize("text", ["c^2 + d", "c^2 + d + 3*d' + 5*c'd'e + d'c'e", "0", "1", "-2*cd + 1/2*dc", "e"])
def test_format_parse_roundtrip(text):
    assert format_poly(parse(text)) == text


@given(mixed_poly)
def test_parse_inverts_format(p):
    assert parse(format_poly(p)) == p


def test_canonical_order():
    # degree first, then primed degree, then c < d lexicographically
    assert format_poly(parse("dc + cd + c^3 + d'c")) == "c^3 + cd + dc + d'c"


@given(cd_poly, cd_poly, cd_poly)
def test_ring_axioms(p, q, r):
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p - p == NCPoly.zero()


@pytest.mark.parametrize("n", range(0, 7))
def test_ab_to_cd_matches_dense_solve(n):
    for w in cd_words(n):
        ab = cd_to_ab(NCPoly.word(w))
        f, g, e = ab_to_cd(ab)
        assert f == NCPoly.word(w) and not g and not e
        assert dense_ab_to_cd(ab, n) == NCPoly.word(w)


@given(cd_poly)
def test_cd_roundtrip(p):
    assert to_cd(cd_to_ab(p)) == p


def test_non_cd_raises():
    with pytest.raises(NotCDExpressible):
        to_cd(parse("ab"))
    with pytest.raises(NotCDExpressible):
        ab_to_cd(parse("a^2 - b^2"))


def test_trailing_a_part():
    # Psi = f + g*a for near-Eulerian posets
    f, g, e = ab_to_cd(parse("a"))
    assert not f and g == NCPoly.one() and not e
    f, g, e = ab_to_cd(parse("a^2 + ba") + cd_to_ab(parse("d")))
    assert f == parse("d") and g == parse("c")


@given(cd_poly)
def test_cd_polys_are_swap_invariant(p):
    ab = cd_to_ab(p)
    assert swap_ab(ab) == ab


def _delta(p):
    return coproduct(p)


def _id_tensor_delta(t, i):
    return t.map_factor(i, lambda w: coproduct_word(w))


@pytest.mark.parametrize("n", range(0, 7))
def test_coassociativity_exhaustive(n):
    for w in cd_words(n):
        D = coproduct_word(w)
        assert _id_tensor_delta(D, 0) == _id_tensor_delta(D, 1)


@pytest.mark.parametrize("n", range(0, 7))
def test_counit_exhaustive(n):
    for w in cd_words(n):
        D = coproduct_word(w)
        left = D.map_factor(0, lambda u: 1 if u == "e" else 0)
        right = D.map_factor(1, lambda u: 1 if u == "e" else 0)
        assert left.as_poly() == NCPoly.word(w) == right.as_poly()


@pytest.mark.parametrize("n", range(1, 7))
def test_cd_coproduct_matches_ab_level(n):
    for w in cd_words(n):
        cd_side = coproduct_word(w).map_factor(0, lambda u: cd_to_ab(NCPoly.word(u))).map_factor(
            1, lambda u: cd_to_ab(NCPoly.word(u))
        )
        ab_side = coproduct(cd_to_ab(NCPoly.word(w)))
        assert cd_side == ab_side


def test_coproduct_small():
    D = coproduct_word("d")
    assert D.terms == {("e", "d"): 1, ("d", "e"): 1, ("c", ""): 1, ("", "c"): 1}
    assert counit(parse("e + 3*c")) == 1


def _rho_word(w):
    return comodule_rho(NCPoly.word(w))


@pytest.mark.parametrize("total", range(0, 7))
def test_comodule_axioms_exhaustive(total):
    for w in mixed_words(total):
        R = _rho_word(w)
        assert R.map_factor(0, _rho_word) == R.map_factor(1, coproduct_word)
        assert R.map_factor(1, lambda u: 1 if u == "e" else 0).as_poly() == NCPoly.word(w)


def test_specialize():
    om = parse("c^2 + d + 3*d' + 5*c'd'e + d'c'e")
    assert specialize(om, {"c'": parse("c"), "d'": parse("d"), "e": 1}) == parse("c^2 + 4*d + 5*cd + dc")
    assert specialize(om, {"c'": 0, "d'": 0, "e": 1}) == parse("c^2 + d")


@given(cd_poly)
def test_prime_unprime(p):
    assert unprime(prime(p)) == p
    assert all(w.isupper() or w == "" for w in prime(p).terms)


def test_mixed_word_counts():
    assert "De" in mixed_words(1)
    assert "Ce" in mixed_words(0)
    assert sum(len(mixed_words(t)) for t in range(7)) == len({w for t in range(7) for w in mixed_words(t)})
