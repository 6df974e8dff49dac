import pytest
from hypothesis import given

from cdindex import corpus
from cdindex.constructions import boolean, cube_lattice, polygon, pyramid, simplicial_face_poset
from cdindex.indices import (
    NotInScope,
    ab_index,
    bary_local_cd,
    bary_mixed_cd,
    boolean_cd,
    cd_index,
    cd_index_from_ab,
    chain_count,
    flag_enumerator,
    flag_f_vector,
    interval_cd,
    local_cd_index,
    mixed_cd_index,
    pyramid_cd,
    pyramid_cd_of,
)
from cdindex.ncpoly import NCPoly, ab_to_cd, parse, specialize
from cdindex.poset import Poset, boundary, is_eulerian, is_near_eulerian

from oracles import chains_by_rank_set, dense_ab_to_cd
from strategies import complexes, posets


@given(posets)
def test_flag_f_vector_matches_chain_search(P):
    assert flag_f_vector(P) == chains_by_rank_set(P)


@given(posets)
def test_ab_index_is_substituted_flag_enumerator(P):
    assert specialize(flag_enumerator(P), {"a": parse("a - b")}) == ab_index(P)


def test_small_ab_indices():
    # chains in B2 by rank set: {} once, {1} twice, {2} once, {1,2} twice
    assert flag_enumerator(boolean(2)) == parse("a^2 + ab + 2*ba + 2*b^2")
    # with a top, Psi = Psi(boundary) * a, and the boundary of B2 has Psi = c
    assert ab_index(boolean(2)) == parse("a^2 + ba")


@given(posets)
def test_eulerian_cd_index_against_dense_solve(P):
    if not is_eulerian(P) or P.n < 1:
        return
    want = dense_ab_to_cd(ab_index(boundary(P)), P.n - 1) if P.n > 1 else NCPoly.one()
    assert cd_index(P) == want == cd_index_from_ab(P)


@given(complexes)
def test_near_eulerian_local_index_two_ways(P):
    if not is_near_eulerian(P):
        return
    f, g, e = ab_to_cd(ab_index(P))
    assert local_cd_index(P) == f
    assert cd_index(P) == f + g == cd_index_from_ab(P)


@pytest.mark.parametrize(
    "P,want",
    [
        (boolean(1), "1"),
        (boolean(2), "c"),
        (boolean(3), "c^2 + d"),
        (polygon(6), "c^2 + 4*d"),
        (cube_lattice(), "c^3 + 4*cd + 6*dc"),
        (boolean(4), "c^3 + 2*cd + 2*dc"),
    ],
)
def test_fixed_cd_indices(P, want):
    assert cd_index(P) == parse(want)


def test_modes_and_scope():
    pt = Poset(["0"], [])
    assert cd_index(pt) == NCPoly.one()
    assert cd_index(pt, "refined") == NCPoly.word("e")
    chain = Poset(["0", "1", "2"], [("0", "1"), ("1", "2")])
    with pytest.raises(NotInScope):
        cd_index(chain)
    with pytest.raises(NotInScope):
        local_cd_index(simplicial_face_poset([[1, 2, 3], [3, 4, 5]]))


def test_interval_cd_convention():
    B = boolean(3)
    assert interval_cd(B, "1,2,3") == NCPoly.word("e")
    assert interval_cd(B, "1,2") == NCPoly.one()
    assert interval_cd(B, "0") == parse("c^2 + d")


@pytest.mark.parametrize("n", range(0, 7))
def test_boolean_recursion(n):
    assert boolean_cd(n) == cd_index(boolean(n))


@pytest.mark.parametrize("P", [polygon(4), polygon(5), boolean(3), cube_lattice()], ids=["sq", "pent", "tri", "cube"])
def test_pyramid_formula(P):
    assert pyramid_cd_of(P) == cd_index(pyramid(P))


def test_pyramid_rejects_half_integers():
    from cdindex.indices import NonIntegralResult

    with pytest.raises(NonIntegralResult):
        pyramid_cd(parse("c"), [(parse("1"), parse("1"))])


@pytest.mark.parametrize("n", range(1, 5))
def test_chain_counts(n):
    f = flag_f_vector(boolean(n))
    for S, k in f.items():
        T = [r for r in range(1, n) if S >> (r - 1) & 1]
        if S >> (n - 1) & 1:
            assert chain_count(T, n) == k


@pytest.mark.parametrize("n", range(1, 5))
def test_barycentric_recursions(n):
    sigma = corpus.sigma(n)
    assert bary_local_cd(n) == local_cd_index(sigma.source)
    assert bary_mixed_cd(n) == mixed_cd_index(sigma)


def test_known_local_indices():
    assert bary_local_cd(2) == parse("d")
    assert bary_local_cd(3) == parse("5*cd + dc")
    assert bary_local_cd(4) == parse("23*c^2d + 13*cdc + dc^2 + 34*d^2")


@pytest.mark.parametrize("name,phi", corpus.sfs_corpus()[:12], ids=[n for n, _ in corpus.sfs_corpus()[:12]])
def test_mixed_index_is_homogeneous(name, phi):
    om = mixed_cd_index(phi)
    assert om.is_homogeneous()
    assert om.degrees() == {phi.target.n - 1}


def test_eulerian_source_has_no_local_index():
    for name, phi in corpus.sfs_corpus():
        G = phi.source
        if G.top is not None and is_eulerian(G) and G.n > 0:
            assert local_cd_index(G) == 0
