import pytest

from cdindex import corpus
from cdindex.indices import mixed_cd_index
from cdindex.poset import is_near_eulerian, isomorphic
from cdindex.verify import subdivision_counts

SEQS = corpus.polygon_sequences()


def test_corpus_sizes():
    assert len(corpus.sfs_corpus()) >= 25
    assert len(SEQS) >= 5
    assert len(corpus.negative_maps()) >= 3
    assert len(corpus.single_polygon_cuts()) == sum(n + n * (n - 1) // 2 for n in range(3, 7))
    names = [n for n, _ in corpus.sfs_corpus()]
    assert len(names) == len(set(names))


@pytest.mark.parametrize("seq", SEQS, ids=[s.name for s in SEQS])
def test_cut_sequences_match_cell_complexes(seq):
    phi, oracle = corpus.composite(seq), corpus.cell_map(seq)
    assert isomorphic(phi.source, oracle.source)
    assert phi.target.same_as(oracle.target)
    assert subdivision_counts(phi) == subdivision_counts(oracle)
    assert mixed_cd_index(phi) == mixed_cd_index(oracle)


def test_cube_triangulation_shape():
    phi = corpus.cube_triangulation()
    G = phi.source
    assert G.f_vector() == [1, 8, 18, 16, 5]
    # every vertex is a cube vertex; the 6 square diagonals lie in the squares
    assert all(phi(v) == v for v in G.of_rank(1))
    assert subdivision_counts(phi) == {"beta": 0, "gamma": 0, "epsilon": 6}


def test_bipyramid_shape():
    phi = corpus.bipyramid()
    assert phi.source.f_vector() == [1, 5, 9, 6, 1]
    assert subdivision_counts(phi) == {"beta": 0, "gamma": 1, "epsilon": 3}


def test_near_eulerian_maps():
    for name, sigma in corpus.near_eulerian_maps():
        assert is_near_eulerian(sigma.source) and is_near_eulerian(sigma.target), name
