from hypothesis import strategies as st

from cdindex.constructions import boolean, polygon, simplicial_face_poset
from cdindex.poset import add_top

# random simplicial complexes on at most 5 vertices
facet = st.sets(st.integers(1, 5), min_size=1, max_size=4)
complexes = st.lists(facet, min_size=1, max_size=5).map(lambda fs: simplicial_face_poset([sorted(f) for f in fs]))
pure_facets = st.integers(1, 4).flatmap(
    lambda k: st.lists(st.sets(st.integers(1, 5), min_size=k, max_size=k), min_size=1, max_size=5)
)
closed_complexes = pure_facets.map(lambda fs: add_top(simplicial_face_poset([sorted(f) for f in fs])))
small_named = st.one_of(
    st.integers(0, 5).map(boolean),
    st.integers(3, 7).map(polygon),
)
posets = st.one_of(complexes, closed_complexes, small_named)
