"""Fixture corpus: subdivisions used by the tests, scripts and CLI."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import List, Optional, Sequence, Tuple

from .constructions import (
    barycentric,
    boolean,
    carrier_map,
    cube_lattice,
    face_lattice,
    polygon,
    polygonal_complex,
    simplicial_face_poset,
)
from .poset import Poset, add_top, semisuspension
from .posetmap import (
    CutSpec,
    PosetMap,
    build_map,
    compose_all,
    cut,
    enumerate_cuts,
    extension,
    identity_map,
    restrict_above,
    restrict_below,
)


@dataclass(frozen=True)
class CutStep:
    x0: str
    gens1: Tuple[str, ...]
    gens2: Tuple[str, ...]
    names: Tuple[str, str, str]

    def spec(self, P: Poset) -> CutSpec:
        return CutSpec.make(self.x0, P.lower_ideal(self.gens1), P.lower_ideal(self.gens2), self.names)


@dataclass(frozen=True)
class CutSequence:
    name: str
    base: Poset
    steps: Tuple[CutStep, ...]
    cells: Optional[Tuple[Tuple[str, ...], ...]] = None
    carriers: Optional[Tuple[Tuple[str, str], ...]] = None


def run_cuts(base: Poset, steps: Sequence[CutStep]) -> Tuple[List[Poset], List[PosetMap]]:
    """Apply cuts in order; returns the posets (base first) and the single-cut
    maps, each sending a refinement onto the poset before it."""
    posets, maps = [base], []
    for st in steps:
        G, phi = cut(posets[-1], st.spec(posets[-1]))
        posets.append(G)
        maps.append(phi)
    return posets, maps


def composite(seq: CutSequence) -> PosetMap:
    _, maps = run_cuts(seq.base, seq.steps)
    return compose_all(maps[::-1])


def cell_map(seq: CutSequence) -> PosetMap:
    """The same subdivision built from explicit cells and vertex carriers."""
    G = polygonal_complex([list(c) for c in seq.cells])
    return carrier_map(G, seq.base, dict(seq.carriers or ()))


def S(x0, g1, g2, names) -> CutStep:
    return CutStep(x0, tuple(g1), tuple(g2), tuple(names))


@lru_cache(maxsize=None)
def polygon_sequences() -> Tuple[CutSequence, ...]:
    return (
        CutSequence(
            "square: edge point joined to a far vertex",
            polygon(4),
            (
                S("1,2", ["1"], ["2"], ["5", "1,5", "2,5"]),
                S("1,2,3,4", ["2,5", "2,3"], ["1,5", "1,4", "3,4"], ["3,5", "2,3,5", "1,3,4,5"]),
            ),
            (("2", "3", "5"), ("1", "5", "3", "4")),
            (("5", "1,2"),),
        ),
        CutSequence(
            "pentagon: fan of two diagonals",
            polygon(5),
            (
                S("1,2,3,4,5", ["1,2", "2,3"], ["3,4", "4,5", "1,5"], ["1,3", "1,2,3", "1,3,4,5"]),
                S("1,3,4,5", ["1,3", "3,4"], ["4,5", "1,5"], ["1,4", "1,3,4", "1,4,5"]),
            ),
            (("1", "2", "3"), ("1", "3", "4"), ("1", "4", "5")),
            (),
        ),
        CutSequence(
            "hexagon: diagonal with an interior point",
            polygon(6),
            (
                S("1,2,3,4,5,6", ["1,2", "2,3", "3,4"], ["4,5", "5,6", "1,6"], ["1,4", "1,2,3,4", "1,4,5,6"]),
                S("1,4", ["1"], ["4"], ["7", "1,7", "4,7"]),
                S("1,2,3,4", ["1,2", "1,7"], ["2,3", "3,4", "4,7"], ["2,7", "1,2,7", "2,3,4,7"]),
            ),
            (("1", "2", "7"), ("2", "3", "4", "7"), ("4", "5", "6", "1", "7")),
            (("7", "1,2,3,4,5,6"),),
        ),
        CutSequence(
            "square: cone from the centre",
            polygon(4),
            (
                S("1,2,3,4", ["1,2", "2,3"], ["3,4", "1,4"], ["1,3", "1,2,3", "1,3,4"]),
                S("1,3", ["1"], ["3"], ["5", "1,5", "3,5"]),
                S("1,2,3", ["1,2", "1,5"], ["2,3", "3,5"], ["2,5", "1,2,5", "2,3,5"]),
                S("1,3,4", ["1,5", "1,4"], ["3,5", "3,4"], ["4,5", "1,4,5", "3,4,5"]),
            ),
            (("1", "2", "5"), ("2", "3", "5"), ("3", "4", "5"), ("1", "5", "4")),
            (("5", "1,2,3,4"),),
        ),
        CutSequence(
            "triangle: median",
            polygon(3),
            (
                S("1,2", ["1"], ["2"], ["4", "1,4", "2,4"]),
                S("1,2,3", ["1,4", "1,3"], ["2,4", "2,3"], ["3,4", "1,3,4", "2,3,4"]),
            ),
            (("1", "4", "3"), ("4", "2", "3")),
            (("4", "1,2"),),
        ),
        CutSequence(
            "pentagon: two edge points joined",
            polygon(5),
            (
                S("1,2", ["1"], ["2"], ["6", "1,6", "2,6"]),
                S("3,4", ["3"], ["4"], ["7", "3,7", "4,7"]),
                S("1,2,3,4,5", ["2,6", "2,3", "3,7"], ["1,6", "1,5", "4,5", "4,7"], ["6,7", "2,3,6,7", "1,4,5,6,7"]),
            ),
            (("6", "2", "3", "7"), ("7", "4", "5", "1", "6")),
            (("6", "1,2"), ("7", "3,4")),
        ),
    )


@lru_cache(maxsize=None)
def segment_sequence() -> Tuple[List[Poset], List[PosetMap]]:
    """A segment cut at a midpoint, then one half cut again."""
    return run_cuts(
        boolean(2),
        (
            S("1,2", ["1"], ["2"], ["3", "1,3", "2,3"]),
            S("1,3", ["1"], ["3"], ["4", "1,4", "3,4"]),
        ),
    )


# ----------------------------------------------------------------------
# three-dimensional fixtures


STELLAR_TRIANGLES = [[1, 3, 5], [2, 3, 5], [1, 4, 5], [2, 4, 5], [1, 3, 4], [2, 3, 4]]


@lru_cache(maxsize=None)
def stellar_edge() -> PosetMap:
    """Tetrahedron with edge {1,2} stellarly subdivided by vertex 5, as a 2-sphere."""
    G = add_top(simplicial_face_poset(STELLAR_TRIANGLES, name="stellar"))
    return carrier_map(G, boolean(4), {"5": "1,2"})


@lru_cache(maxsize=None)
def stellar_edge_solid() -> PosetMap:
    """The same stellar subdivision of the solid tetrahedron."""
    G = simplicial_face_poset([[1, 3, 4, 5], [2, 3, 4, 5]], name="stellar-solid")
    return carrier_map(G, boolean(4), {"5": "1,2"})


@lru_cache(maxsize=None)
def bipyramid() -> PosetMap:
    """A facet of the tetrahedron replaced by the cone over its boundary."""
    G = face_lattice([[1, 2, 4], [1, 3, 4], [2, 3, 4], [1, 2, 5], [1, 3, 5], [2, 3, 5]], name="bipyramid")
    return carrier_map(G, boolean(4), {"5": "1,2,3"})


CUBE_TETRAHEDRA = [
    ["000", "011", "101", "110"],
    ["001", "000", "011", "101"],
    ["010", "000", "011", "110"],
    ["100", "000", "101", "110"],
    ["111", "011", "101", "110"],
]


@lru_cache(maxsize=None)
def cube_triangulation() -> PosetMap:
    G = simplicial_face_poset(CUBE_TETRAHEDRA, name="cube-5-simplices")
    return carrier_map(G, cube_lattice(), {})


@lru_cache(maxsize=None)
def sigma(n: int) -> PosetMap:
    _, s = barycentric(boolean(n))
    return s


# ----------------------------------------------------------------------
# collections


@lru_cache(maxsize=None)
def single_polygon_cuts(max_n: int = 6) -> Tuple[Tuple[str, Poset, CutSpec, PosetMap], ...]:
    out = []
    for n in range(3, max_n + 1):
        P = polygon(n)
        for spec in enumerate_cuts(P):
            _, phi = cut(P, spec)
            out.append((f"polygon{n} cut at {spec.x0} along {sorted(spec.I)}", P, spec, phi))
    return tuple(out)


@lru_cache(maxsize=None)
def sfs_corpus() -> Tuple[Tuple[str, PosetMap], ...]:
    """Named strong formal subdivisions onto Eulerian targets."""
    out = [(f"sigma{n}", sigma(n)) for n in range(1, 5)]
    out += [
        ("stellar edge", stellar_edge()),
        ("stellar edge solid", stellar_edge_solid()),
        ("bipyramid", bipyramid()),
        ("cube triangulation", cube_triangulation()),
    ]
    out += [(name, phi) for name, _, _, phi in single_polygon_cuts()]
    out += [(seq.name, composite(seq)) for seq in polygon_sequences()]
    _, seg = segment_sequence()
    out.append(("segment cut twice", compose_all(seg[::-1])))
    out += [
        ("identity B3", identity_map(boolean(3))),
        ("identity pentagon", identity_map(polygon(5))),
        ("identity cube", identity_map(cube_lattice())),
    ]
    s3 = sigma(3)
    out += [
        ("sigma3 below an edge", restrict_below(s3, "1,2")),
        ("sigma3 below a vertex", restrict_below(s3, "1")),
        ("sigma3 above a vertex chain", restrict_above(s3, "0/1")),
        ("sigma4 above a vertex chain", restrict_above(sigma(4), "0/2")),
        ("stellar edge below a triangle", restrict_below(stellar_edge(), "1,2,3")),
    ]
    out.append(("sigma2 extended over its semisuspension", extension(sigma(2), add_top(semisuspension(boolean(2))))))
    return tuple(out)


@lru_cache(maxsize=None)
def near_eulerian_maps() -> Tuple[Tuple[str, PosetMap], ...]:
    """SFS between near-Eulerian posets, for the local decomposition."""
    posets, maps = segment_sequence()
    out = [
        ("sigma2 onto B2", sigma(2)),
        ("identity on the cut segment", identity_map(posets[1])),
        ("second segment cut", maps[1]),
        ("segment cut twice", compose_all(maps[::-1])),
    ]
    for seq in polygon_sequences():
        ps, ms = run_cuts(seq.base, seq.steps)
        for i in range(1, len(ms)):
            if ps[i].top is None:
                out.append((f"{seq.name}: cuts after the first", compose_all(ms[i:][::-1])))
                break
    out.append(("sigma3 onto B3", sigma(3)))
    return tuple(out)


@lru_cache(maxsize=None)
def cut_lemma_instances() -> Tuple[Tuple[str, Poset, CutSpec], ...]:
    """(name, P, spec) pairs with P near-Eulerian."""
    out = [(name, P, spec) for name, P, spec, _ in single_polygon_cuts()]
    seg, _ = segment_sequence()
    out.append(("segment midpoint", boolean(2), CutSpec.make("1,2", ["0", "1"], ["0", "2"])))
    out.append(("cut segment, second cut", seg[1], S("1,3", ["1"], ["3"], ["4", "1,4", "3,4"]).spec(seg[1])))
    for seq in polygon_sequences():
        ps, _ = run_cuts(seq.base, seq.steps)
        for i, st in enumerate(seq.steps):
            out.append((f"{seq.name}: step {i + 1}", ps[i], st.spec(ps[i])))
    B4 = boolean(4)
    out.append(("tetrahedron cut along a triangle boundary", B4, CutSpec.make(
        "1,2,3,4", B4.lower_ideal(["1,2,3", "1,2,4"]), B4.lower_ideal(["1,3,4", "2,3,4"]))))
    return tuple(out)


@lru_cache(maxsize=None)
def negative_maps() -> Tuple[Tuple[str, PosetMap], ...]:
    seg, _ = segment_sequence()
    mid = seg[1]
    out = [(
        "midpoint sent to an endpoint",
        build_map(mid, boolean(2), {"0": "0", "1": "1", "2": "2", "3": "1", "1,3": "1,2", "2,3": "1,2"}),
    )]
    sq, tri = polygon(4), polygon(3)
    out.append((
        "square onto a triangle with a misplaced edge",
        build_map(sq, tri, {
            "0": "0", "1": "1", "2": "2", "3": "3", "4": "1,3",
            "1,2": "1,2", "2,3": "2,3", "3,4": "1,2,3", "1,4": "1,3", "1,2,3,4": "1,2,3",
        }),
    ))
    hexa = polygon_sequences()[2]
    out.append((
        "hexagon subdivision with the interior point carried by an edge",
        carrier_map(polygonal_complex([list(c) for c in hexa.cells]), hexa.base, {"7": "2,3"}),
    ))
    return tuple(out)
