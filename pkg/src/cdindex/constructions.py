"""Canonical poset builders: Boolean algebras, polygons, products, joins,
face lattices, simplicial and polygonal complexes, barycentric subdivision."""

from __future__ import annotations

from itertools import combinations
from typing import Dict, Hashable, Iterable, List, Mapping, Sequence, Tuple

from .poset import Poset, PosetError, is_eulerian
from .posetmap import PosetMap, build_map


class TooFewVertices(PosetError):
    pass


class JoinOperandMissingBounds(PosetError):
    pass


class NotEulerianOperand(PosetError):
    pass


class EmptyInput(PosetError):
    pass


BOTTOM = "0"


def _label_key(v):
    s = str(v)
    return (0, int(s), "") if s.lstrip("-").isdigit() else (1, 0, s)


def face_id(vertices: Iterable[Hashable]) -> str:
    vs = sorted({str(v) for v in vertices}, key=_label_key)
    return ",".join(vs) if vs else BOTTOM


def _poset_from_sets(faces: Iterable[frozenset], name: str = "") -> Poset:
    """Inclusion order on a family of vertex sets containing the empty set."""
    faces = sorted(set(faces), key=lambda f: (len(f), sorted(map(_label_key, f))))
    by_id = {face_id(f): f for f in faces}
    ids = list(by_id)
    covers = []
    for a in ids:
        fa = by_id[a]
        above = [b for b in ids if fa < by_id[b]]
        for b in above:
            fb = by_id[b]
            if not any(fa < by_id[c] < fb for c in above):
                covers.append((a, b))
    return Poset(ids, covers, name=name)


def boolean(n: int) -> Poset:
    if n < 0:
        raise ValueError("n must be nonnegative")
    ids = [face_id(c) for k in range(n + 1) for c in combinations(range(1, n + 1), k)]
    covers = []
    for k in range(n):
        for c in combinations(range(1, n + 1), k):
            for v in range(1, n + 1):
                if v not in c:
                    covers.append((face_id(c), face_id(c + (v,))))
    return Poset(ids, covers, name=f"B{n}")


def face_lattice(facets: Sequence[Iterable[Hashable]], name: str = "") -> Poset:
    """Face lattice of a polytope given by the vertex sets of its facets.

    Faces are the intersections of facets, plus the empty face and the
    whole vertex set.
    """
    if not facets:
        raise EmptyInput("no facets given")
    fs = [frozenset(map(str, f)) for f in facets]
    faces = set(fs)
    frontier = set(fs)
    while frontier:
        new = set()
        for a in frontier:
            for b in fs:
                c = a & b
                if c not in faces:
                    new.add(c)
        faces |= new
        frontier = new
    faces.add(frozenset())
    faces.add(frozenset().union(*fs))
    return _poset_from_sets(faces, name=name)


def polygon(n: int) -> Poset:
    if n < 3:
        raise TooFewVertices(f"a polygon needs at least 3 vertices, got {n}")
    edges = [(i, i % n + 1) for i in range(1, n + 1)]
    return face_lattice(edges, name=f"polygon{n}")


def cube_lattice() -> Poset:
    """Face lattice of the 3-cube on vertices labelled by binary strings."""
    verts = ["".join(b) for b in ("000", "001", "010", "011", "100", "101", "110", "111")]
    facets = [[v for v in verts if v[i] == s] for i in range(3) for s in "01"]
    return face_lattice(facets, name="cube")


def simplicial_face_poset(facets: Sequence[Iterable[Hashable]], name: str = "") -> Poset:
    if not facets:
        raise EmptyInput("no facets given")
    faces = set()
    for f in facets:
        f = frozenset(map(str, f))
        if not f:
            raise EmptyInput("empty facet")
        for k in range(len(f) + 1):
            faces.update(frozenset(c) for c in combinations(sorted(f), k))
    return _poset_from_sets(faces, name=name)


def polygonal_complex(cells: Sequence[Sequence[Hashable]], name: str = "") -> Poset:
    """Face poset of a 2-dimensional complex given by cyclic vertex lists."""
    if not cells:
        raise EmptyInput("no cells given")
    faces = {frozenset()}
    for cyc in cells:
        cyc = [str(v) for v in cyc]
        if len(cyc) < 3:
            raise TooFewVertices("cells need at least 3 vertices")
        faces.add(frozenset(cyc))
        for i, v in enumerate(cyc):
            faces.add(frozenset([v]))
            faces.add(frozenset([v, cyc[(i + 1) % len(cyc)]]))
    return _poset_from_sets(faces, name=name)


def cartesian_product(P: Poset, Q: Poset, name: str = "") -> Poset:
    ids = {}
    for p in P.ordered():
        for q in Q.ordered():
            ids[p, q] = f"({p};{q})"
    elements = [ids[p, q] for p, q in sorted(ids, key=lambda pq: (P.rank(pq[0]) + Q.rank(pq[1]), pq))]
    covers = []
    for a, b in P.covers:
        for q in Q.elements:
            covers.append((ids[a, q], ids[b, q]))
    for a, b in Q.covers:
        for p in P.elements:
            covers.append((ids[p, a], ids[p, b]))
    return Poset(elements, covers, name=name)


def pyramid(P: Poset) -> Poset:
    return cartesian_product(P, boolean(1), name=f"Pyr({P.name})" if P.name else "")


def join(P: Poset, Q: Poset, name: str = "") -> Poset:
    """P * Q: P without its top, below Q without its bottom."""
    if P.top is None or Q.top is None:
        raise JoinOperandMissingBounds("join needs both operands to have a maximum")
    lo = [x for x in P.ordered() if x != P.top]
    hi = [y for y in Q.ordered() if y != Q.bottom]
    L = {x: f"L{x}" for x in lo}
    R = {y: f"R{y}" for y in hi}
    covers = [(L[a], L[b]) for a, b in P.covers if b != P.top]
    covers += [(R[a], R[b]) for a, b in Q.covers if a != Q.bottom]
    # maximal elements of P - top lie below the atoms of Q
    for a in P.lower_covers(P.top):
        for b in Q.upper_covers(Q.bottom):
            covers.append((L[a], R[b]))
    return Poset([L[x] for x in lo] + [R[y] for y in hi], covers, name=name)


def polytope_product(P: Poset, Q: Poset, name: str = "") -> Poset:
    """Face lattice of the product of two polytopes from their face lattices."""
    for X in (P, Q):
        if X.top is None or not is_eulerian(X):
            raise NotEulerianOperand("operands must be Eulerian face lattices")
    ps = [p for p in P.ordered() if p != P.bottom]
    qs = [q for q in Q.ordered() if q != Q.bottom]
    ids = {(p, q): f"({p};{q})" for p in ps for q in qs}
    covers = []
    for a, b in P.covers:
        if a != P.bottom:
            covers += [(ids[a, q], ids[b, q]) for q in qs]
    for a, b in Q.covers:
        if a != Q.bottom:
            covers += [(ids[p, a], ids[p, b]) for p in ps]
    bottom = BOTTOM
    for p in P.upper_covers(P.bottom):
        for q in Q.upper_covers(Q.bottom):
            covers.append((bottom, ids[p, q]))
    order = sorted(ids, key=lambda pq: (P.rank(pq[0]) + Q.rank(pq[1]), pq))
    return Poset([bottom] + [ids[k] for k in order], covers, name=name)


def chain_id(chain: Sequence[str]) -> str:
    return "/".join(chain)


def barycentric(P: Poset, name: str = "") -> Tuple[Poset, PosetMap]:
    """Chains of P through the bottom, ordered by inclusion, and the max-of-chain map."""
    chains: List[Tuple[str, ...]] = []

    def extend(ch):
        chains.append(ch)
        for z in P.ordered():
            if P.lt(ch[-1], z):
                extend(ch + (z,))

    extend((P.bottom,))
    chains.sort(key=lambda ch: (len(ch), ch))
    members = {ch: set(ch) for ch in chains}
    by_len: Dict[int, List[Tuple[str, ...]]] = {}
    for ch in chains:
        by_len.setdefault(len(ch), []).append(ch)
    covers = []
    for ch in chains:
        for big in by_len.get(len(ch) + 1, []):
            if members[ch] < members[big]:
                covers.append((chain_id(ch), chain_id(big)))
    S = Poset([chain_id(ch) for ch in chains], covers, name=name or (f"Bary({P.name})" if P.name else ""))
    sigma = build_map(S, P, {chain_id(ch): ch[-1] for ch in chains})
    return S, sigma


def carrier_map(G: Poset, B: Poset, vertex_carrier: Mapping[str, str]) -> PosetMap:
    """Map a subdivision to B by sending each face to the join of its vertices' carriers.

    Vertices of G not listed in vertex_carrier are assumed to carry to the
    B element with the same id.
    """
    atoms = G.of_rank(1)
    carrier = {v: vertex_carrier.get(v, v) for v in atoms}
    assignment = {}
    for y in G.ordered():
        below = [carrier[v] for v in atoms if G.leq(v, y)]
        assignment[y] = _join(B, below)
    return build_map(G, B, assignment)


def _join(B: Poset, xs: List[str]) -> str:
    if not xs:
        return B.bottom
    common = set(B.up_set(xs[0]))
    for x in xs[1:]:
        common &= set(B.up_set(x))
    if not common:
        raise PosetError(f"no upper bound for {xs}")
    least = [z for z in common if all(B.leq(z, w) for w in common)]
    if len(least) != 1:
        raise PosetError(f"no least upper bound for {xs}")
    return least[0]
