"""Poset maps and strong formal subdivisions (rank 0, natural ranks)."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Tuple

from .poset import (
    Poset,
    PosetError,
    UnknownElement,
    _bits,
    interval,
    is_lower_eulerian,
    near_eulerian_by_criterion,
)


class MapError(PosetError):
    pass


class NotOrderPreserving(MapError):
    pass


class NotRankIncreasing(MapError):
    pass


class NotSurjective(MapError):
    pass


class RankShiftNonzero(MapError):
    pass


class PreconditionFailed(MapError):
    pass


class NotSFS(MapError):
    pass


class NotLowerOrderIdeal(MapError):
    pass


class Mismatch(MapError):
    pass


class InvalidCutSpec(MapError):
    pass


@dataclass(frozen=True, eq=False)
class PosetMap:
    source: Poset
    target: Poset
    assignment: Mapping[str, str]
    rank_shift: int = 0

    def __call__(self, y: str) -> str:
        return self.assignment[y]

    def __repr__(self) -> str:
        return f"<PosetMap {len(self.source)} -> {len(self.target)} elements>"

    def fiber(self, x: str) -> List[str]:
        return [y for y in self.source.ordered() if self.assignment[y] == x]

    def fiber_mask(self) -> Dict[str, int]:
        out = {x: 0 for x in self.target.elements}
        for y, x in self.assignment.items():
            out[x] |= 1 << self.source.index[y]
        return out

    def preimage_below(self, x: str) -> List[str]:
        """Gamma_x = {y : phi(y) <= x}."""
        T = self.target
        return [y for y in self.source.ordered() if T.leq(self.assignment[y], x)]

    def preimage_strictly_below(self, x: str) -> List[str]:
        T = self.target
        return [y for y in self.source.ordered() if T.lt(self.assignment[y], x)]

    def is_identity(self) -> bool:
        return (
            len(self.source) == len(self.target)
            and all(self.assignment[y] == y for y in self.source.elements)
            and self.source.covers == self.target.covers
        )

    def to_dict(self) -> dict:
        return {
            "source": self.source.to_dict(),
            "target": self.target.to_dict(),
            "assignment": [[y, self.assignment[y]] for y in self.source.ordered()],
        }


def build_map(source: Poset, target: Poset, assignment: Mapping[str, str]) -> PosetMap:
    assignment = {str(k): str(v) for k, v in assignment.items()}
    missing = [y for y in source.elements if y not in assignment]
    if missing:
        raise MapError(f"assignment is not total; missing {missing[:5]}")
    for y, x in assignment.items():
        if y not in source.index:
            raise UnknownElement(f"assignment has unknown source id {y!r}")
        if x not in target.index:
            raise UnknownElement(f"assignment has unknown target id {x!r}")
    for a, b in source.covers:
        if not target.leq(assignment[a], assignment[b]):
            raise NotOrderPreserving(f"{a!r} < {b!r} but images are not ordered")
    for y in source.elements:
        if source.rank(y) > target.rank(assignment[y]):
            raise NotRankIncreasing(f"rank of {y!r} exceeds rank of its image")
    hit = set(assignment.values())
    if len(hit) != len(target):
        miss = [x for x in target.ordered() if x not in hit]
        raise NotSurjective(f"elements not hit: {miss[:5]}")
    # with natural rank functions on both sides the shift is always zero
    shift = target.rank(target.bottom) - source.rank(source.bottom)
    if shift != 0:
        raise RankShiftNonzero("maps of nonzero rank are not supported")
    return PosetMap(source, target, assignment, shift)


def identity_map(P: Poset) -> PosetMap:
    return build_map(P, P, {x: x for x in P.elements})


# ----------------------------------------------------------------------
# strong formal subdivision tests


@dataclass
class SFSResult:
    ok: bool
    method: str
    witness: Optional[Tuple] = None
    detail: str = ""

    def __bool__(self) -> bool:
        return self.ok


def _check_preconditions(phi: PosetMap) -> None:
    if not is_lower_eulerian(phi.source):
        raise PreconditionFailed("source is not lower Eulerian")
    if not is_lower_eulerian(phi.target):
        raise PreconditionFailed("target is not lower Eulerian")
    if phi.rank_shift != 0:
        raise PreconditionFailed("map has nonzero rank")


def _alt(S: Poset, mask: int) -> int:
    return S.alt_sum(mask)


def _strong_surjectivity(phi: PosetMap, fib: Dict[str, int]) -> Optional[Tuple[str, str]]:
    S, T = phi.source, phi.target
    for y in S.ordered():
        up = S._up[S.index[y]]
        for x in T.up_set(phi(y)):
            rx = T.rank(x)
            cand = up & fib[x]
            if not any(S._rank[i] == rx for i in _bits(cand)):
                return (y, x)
    return None


def sfs_by_definition(phi: PosetMap) -> SFSResult:
    S, T = phi.source, phi.target
    fib = phi.fiber_mask()
    w = _strong_surjectivity(phi, fib)
    if w:
        return SFSResult(False, "definition", w, "not strongly surjective")
    for y in S.ordered():
        up = S._up[S.index[y]]
        for x in T.up_set(phi(y)):
            want = -1 if T.rank(x) % 2 else 1
            if _alt(S, up & fib[x]) != want:
                return SFSResult(False, "definition", (y, x), "fiber alternating sum")
    return SFSResult(True, "definition")


def sfs_by_characterization(phi: PosetMap) -> SFSResult:
    S, T = phi.source, phi.target
    fib = phi.fiber_mask()
    w = _strong_surjectivity(phi, fib)
    if w:
        return SFSResult(False, "characterization", w, "not strongly surjective")
    below = {}
    for x in T.elements:
        m = 0
        for z in T.down_set(x):
            m |= fib[z]
        below[x] = m
    for y in S.ordered():
        up = S._up[S.index[y]]
        fy = phi(y)
        for x in T.up_set(fy):
            if fy == x:
                want = -1 if T.rank(x) % 2 else 1
            else:
                want = 0
            if _alt(S, up & below[x]) != want:
                return SFSResult(False, "characterization", (y, x), "upper-set alternating sum")
    return SFSResult(True, "characterization")


def sfs_by_near_criterion(phi: PosetMap) -> SFSResult:
    S, T = phi.source, phi.target
    for x in T.ordered():
        if x == T.bottom:
            continue
        Gx = S.subposet(phi.preimage_below(x))
        ok, I = near_eulerian_by_criterion(Gx)
        if not ok:
            return SFSResult(False, "near_criterion", (x,), "preimage is not near-Eulerian")
        if Gx.n != T.rank(x):
            return SFSResult(False, "near_criterion", (x,), "preimage has the wrong rank")
        if set(I) != set(phi.preimage_strictly_below(x)):
            return SFSResult(False, "near_criterion", (x,), "boundary is not the preimage of [0, x)")
    if len(phi.fiber(T.bottom)) != 1:
        return SFSResult(False, "near_criterion", (T.bottom,), "bottom fiber is not a point")
    return SFSResult(True, "near_criterion")


_METHODS = {
    "definition": sfs_by_definition,
    "characterization": sfs_by_characterization,
    "near_criterion": sfs_by_near_criterion,
}


def is_sfs(phi: PosetMap, method: str = "definition") -> SFSResult:
    """Check the strong formal subdivision property by one method or all three."""
    _check_preconditions(phi)
    if method == "all":
        results = [f(phi) for f in _METHODS.values()]
        oks = {r.ok for r in results}
        if len(oks) != 1:
            detail = ", ".join(f"{r.method}={r.ok}" for r in results)
            raise AssertionError(f"SFS criteria disagree: {detail}")
        bad = next((r for r in results if not r.ok), None)
        return bad if bad is not None else SFSResult(True, "all")
    try:
        return _METHODS[method](phi)
    except KeyError:
        raise ValueError(f"unknown method {method!r}") from None


def require_sfs(phi: PosetMap) -> None:
    try:
        res = is_sfs(phi, "definition")
    except PreconditionFailed as exc:
        raise NotSFS(str(exc)) from None
    if not res:
        raise NotSFS(f"not a strong formal subdivision: {res.detail} at {res.witness}")


# ----------------------------------------------------------------------
# restrictions, composition


def restrict_below(phi: PosetMap, x: str) -> PosetMap:
    if x not in phi.target:
        raise UnknownElement(f"unknown target element {x!r}")
    src = phi.source.subposet(phi.preimage_below(x))
    tgt = interval(phi.target, phi.target.bottom, x)
    return build_map(src, tgt, {y: phi(y) for y in src.elements})


def restrict_above(phi: PosetMap, y: str) -> PosetMap:
    if y not in phi.source:
        raise UnknownElement(f"unknown source element {y!r}")
    src = interval(phi.source, y)
    tgt = interval(phi.target, phi(y))
    return build_map(src, tgt, {z: phi(z) for z in src.elements})


def restrict_to_ideal(phi: PosetMap, ideal: Iterable[str]) -> PosetMap:
    """phi restricted to the preimage of a lower order ideal of the target."""
    ideal = set(ideal)
    src = phi.source.subposet([y for y in phi.source.ordered() if phi(y) in ideal])
    tgt = phi.target.subposet([x for x in phi.target.ordered() if x in ideal])
    return build_map(src, tgt, {y: phi(y) for y in src.elements})


def compose(phi: PosetMap, psi: PosetMap) -> PosetMap:
    """phi after psi."""
    if not psi.target.same_as(phi.source):
        raise Mismatch("target of the first map is not the source of the second")
    return build_map(psi.source, phi.target, {y: phi(psi(y)) for y in psi.source.elements})


def compose_all(maps: List[PosetMap]) -> PosetMap:
    """Compose maps listed in the order they are applied."""
    out = maps[0]
    for m in maps[1:]:
        out = compose(m, out)
    return out


# ----------------------------------------------------------------------
# extensions and intermediate maps


def _rename_clashes(keep: Iterable[str], other: Iterable[str]) -> Dict[str, str]:
    keep = set(keep)
    ren = {}
    for x in other:
        name = x
        while name in keep:
            name += "~"
        ren[x] = name
    return ren


def _glue(lower: Poset, lower_map: Mapping[str, str], upper_ids: List[str], B: Poset, name: str = "") -> Tuple[Poset, Dict[str, str], Dict[str, str]]:
    """Poset lower + (upper part of B) with y < x iff lower_map(y) <= x in B.

    Returns the glued poset, the renaming of B ids, and the glued map to B.
    """
    ren = _rename_clashes(lower.elements, upper_ids)
    elements = list(lower.ordered()) + [ren[x] for x in upper_ids]
    covers = list(lower.covers)
    upper_set = set(upper_ids)
    for a, b in B.covers:
        if a in upper_set and b in upper_set:
            covers.append((ren[a], ren[b]))
    for y in lower.elements:
        ry = lower.rank(y)
        for x in B.up_set(lower_map[y]):
            if x in upper_set and B.rank(x) == ry + 1:
                covers.append((y, ren[x]))
    glued = Poset(elements, covers, name=name)
    to_B = dict(lower_map)
    for x in upper_ids:
        to_B[ren[x]] = x
    return glued, ren, to_B


def extension(sigma: PosetMap, B: Poset) -> PosetMap:
    """Extend sigma: Pi -> Gamma over an Eulerian B containing Gamma as a lower ideal."""
    G = sigma.target
    if not all(x in B for x in G.elements):
        raise NotLowerOrderIdeal("target elements are not all in B")
    if not B.is_lower_ideal(G.elements):
        raise NotLowerOrderIdeal("target is not a lower order ideal of B")
    if B.subposet(G.elements).covers != G.covers:
        raise NotLowerOrderIdeal("target order differs from the order induced by B")
    rest = [x for x in B.ordered() if x not in G.index]
    Pi_t, ren, to_B = _glue(sigma.source, sigma.assignment, rest, B)
    return build_map(Pi_t, B, to_B)


def intermediate_factorization(phi: PosetMap, order: Optional[List[str]] = None, check: bool = True) -> List[PosetMap]:
    """Maps phi_N, ..., phi_1 (in the order applied) factoring phi through B_i.

    B_i = phi^{-1}{x_0..x_i} + {x_{i+1}..x_N}, elements of B listed by rank
    (ties by id unless an explicit rank-compatible order is given).
    """
    if check:
        require_sfs(phi)
    B = phi.target
    xs = order or B.ordered()
    ranks = [B.rank(x) for x in xs]
    if sorted(ranks) != ranks or set(xs) != set(B.elements):
        raise ValueError("order must list every target element by weakly increasing rank")
    N = len(xs) - 1
    idx = {x: k for k, x in enumerate(xs)}
    posets: Dict[int, Tuple[Poset, Dict[str, str], Dict[str, str]]] = {}
    for i in range(N + 1):
        lower_ids = [y for y in phi.source.ordered() if idx[phi(y)] <= i]
        lower = phi.source.subposet(lower_ids)
        posets[i] = _glue(lower, {y: phi(y) for y in lower_ids}, xs[i + 1:], B)
    maps = []
    for i in range(N, 0, -1):
        Bi, ren_i, _ = posets[i]
        Bj, ren_j, _ = posets[i - 1]
        xi = xs[i]
        assignment = {}
        for z in Bi.elements:
            if z in phi.source.index and phi(z) == xi:
                assignment[z] = ren_j[xi]
            elif z in phi.source.index and idx[phi(z)] < i:
                assignment[z] = z
            else:
                # an element of B above x_i, named in both posets
                orig = next(x for x, r in ren_i.items() if r == z)
                assignment[z] = ren_j[orig]
        maps.append(build_map(Bi, Bj, assignment))
    return maps


# ----------------------------------------------------------------------
# cutting


@dataclass(frozen=True)
class CutSpec:
    x0: str
    sigma1: FrozenSet[str]
    sigma2: FrozenSet[str]
    names: Optional[Tuple[str, str, str]] = None  # ids for y, x1, x2

    @property
    def I(self) -> FrozenSet[str]:
        return self.sigma1 & self.sigma2

    @classmethod
    def make(cls, x0, sigma1, sigma2, names=None) -> "CutSpec":
        return cls(str(x0), frozenset(map(str, sigma1)), frozenset(map(str, sigma2)), names)

    def to_dict(self) -> dict:
        return {"x0": self.x0, "sigma1": sorted(self.sigma1), "sigma2": sorted(self.sigma2)}


def validate_cut(P: Poset, spec: CutSpec) -> None:
    if spec.x0 not in P:
        raise InvalidCutSpec(f"x0 {spec.x0!r} is not an element")
    below = set(P.down_set(spec.x0)) - {spec.x0}
    for k, S in (("sigma1", spec.sigma1), ("sigma2", spec.sigma2)):
        if not S <= set(P.elements):
            raise InvalidCutSpec(f"{k} has unknown elements")
        if not P.is_lower_ideal(S):
            raise InvalidCutSpec(f"{k} is not a lower order ideal")
    if spec.sigma1 | spec.sigma2 != below:
        raise InvalidCutSpec("sigma1 and sigma2 do not cover [0, x0)")
    I = spec.I
    if not I:
        raise InvalidCutSpec("I = sigma1 & sigma2 is empty")
    for k, S in (("sigma1", spec.sigma1), ("sigma2", spec.sigma2)):
        sub = P.subposet(sorted(S, key=lambda z: (P.rank(z), z)))
        ok, bd = near_eulerian_by_criterion(sub)
        if not ok:
            raise InvalidCutSpec(f"{k} is not near-Eulerian")
        if set(bd) != set(I):
            raise InvalidCutSpec(f"boundary of {k} differs from sigma1 & sigma2")


def cut(P: Poset, spec: CutSpec, validate: bool = True) -> Tuple[Poset, PosetMap]:
    """Cut x0 into y < x1, x2 along (sigma1, sigma2, I); returns (Gamma, phi)."""
    validate_cut(P, spec)
    x0 = spec.x0
    names = spec.names or (f"{x0}:y", f"{x0}:1", f"{x0}:2")
    for nm in names:
        if nm in P and nm != x0:
            raise InvalidCutSpec(f"new id {nm!r} already used")
    y, x1, x2 = names
    k = P.rank(x0)
    elements = [z for z in P.ordered() if z != x0] + [y, x1, x2]
    covers = [(a, b) for a, b in P.covers if x0 not in (a, b)]
    for z in spec.I:
        if P.rank(z) == k - 2:
            covers.append((z, y))
    covers += [(y, x1), (y, x2)]
    for xi, S in ((x1, spec.sigma1), (x2, spec.sigma2)):
        for z in S:
            if P.rank(z) == k - 1:
                covers.append((z, xi))
        for z in P.upper_covers(x0):
            covers.append((xi, z))
    G = Poset(elements, covers)
    assignment = {z: z for z in G.elements}
    for nm in names:
        assignment[nm] = x0
    phi = build_map(G, P, assignment)
    if validate:
        require_sfs(phi)
    return G, phi


def enumerate_cuts(P: Poset, x0: Optional[str] = None) -> List[CutSpec]:
    """All valid cut specs with nonempty I, up to swapping sigma1 and sigma2."""
    out = []
    targets = [x0] if x0 is not None else [x for x in P.ordered() if P.rank(x) >= 2]
    for x in targets:
        k = P.rank(x)
        gens = [z for z in P.down_set(x) if P.rank(z) == k - 1]
        m = len(gens)
        for bits in range(1, 1 << (m - 1)):
            A = [gens[i] for i in range(m) if bits >> i & 1]
            Bg = [gens[i] for i in range(m) if not bits >> i & 1]
            spec = CutSpec.make(x, P.lower_ideal(A), P.lower_ideal(Bg))
            try:
                validate_cut(P, spec)
            except InvalidCutSpec:
                continue
            out.append(spec)
    return out
