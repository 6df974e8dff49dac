"""Finite graded posets with a unique minimum.

The order is stored as reachability bitsets over element indices, so
interval and up/down-set queries are a couple of integer operations.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

import networkx as nx


class PosetError(ValueError):
    """Base class for structural errors in posets and maps."""


class CycleError(PosetError):
    pass


class NotGraded(PosetError):
    pass


class NoUniqueMin(PosetError):
    pass


class NotComparable(PosetError):
    pass


class RankZero(PosetError):
    pass


class NoMax(PosetError):
    pass


class UnknownElement(PosetError):
    pass


def _bits(mask: int) -> Iterable[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Poset:
    """Immutable graded poset with 0-hat; ids are strings."""

    def __init__(self, elements: Sequence[str], covers: Iterable[Tuple[str, str]], name: str = ""):
        self.name = name
        elements = [str(x) for x in elements]
        if len(set(elements)) != len(elements):
            seen, dup = set(), []
            for x in elements:
                if x in seen:
                    dup.append(x)
                seen.add(x)
            raise PosetError(f"duplicate element ids: {sorted(set(dup))}")
        index = {x: i for i, x in enumerate(elements)}
        cov = set()
        for lo, hi in covers:
            lo, hi = str(lo), str(hi)
            for z in (lo, hi):
                if z not in index:
                    raise UnknownElement(f"cover references unknown element {z!r}")
            if lo == hi:
                raise CycleError(f"self-cover on {lo!r}")
            cov.add((index[lo], index[hi]))
        n = len(elements)
        up_cov: List[List[int]] = [[] for _ in range(n)]
        indeg = [0] * n
        for i, j in cov:
            up_cov[i].append(j)
            indeg[j] += 1
        # topological order (Kahn); leftovers mean a cycle
        order = [i for i in range(n) if indeg[i] == 0]
        deg = list(indeg)
        k = 0
        while k < len(order):
            i = order[k]
            k += 1
            for j in up_cov[i]:
                deg[j] -= 1
                if deg[j] == 0:
                    order.append(j)
        if len(order) != n:
            raise CycleError("cover relation has a cycle")
        minima = [i for i in range(n) if indeg[i] == 0]
        if len(minima) != 1:
            raise NoUniqueMin(f"expected one minimal element, found {len(minima)}")
        rank = [0] * n
        seen = [False] * n
        seen[minima[0]] = True
        for i in order:
            for j in up_cov[i]:
                if not seen[j]:
                    rank[j] = rank[i] + 1
                    seen[j] = True
                elif rank[j] != rank[i] + 1:
                    raise NotGraded(
                        f"cover {elements[i]!r} < {elements[j]!r} breaks gradedness"
                    )
        # reachability, processed top-down
        up = [0] * n
        for i in reversed(order):
            m = 1 << i
            for j in up_cov[i]:
                m |= up[j]
            up[i] = m
        down = [0] * n
        for i in range(n):
            for j in _bits(up[i]):
                down[j] |= 1 << i
        self.elements: Tuple[str, ...] = tuple(elements)
        self.index: Dict[str, int] = index
        self._cover_idx = frozenset(cov)
        self._up_cov = [tuple(sorted(x)) for x in up_cov]
        self._rank = rank
        self._up = up
        self._down = down
        self.bottom = elements[minima[0]]
        maxima = [i for i in range(n) if not up_cov[i]]
        self.top: Optional[str] = elements[maxima[0]] if len(maxima) == 1 else None
        self.rank_of_poset = max(rank) if rank else 0
        self._order_idx = sorted(range(n), key=lambda i: (rank[i], elements[i]))

    # ------------------------------------------------------------------
    @property
    def covers(self) -> FrozenSet[Tuple[str, str]]:
        return frozenset((self.elements[i], self.elements[j]) for i, j in self._cover_idx)

    def cover_list(self) -> List[Tuple[str, str]]:
        return sorted(self.covers, key=lambda p: (self.rank(p[0]), p[0], p[1]))

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, x) -> bool:
        return x in self.index

    def __iter__(self):
        return iter(self.elements)

    def __repr__(self) -> str:
        label = f" {self.name}" if self.name else ""
        return f"<Poset{label}: {len(self)} elements, rank {self.rank_of_poset}>"

    def rank(self, x: str) -> int:
        return self._rank[self._idx(x)]

    @property
    def n(self) -> int:
        return self.rank_of_poset

    def _idx(self, x: str) -> int:
        try:
            return self.index[x]
        except KeyError:
            raise UnknownElement(f"unknown element {x!r}") from None

    def leq(self, x: str, y: str) -> bool:
        return bool(self._up[self._idx(x)] >> self._idx(y) & 1)

    def lt(self, x: str, y: str) -> bool:
        return x != y and self.leq(x, y)

    def _ids(self, mask: int) -> List[str]:
        return [self.elements[i] for i in sorted(_bits(mask), key=lambda i: (self._rank[i], self.elements[i]))]

    def mask(self, ids: Iterable[str]) -> int:
        m = 0
        for x in ids:
            m |= 1 << self._idx(x)
        return m

    def up_set(self, x: str) -> List[str]:
        return self._ids(self._up[self._idx(x)])

    def down_set(self, x: str) -> List[str]:
        return self._ids(self._down[self._idx(x)])

    def upper_covers(self, x: str) -> List[str]:
        return [self.elements[j] for j in self._up_cov[self._idx(x)]]

    def lower_covers(self, x: str) -> List[str]:
        i = self._idx(x)
        return [self.elements[a] for a, b in self._cover_idx if b == i]

    def ordered(self) -> List[str]:
        """Elements by (rank, id)."""
        return [self.elements[i] for i in self._order_idx]

    def of_rank(self, r: int) -> List[str]:
        return [x for x in self.ordered() if self.rank(x) == r]

    def maximal(self) -> List[str]:
        return [x for x in self.ordered() if not self._up_cov[self.index[x]]]

    def is_lower_ideal(self, ids: Iterable[str]) -> bool:
        m = self.mask(ids)
        return all(self._down[i] & ~m == 0 for i in _bits(m))

    def lower_ideal(self, gens: Iterable[str]) -> List[str]:
        m = 0
        for g in gens:
            m |= self._down[self._idx(g)]
        return self._ids(m)

    def alt_sum(self, mask: int) -> int:
        """sum of (-1)^rank over a set of element indices"""
        return sum(-1 if self._rank[i] % 2 else 1 for i in _bits(mask))

    def subposet(self, ids: Iterable[str], name: str = "") -> "Poset":
        """Induced subposet on ids (covers recomputed from the order)."""
        ids = list(dict.fromkeys(ids))
        m = self.mask(ids)
        covers = []
        for x in ids:
            i = self.index[x]
            above = self._up[i] & m & ~(1 << i)
            for j in _bits(above):
                # j covers i inside the subset if nothing of the subset lies strictly between
                between = above & self._down[j] & ~(1 << j)
                if not between:
                    covers.append((x, self.elements[j]))
        ordered = [x for x in self.ordered() if (m >> self.index[x]) & 1]
        return Poset(ordered, covers, name=name)

    def relabel(self, f, name: str = "") -> "Poset":
        return Poset([f(x) for x in self.elements], [(f(a), f(b)) for a, b in self.covers], name=name)

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "elements": self.ordered(),
            "covers": [list(p) for p in self.cover_list()],
        }

    @classmethod
    def from_dict(cls, doc: dict) -> "Poset":
        return cls(doc["elements"], [tuple(p) for p in doc["covers"]], name=doc.get("name", ""))

    def f_vector(self) -> List[int]:
        counts = [0] * (self.n + 1)
        for r in self._rank:
            counts[r] += 1
        return counts

    def same_as(self, other: "Poset") -> bool:
        return set(self.elements) == set(other.elements) and self.covers == other.covers


def build_poset(elements: Sequence[str], covers: Iterable[Tuple[str, str]], name: str = "") -> Poset:
    return Poset(elements, covers, name=name)


# ----------------------------------------------------------------------
# derived posets


def interval(P: Poset, x: str, y: Optional[str] = None) -> Poset:
    """[x, y], or the upper set [x, oo) when y is None; ids preserved."""
    i = P._idx(x)
    if y is None:
        m = P._up[i]
    else:
        j = P._idx(y)
        if not P.leq(x, y):
            raise NotComparable(f"{x!r} is not below {y!r}")
        m = P._up[i] & P._down[j]
    return P.subposet(P._ids(m))


def boundary_ids(P: Poset) -> List[str]:
    n = P.n
    if n == 0:
        raise RankZero("the rank-0 poset has no boundary")
    gens = [x for x in P.of_rank(n - 1) if len(P.upper_covers(x)) == 1]
    return P.lower_ideal(gens)


def boundary(P: Poset) -> Poset:
    return P.subposet(boundary_ids(P))


def _fresh(P: Poset, base: str) -> str:
    name = base
    while name in P.index:
        name += "'"
    return name


def add_top(P: Poset, top: str = "1^") -> Poset:
    """Adjoin a new maximum above every maximal element."""
    t = _fresh(P, top)
    covers = list(P.covers) + [(m, t) for m in P.maximal()]
    return Poset(list(P.ordered()) + [t], covers)


def semisuspension(P: Poset, q: str = "q") -> Poset:
    """P plus a new element q of rank n lying above the boundary."""
    if P.n == 0:
        raise RankZero("semisuspension needs positive rank")
    gens = [x for x in P.of_rank(P.n - 1) if len(P.upper_covers(x)) == 1]
    qq = _fresh(P, q)
    return Poset(list(P.ordered()) + [qq], list(P.covers) + [(g, qq) for g in gens])


def dual(P: Poset) -> Poset:
    if P.top is None:
        raise NoMax("dual needs a maximum element")
    return Poset(list(reversed(P.ordered())), [(b, a) for a, b in P.covers])


def to_digraph(P: Poset) -> nx.DiGraph:
    G = nx.DiGraph()
    G.add_nodes_from(P.elements)
    G.add_edges_from(P.covers)
    return G


def isomorphic(P: Poset, Q: Poset) -> bool:
    if len(P) != len(Q) or len(P.covers) != len(Q.covers) or P.f_vector() != Q.f_vector():
        return False
    return nx.is_isomorphic(to_digraph(P), to_digraph(Q))


# ----------------------------------------------------------------------
# classification


@dataclass(frozen=True)
class PosetClassification:
    graded: bool
    has_max: bool
    eulerian: bool
    lower_eulerian: bool
    near_eulerian: bool
    boundary_ids: Optional[FrozenSet[str]] = None
    criterion_agrees: bool = True
    notes: Tuple[str, ...] = field(default_factory=tuple)


def intervals_balanced(P: Poset) -> bool:
    """Every interval [x, y] with x < y has as many even- as odd-rank elements."""
    even = 0
    for i, r in enumerate(P._rank):
        if r % 2 == 0:
            even |= 1 << i
    for i in range(len(P)):
        upi = P._up[i]
        for j in _bits(upi & ~(1 << i)):
            m = upi & P._down[j]
            e = bin(m & even).count("1")
            if 2 * e != bin(m).count("1"):
                return False
    return True


def is_lower_eulerian(P: Poset) -> bool:
    return intervals_balanced(P)


def is_eulerian(P: Poset) -> bool:
    return P.top is not None and intervals_balanced(P)


def near_eulerian_by_criterion(P: Poset) -> Tuple[bool, Optional[List[str]]]:
    """Alternating-sum criterion with I = boundary(P)."""
    n = P.n
    if n == 0 or not is_lower_eulerian(P):
        return False, None
    I = boundary_ids(P)
    if not I:
        return False, None
    Imask = P.mask(I)
    if max(P.rank(x) for x in I) != n - 1:
        return False, None
    sign_n = -1 if n % 2 else 1
    for x in P.elements:
        i = P.index[x]
        total = P.alt_sum(P._up[i])
        if (Imask >> i) & 1:
            if P.alt_sum(P._up[i] & Imask) != -sign_n or total != 0:
                return False, None
        elif total != sign_n:
            return False, None
    return True, I


def near_eulerian_by_suspension(P: Poset) -> bool:
    """Oracle: adjoining q and then a top gives an Eulerian poset."""
    if P.n == 0:
        return False
    try:
        closed = add_top(semisuspension(P))
    except PosetError:
        return False
    return is_eulerian(closed)


def is_near_eulerian(P: Poset) -> bool:
    return near_eulerian_by_criterion(P)[0]


def is_boundary_of_eulerian(P: Poset) -> bool:
    """P with a new top adjoined is Eulerian (includes the singleton)."""
    try:
        return is_eulerian(add_top(P))
    except PosetError:
        return False


def classify(P: Poset) -> PosetClassification:
    lower = is_lower_eulerian(P)
    has_max = P.top is not None
    eul = has_max and lower
    near, I = near_eulerian_by_criterion(P)
    oracle = near_eulerian_by_suspension(P)
    return PosetClassification(
        graded=True,
        has_max=has_max,
        eulerian=eul,
        lower_eulerian=lower,
        near_eulerian=near,
        boundary_ids=frozenset(I) if near else None,
        criterion_agrees=(near == oracle),
    )
