"""Flag enumerators, ab/cd-indices, local and mixed cd-indices, and the
pyramid / barycentric recursions."""

from __future__ import annotations

import enum
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb, factorial
from typing import Dict, Iterable, List, Sequence, Tuple

from .ncpoly import NCPoly, NotCDExpressible, ab_to_cd, prime
from .poset import (
    Poset,
    PosetError,
    _bits,
    add_top,
    boundary,
    interval,
    is_eulerian,
    is_near_eulerian,
    semisuspension,
)
from .posetmap import PosetMap, require_sfs


class CdMode(str, enum.Enum):
    classic = "classic"
    refined = "refined"


class NotInScope(PosetError):
    pass


class NonIntegralResult(ArithmeticError):
    pass


class EmptyI(PosetError):
    pass


ONE = NCPoly.one()
C = NCPoly.word("c")
D = NCPoly.word("d")
E = NCPoly.word("e")


def flag_f_vector(P: Poset) -> Dict[int, int]:
    """Chain counts keyed by rank-set bitmask (bit r-1 for rank r)."""
    ends: List[Dict[int, int]] = [dict() for _ in P.elements]
    total: Dict[int, int] = {}
    for x in P.ordered():
        i = P.index[x]
        if x == P.bottom:
            acc = {0: 1}
        else:
            acc: Dict[int, int] = {}
            bit = 1 << (P._rank[i] - 1)
            for j in _bits(P._down[i] & ~(1 << i)):
                for S, k in ends[j].items():
                    acc[S | bit] = acc.get(S | bit, 0) + k
        ends[i] = acc
        for S, k in acc.items():
            total[S] = total.get(S, 0) + k
    return total


def flag_h_vector(P: Poset) -> Dict[int, int]:
    f = flag_f_vector(P)
    n = P.n
    h = [f.get(S, 0) for S in range(1 << n)]
    for i in range(n):
        bit = 1 << i
        for S in range(1 << n):
            if S & bit:
                h[S] -= h[S ^ bit]
    return {S: v for S, v in enumerate(h) if v}


def _word(S: int, n: int) -> str:
    return "".join("b" if S >> i & 1 else "a" for i in range(n))


def flag_enumerator(P: Poset) -> NCPoly:
    n = P.n
    return NCPoly({_word(S, n): k for S, k in flag_f_vector(P).items()})


def ab_index(P: Poset) -> NCPoly:
    n = P.n
    return NCPoly({_word(S, n): k for S, k in flag_h_vector(P).items()})


def _cd_of_closed(P: Poset) -> NCPoly:
    """cd-index of a poset whose 1-closure is Eulerian."""
    f, g, e = ab_to_cd(ab_index(P))
    if g or e:
        raise NotCDExpressible(g)
    return f


def cd_index(P: Poset, mode: str = "classic") -> NCPoly:
    mode = CdMode(mode)
    if len(P) == 1:
        return E if mode is CdMode.refined else ONE
    if P.top is not None:
        if is_eulerian(P):
            return _cd_of_closed(boundary(P))
        raise NotInScope("poset has a maximum but is not Eulerian")
    if is_eulerian(add_top(P)):
        return _cd_of_closed(P)
    if is_near_eulerian(P):
        return local_cd_index(P) + _cd_of_closed(boundary(P))
    raise NotInScope("poset is neither Eulerian, a boundary of one, nor near-Eulerian")


def cd_index_from_ab(P: Poset) -> NCPoly:
    """Classic cd-index read off Psi_P = f + g * a as f + g.

    Covers Eulerian, boundary-of-Eulerian and near-Eulerian posets without
    going through suspensions or local indices.
    """
    if len(P) == 1:
        return ONE
    f, g, e = ab_to_cd(ab_index(P))
    return f + g


def local_cd_index(P: Poset) -> NCPoly:
    if len(P) == 1:
        return ONE
    if P.top is not None and is_eulerian(P):
        return NCPoly.zero()
    if not is_near_eulerian(P):
        raise NotInScope("local cd-index needs a near-Eulerian poset")
    bd = boundary(P)
    return _cd_of_closed(semisuspension(P)) - _cd_of_closed(bd) * C


def interval_cd(B: Poset, x: str) -> NCPoly:
    """cd-index of [x, top] with the refined convention at the top only."""
    if x == B.top:
        return E
    return cd_index(interval(B, x, B.top))


def mixed_cd_index(phi: PosetMap, check: bool = True) -> NCPoly:
    B = phi.target
    if B.top is None or not is_eulerian(B):
        raise NotInScope("mixed cd-index needs an Eulerian target")
    if check:
        require_sfs(phi)
    from .posetmap import restrict_below

    out = NCPoly.zero()
    for x in B.ordered():
        loc = local_cd_index(restrict_below(phi, x).source)
        if loc:
            out = out + prime(loc) * interval_cd(B, x)
    return out


# ----------------------------------------------------------------------
# closed-form recursions


def pyramid_cd(phi_B: NCPoly, interval_data: Iterable[Tuple[NCPoly, NCPoly]]) -> NCPoly:
    """cd-index of Pyr(B) from Phi_B and (Phi[0,x], Phi[x,1]) over 0 < x < 1."""
    acc = phi_B * C + C * phi_B
    for lo, hi in interval_data:
        acc = acc + lo * D * hi
    out = acc * Fraction(1, 2)
    if not out.is_integral():
        raise NonIntegralResult(str(out))
    return out


def pyramid_cd_of(B: Poset) -> NCPoly:
    data = [
        (cd_index(interval(B, B.bottom, x)), cd_index(interval(B, x, B.top)))
        for x in B.ordered()
        if x not in (B.bottom, B.top)
    ]
    return pyramid_cd(cd_index(B), data)


@lru_cache(maxsize=None)
def boolean_cd(n: int) -> NCPoly:
    """cd-index of B_n by the pyramid recursion."""
    if n == 0:
        return ONE
    if n == 1:
        return ONE
    prev = boolean_cd(n - 1)
    data = []
    for i in range(1, n - 1):
        data += [(boolean_cd(i), boolean_cd(n - 1 - i))] * comb(n - 1, i)
    return pyramid_cd(prev, data)


def chain_count(T: Sequence[int], n: int) -> int:
    """Chains of B_n with rank set T: a multinomial coefficient."""
    parts = []
    prev = 0
    for t in list(T) + [n]:
        parts.append(t - prev)
        prev = t
    out = factorial(n)
    for p in parts:
        out //= factorial(p)
    return out


@lru_cache(maxsize=None)
def _bary_boundary(k: int) -> Poset:
    from .constructions import barycentric, boolean

    S, _ = barycentric(boolean(k))
    return boundary(S)


def _lt_poset(T: Sequence[int], n: int) -> Poset:
    from .constructions import cartesian_product

    cuts = [0] + list(T) + [n]
    L = _bary_boundary(cuts[1] - cuts[0])
    for a, b in zip(cuts[1:], cuts[2:]):
        L = cartesian_product(L, _bary_boundary(b - a))
    return L


@lru_cache(maxsize=None)
def bary_boundary_cd(n: int) -> NCPoly:
    """Phi of the boundary of Bary(B_n) from the decomposition identity."""
    out = boolean_cd(n)
    for i in range(1, n):
        out = out + comb(n, i) * bary_local_cd(i) * boolean_cd(n - i)
    return out


@lru_cache(maxsize=None)
def bary_local_cd(n: int) -> NCPoly:
    """Local cd-index of Bary(B_n) by the pyramid-based recursion."""
    if n < 1:
        raise ValueError("n must be positive")
    bd = bary_boundary_cd(n)
    acc = C * bd - bd * C
    for r in range(1, n):
        for T in combinations(range(1, n), r):
            acc = acc + chain_count(T, n) * boolean_cd(len(T)) * D * _cd_of_closed(_lt_poset(T, n))
    out = acc * Fraction(1, 2)
    if not out.is_integral():
        raise NonIntegralResult(str(out))
    return out


def bary_mixed_cd(n: int) -> NCPoly:
    """Mixed cd-index of Bary(B_n) -> B_n from the local indices of smaller ones."""
    out = boolean_cd(n)
    for i in range(1, n + 1):
        tail = E if i == n else boolean_cd(n - i)
        out = out + comb(n, i) * prime(bary_local_cd(i)) * tail
    return out


def cut_cd_delta(P: Poset, I: Iterable[str], x0: str) -> NCPoly:
    """Phi_I * d * Phi_[x0, oo): the change in cd-index caused by a cut."""
    I = list(I)
    if not I:
        raise EmptyI("the cut ideal I is empty")
    ideal = P.subposet(sorted(I, key=lambda z: (P.rank(z), z)))
    return cd_index(ideal) * D * cd_index(interval(P, x0))
