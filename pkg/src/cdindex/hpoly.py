"""Commutative invariants: g, h, local h and mixed h polynomials, and the
linear maps that carry cd-type indices to them."""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Dict, Iterable, List, Mapping, Optional, Tuple

from .ncpoly import (
    NCPoly,
    _norm,
    cd_to_ab,
    comodule_rho,
    format_word,
    primed_part,
    unprimed_part,
    word_degree,
)
from .poset import Poset, PosetError, dual, interval, is_eulerian, is_lower_eulerian
from .posetmap import PosetMap, require_sfs, restrict_below

Exp = Tuple[int, int, int, int]  # exponents of t, u, t', u'
VARS = ("t", "u", "t'", "u'")


class NegativeExponent(ArithmeticError):
    pass


class NotEulerian(PosetError):
    pass


class NotLowerEulerian(PosetError):
    pass


class CommPoly:
    """Exact polynomial in t, u, t', u'."""

    __slots__ = ("terms",)

    def __init__(self, terms: Optional[Mapping[Exp, object]] = None):
        out: Dict[Exp, object] = {}
        for k, v in (terms or {}).items():
            k = tuple(k) + (0,) * (4 - len(k))
            v = _norm(v)
            if v:
                out[k] = _norm(out.get(k, 0) + v)
                if not out[k]:
                    del out[k]
        self.terms = out

    @classmethod
    def const(cls, q) -> "CommPoly":
        return cls({(0, 0, 0, 0): q})

    @classmethod
    def mono(cls, t=0, u=0, tp=0, up=0, coeff=1) -> "CommPoly":
        return cls({(t, u, tp, up): coeff})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CommPoly.const(other)
        return isinstance(other, CommPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        other = _cp(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return CommPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return CommPoly({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-_cp(other))

    def __rsub__(self, other):
        return _cp(other) - self

    def __mul__(self, other):
        other = _cp(other)
        out: Dict[Exp, object] = {}
        for k1, v1 in self.terms.items():
            for k2, v2 in other.terms.items():
                k = tuple(a + b for a, b in zip(k1, k2))
                out[k] = out.get(k, 0) + v1 * v2
        return CommPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out = CommPoly.const(1)
        for _ in range(n):
            out = out * self
        return out

    def __repr__(self):
        return f"CommPoly({format_comm(self)!r})"

    def __str__(self):
        return format_comm(self)

    def bar(self) -> "CommPoly":
        return CommPoly({(k[1], k[0], k[2], k[3]): v for k, v in self.terms.items()})

    def bar_prime(self) -> "CommPoly":
        return CommPoly({(k[0], k[1], k[3], k[2]): v for k, v in self.terms.items()})

    def t_degree_below(self, bound) -> "CommPoly":
        """Monomials of t-degree strictly less than bound."""
        return CommPoly({k: v for k, v in self.terms.items() if k[0] < bound})

    def total_degrees(self) -> set:
        return {k[0] + k[1] for k in self.terms}

    def scale_primed(self) -> "CommPoly":
        """f(t t', u u')."""
        return CommPoly({(k[0], k[1], k[2] + k[0], k[3] + k[1]): v for k, v in self.terms.items()})

    def homogenize_primed(self, D: int) -> "CommPoly":
        """(t'u')^D f(t/t', u/u')."""
        out = {}
        for k, v in self.terms.items():
            if k[2] or k[3]:
                raise ValueError("expected a polynomial in t, u only")
            tp, up = D - k[0], D - k[1]
            if tp < 0 or up < 0:
                raise NegativeExponent(f"degree {D} too small for t^{k[0]} u^{k[1]}")
            out[(k[0], k[1], tp, up)] = v
        return CommPoly(out)

    def is_palindromic(self) -> bool:
        return self == self.bar()


def _cp(x) -> CommPoly:
    if isinstance(x, CommPoly):
        return x
    return CommPoly.const(x)


T = CommPoly.mono(t=1)
U = CommPoly.mono(u=1)
ONE = CommPoly.const(1)
ZERO = CommPoly()


def _comm_key(k: Exp):
    return (k[0] + k[1] + k[2] + k[3], k[0], k[2], k[1], k[3])


def format_comm(p: CommPoly) -> str:
    if not p.terms:
        return "0"
    parts = []
    for k in sorted(p.terms, key=_comm_key):
        v = p.terms[k]
        factors = []
        for name, e in zip(("t", "t'", "u", "u'"), (k[0], k[2], k[1], k[3])):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        mono = "*".join(factors)
        a = abs(v)
        if not mono:
            body = str(a)
        elif a == 1:
            body = mono
        else:
            body = f"{a}*{mono}"
        neg = v < 0
        if not parts:
            parts.append(("-" if neg else "") + body)
        else:
            parts.append((" - " if neg else " + ") + body)
    return "".join(parts)


_TERM = re.compile(r"\s*([+-])?\s*([^+-]+)")


def parse_comm(text: str) -> CommPoly:
    text = text.replace(" ", "")
    if text in ("", "0"):
        return ZERO
    out = ZERO
    for m in re.finditer(r"([+-]?)([^+-]+)", text):
        sign = -1 if m.group(1) == "-" else 1
        coeff = Fraction(sign)
        exps = [0, 0, 0, 0]
        for f in m.group(2).split("*"):
            fm = re.fullmatch(r"(t'|u'|t|u)(?:\^(\d+))?", f)
            if fm:
                i = {"t": 0, "u": 1, "t'": 2, "u'": 3}[fm.group(1)]
                exps[i] += int(fm.group(2) or 1)
            else:
                coeff *= Fraction(f)
        out = out + CommPoly({tuple(exps): coeff})
    return out


def tm(n: int) -> CommPoly:
    """(t - u)^n."""
    return (T - U) ** n


# ----------------------------------------------------------------------
# g and h


def lower_g_table(P: Poset) -> Dict[str, CommPoly]:
    """g([0, x]) for every x of a lower Eulerian poset, in rank order."""
    g: Dict[str, CommPoly] = {}
    for x in P.ordered():
        r = P.rank(x)
        if r == 0:
            g[x] = ONE
            continue
        hbar = ZERO
        for z in P.down_set(x):
            if z != x:
                hbar = hbar + g[z] * tm(r - 1 - P.rank(z))
        g[x] = ((U - T) * hbar.bar()).t_degree_below(Fraction(r, 2))
    return g


def g_poly(B: Poset) -> CommPoly:
    if B.top is None or not is_eulerian(B):
        raise NotEulerian("g-polynomial needs an Eulerian poset")
    return lower_g_table(B)[B.top]


def h_poly(G: Poset) -> CommPoly:
    if not is_lower_eulerian(G):
        raise NotLowerEulerian("h-polynomial needs a lower Eulerian poset")
    g = lower_g_table(G)
    n = G.n
    hbar = ZERO
    for x in G.elements:
        hbar = hbar + g[x] * tm(n - G.rank(x))
    return hbar.bar()


def _check_map(phi: PosetMap, check: bool) -> None:
    B = phi.target
    if B.top is None or not is_eulerian(B):
        raise NotEulerian("target must be Eulerian")
    if check:
        require_sfs(phi)


def local_h_poly(phi: PosetMap, check: bool = True) -> CommPoly:
    _check_map(phi, check)
    B = phi.target
    out = ZERO
    for x in B.ordered():
        Gx = phi.source.subposet(phi.preimage_below(x))
        up = interval(B, x, B.top)
        sign = -1 if up.n % 2 else 1
        out = out + sign * h_poly(Gx) * g_poly(dual(up))
    return out


def mixed_h_poly(phi: PosetMap, check: bool = True) -> CommPoly:
    _check_map(phi, check)
    B = phi.target
    out = ZERO
    for x in B.ordered():
        loc = local_h_poly(restrict_below(phi, x), check=False)
        up = interval(B, x, B.top)
        out = out + loc.homogenize_primed(B.rank(x)) * g_poly(up).scale_primed()
    return out


# ----------------------------------------------------------------------
# building blocks


def p_coef(n: int, k: int) -> int:
    lo = comb(n, k - 1) if k >= 1 else 0
    return comb(n, k) - lo


def Q(n: int) -> CommPoly:
    if n <= 0:
        return ZERO
    out = ZERO
    for k in range((n - 1) // 2 + 1):
        out = out + CommPoly.mono(t=k, u=n - 1 - k, coeff=(-1) ** k * p_coef(n - 1, k))
    return out


def R(n: int) -> CommPoly:
    return Q(n).bar()


def Tb(n: int) -> CommPoly:
    if n % 2 == 0:
        return ZERO
    m = (n - 1) // 2
    return CommPoly.mono(t=m, u=m, coeff=(-1) ** m * p_coef(n - 1, m))


def S(k: int) -> CommPoly:
    out = ZERO
    for j in range(1, k + 1):
        out = out + (-1) ** (k - j + 1) * Q(j) * Q(k - j + 1)
    return 2 * U * U * out


def Sp(l: int, k: int) -> CommPoly:
    out = ZERO
    for j in range(1, k + 1):
        out = out + (-1) ** (k - j + 1) * Q(l + j) * Q(k - j + 1)
    return 2 * U * U * out


def Ub(l: int, k: int) -> CommPoly:
    return U * U * (Q(l + 2) * Q(k + 1) * (-1) ** (k + 1) + Q(l + 1) * Q(k + 2) * (-1) ** (k + 2))


def FQ(k: int) -> CommPoly:
    """t R_k + u Q_k, with the value 1 at k = 0."""
    return ONE if k == 0 else T * R(k) + U * Q(k)


# ----------------------------------------------------------------------
# F, G, G* on ab-words (recursive definition)


def kappa_word(w: str) -> CommPoly:
    if w == "e" or set(w) - {"a"}:
        return ZERO
    return tm(len(w))


@lru_cache(maxsize=None)
def _F_ab(w: str) -> CommPoly:
    if w == "e":
        return ZERO
    fbar = kappa_word(w)
    for i in range(len(w)):
        right = w[i + 1:]
        if set(right) <= {"a"}:
            fbar = fbar + _G_ab(w[:i]) * tm(len(right))
    return fbar.bar()


@lru_cache(maxsize=None)
def _G_ab(w: str) -> CommPoly:
    if w == "e":
        return ONE
    n = len(w)
    return ((U - T) * _F_ab(w)).t_degree_below(Fraction(n + 1, 2))


def _linear(p: NCPoly, f) -> CommPoly:
    out = ZERO
    for w, q in p:
        out = out + q * f(w)
    return out


def _as_ab(p) -> NCPoly:
    p = p if isinstance(p, NCPoly) else NCPoly.word(p)
    if p.letters() & set("cd"):
        p = cd_to_ab(p)
    return p


def F_map(p) -> CommPoly:
    return _linear(_as_ab(p), _F_ab)


def G_map(p) -> CommPoly:
    return _linear(_as_ab(p), _G_ab)


def Gstar_map(p) -> CommPoly:
    """(-1)^(n+1) G(reversed word) on ab-words of length n (e counts as a letter)."""

    def one(w: str) -> CommPoly:
        n = 1 if w == "e" else len(w)
        return (-1) ** (n + 1) * _G_ab(w[::-1])

    return _linear(_as_ab(p), one)


# ----------------------------------------------------------------------
# closed forms on cd-words


def _cd_shape(w: str) -> Tuple[List[int], int]:
    """c^k1 d c^k2 d ... d c^k -> ([k1, ..., kr], k)."""
    runs = w.split("d")
    return [len(r) for r in runs[:-1]], len(runs[-1])


def F_closed(w: str) -> CommPoly:
    if w == "e":
        return ZERO
    ks, k = _cd_shape(w)
    out = (T * U) ** len(ks) * FQ(k)
    for kj in ks:
        out = out * Tb(kj + 1)
    return out


def G_closed(w: str) -> CommPoly:
    if w == "e":
        return ONE
    ks, k = _cd_shape(w)
    out = (T * U) ** len(ks) * U * Q(k + 1)
    for kj in ks:
        out = out * Tb(kj + 1)
    return out


# ----------------------------------------------------------------------
# mixed maps


def _unprimed_letters(w: str) -> str:
    return w.lower()


def H_word(w: str) -> CommPoly:
    wp, wu = primed_part(w), unprimed_part(w)
    if wu == "e":
        return F_map(_unprimed_letters(wp) or "")
    return G_map(_unprimed_letters(wp) + wu)


def H_Omega(m: NCPoly) -> CommPoly:
    return _linear(m, H_word)


def _nabla(tensor, left, right) -> CommPoly:
    out = ZERO
    for (a, b), q in tensor:
        out = out + q * left(a) * right(b)
    return out


def L_word(w: str) -> CommPoly:
    return _nabla(comodule_rho(NCPoly.word(w)), H_word, lambda b: Gstar_map(b))


def L_Omega(m: NCPoly) -> CommPoly:
    return _nabla(comodule_rho(m), H_word, lambda b: Gstar_map(b))


def Lprime_word(w: str) -> CommPoly:
    val = L_word(w)
    if not val:
        return ZERO
    return val.homogenize_primed(word_degree(w) + 1)


def Lprime(m: NCPoly) -> CommPoly:
    return _linear(m, Lprime_word)


def Gprime(p) -> CommPoly:
    return G_map(p).scale_primed()


def Hprime_Omega(m: NCPoly) -> CommPoly:
    return _nabla(comodule_rho(m), Lprime_word, lambda b: Gprime(b))


# ----------------------------------------------------------------------
# explicit L formula, evaluated with cancellations done before multiplying


@dataclass
class ExplicitResult:
    word: str
    status: str  # match, mismatch, not_applicable
    compositional: CommPoly
    explicit: Optional[CommPoly] = None
    note: str = ""


def _explicit_L(w: str) -> CommPoly:
    """Evaluate the displayed closed formula for L on E'E literally.

    Words whose unprimed part has no d are read with k1 = k and r = 0;
    the U-sum runs over i = 2..r.
    """
    Ep = _unprimed_letters(primed_part(w))
    E = unprimed_part(w)
    ls, l = _cd_shape(Ep)
    ks, k = _cd_shape(E)
    s, r = len(ls), len(ks)
    if r == 0:
        k1, rest = k, []
    else:
        k1, rest = ks[0], ks[1:]
    kk = rest + [k]  # k_2 .. k_{r+1}
    factors = [l_ + 1 for l_ in ls] + [ki + 1 for ki in rest] + [k + 1]

    def term(poly: CommPoly, cancel: List[int], tu_drop: int = 0) -> CommPoly:
        fs = list(factors)
        for c in cancel:
            fs.remove(c)
        out = poly * (T * U) ** (r + s - tu_drop)
        for f in fs:
            out = out * Tb(f)
        return out

    tot = term(FQ(l) * U * Q(k1 + 1) * (-1) ** (k1 + 1), [])
    tot = tot + term(Tb(l + k1 + 1) * U * Q(k + 1), [k + 1])
    tot = tot + term(Sp(l, k1), [])
    for ki in kk:
        tot = tot + term(Tb(l + k1 + 1) * S(ki), [ki + 1])
    if r >= 1:
        tot = tot + term(Ub(l + k1, kk[0]), [kk[0] + 1], 1)
        for i in range(len(kk) - 1):
            tot = tot + term(Tb(l + k1 + 1) * Ub(kk[i], kk[i + 1]), [kk[i] + 1, kk[i + 1] + 1], 1)
    return tot


def explicit_L_report(words: Iterable[str]) -> List[ExplicitResult]:
    out = []
    for w in words:
        comp = L_word(w)
        if unprimed_part(w) == "e":
            out.append(ExplicitResult(w, "not_applicable", comp, None, "unprimed part is e"))
            continue
        exp = _explicit_L(w)
        status = "match" if exp == comp else "mismatch"
        note = "" if status == "match" else ("unprimed part has no d" if "d" not in unprimed_part(w) else "")
        out.append(ExplicitResult(w, status, comp, exp, note))
    return out


def format_explicit_report(results: Iterable[ExplicitResult]) -> str:
    """Tab-separated table: word, status, compositional value, closed-form value, note."""
    lines = ["word\tstatus\tcompositional\texplicit\tnote"]
    for r in results:
        exp = format_comm(r.explicit) if r.explicit is not None else "-"
        lines.append(f"{format_word(r.word)}\t{r.status}\t{format_comm(r.compositional)}\t{exp}\t{r.note}")
    return "\n".join(lines) + "\n"
