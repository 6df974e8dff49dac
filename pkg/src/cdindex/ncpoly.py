"""Noncommutative polynomials over the letters a, b, c, d, their primed copies, and e.

A word is a plain string.  Primed letters are stored as upper case
(``C`` is c', ``D`` is d'), so a mixed monomial w'.w is the string of its
primed letters followed by its unprimed letters.  The letter ``e`` has
degree -1 and annihilates every nonempty unprimed word: the only unprimed
parts that survive a product are e-free words and ``e`` itself.

Coefficients are ints or Fractions; exact throughout.
"""

from __future__ import annotations

import itertools
import re
from fractions import Fraction
from typing import Callable, Dict, Iterable, Iterator, Mapping, Optional, Tuple

DEGREE = {"a": 1, "b": 1, "c": 1, "d": 2, "A": 1, "B": 1, "C": 1, "D": 2, "e": -1}
PRIMED = frozenset("ABCD")
LETTER_ORDER = {ch: i for i, ch in enumerate("abcdABCDe")}
_DISPLAY = {"A": "a'", "B": "b'", "C": "c'", "D": "d'"}


class NotCDExpressible(ValueError):
    def __init__(self, residual: "NCPoly"):
        super().__init__(f"not expressible in c, d: residual {residual}")
        self.residual = residual


def _norm(q):
    if isinstance(q, Fraction) and q.denominator == 1:
        return q.numerator
    return q


def word_degree(w: str) -> int:
    return sum(DEGREE[ch] for ch in w)


def primed_part(w: str) -> str:
    return "".join(ch for ch in w if ch in PRIMED)


def unprimed_part(w: str) -> str:
    return "".join(ch for ch in w if ch not in PRIMED)


def mul_words(u: str, v: str) -> Optional[str]:
    """Product of two monomials, or None when the e-relations kill it."""
    if not u:
        return v
    if not v:
        return u
    pu, pv = primed_part(u), primed_part(v)
    uu, uv = unprimed_part(u), unprimed_part(v)
    if pu or pv:
        tail = uu + uv
        if "e" in tail and tail != "e":
            return None
        return pu + pv + tail
    w = u + v
    if "e" in w:
        return None
    return w


class NCPoly:
    """Finite linear combination of words with exact rational coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: Optional[Mapping[str, object]] = None):
        clean: Dict[str, object] = {}
        if terms:
            for w, q in terms.items():
                q = _norm(q)
                if q != 0:
                    clean[w] = clean.get(w, 0) + q
            clean = {w: _norm(q) for w, q in clean.items() if q != 0}
        self.terms = clean

    # construction helpers
    @classmethod
    def word(cls, w: str, coeff=1) -> "NCPoly":
        return cls({w: coeff})

    @classmethod
    def one(cls) -> "NCPoly":
        return cls({"": 1})

    @classmethod
    def zero(cls) -> "NCPoly":
        return cls()

    @classmethod
    def from_text(cls, text: str) -> "NCPoly":
        return parse(text)

    # basic protocol
    def __iter__(self) -> Iterator[Tuple[str, object]]:
        return iter(self.terms.items())

    def __len__(self) -> int:
        return len(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = NCPoly({"": other})
        if not isinstance(other, NCPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self) -> str:
        return f"NCPoly({format_poly(self)!r})"

    def __str__(self) -> str:
        return format_poly(self)

    def coeff(self, w: str):
        return self.terms.get(w, 0)

    # arithmetic
    def __add__(self, other) -> "NCPoly":
        other = _coerce(other)
        out = dict(self.terms)
        for w, q in other.terms.items():
            out[w] = out.get(w, 0) + q
        return NCPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "NCPoly":
        return NCPoly({w: -q for w, q in self.terms.items()})

    def __sub__(self, other) -> "NCPoly":
        return self + (-_coerce(other))

    def __rsub__(self, other) -> "NCPoly":
        return _coerce(other) - self

    def __mul__(self, other) -> "NCPoly":
        if isinstance(other, (int, Fraction)):
            return NCPoly({w: q * other for w, q in self.terms.items()})
        other = _coerce(other)
        out: Dict[str, object] = {}
        for u, p in self.terms.items():
            for v, q in other.terms.items():
                w = mul_words(u, v)
                if w is not None:
                    out[w] = out.get(w, 0) + p * q
        return NCPoly(out)

    def __rmul__(self, other) -> "NCPoly":
        if isinstance(other, (int, Fraction)):
            return self * other
        return _coerce(other) * self

    def __pow__(self, k: int) -> "NCPoly":
        out = NCPoly.one()
        for _ in range(k):
            out = out * self
        return out

    # structure
    def degrees(self) -> set:
        return {word_degree(w) for w in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def homogeneous_part(self, n: int) -> "NCPoly":
        return NCPoly({w: q for w, q in self.terms.items() if word_degree(w) == n})

    def letters(self) -> set:
        return {ch for w in self.terms for ch in w}

    def map_words(self, f: Callable[[str], "NCPoly"]) -> "NCPoly":
        out = NCPoly()
        for w, q in self.terms.items():
            out = out + f(w) * q
        return out

    def is_integral(self) -> bool:
        return all(isinstance(q, int) for q in self.terms.values())


MixedPoly = NCPoly  # elements of R'_Phi (x) R^e_Phi share the representation


def _coerce(x) -> NCPoly:
    if isinstance(x, NCPoly):
        return x
    if isinstance(x, (int, Fraction)):
        return NCPoly({"": x})
    if isinstance(x, str):
        return parse(x)
    raise TypeError(f"cannot use {type(x).__name__} as a polynomial")


def P(text: str) -> NCPoly:
    """Shorthand parser, e.g. ``P("c^2 + d")``."""
    return parse(text)


# ---------------------------------------------------------------------------
# canonical text


def sort_key(w: str):
    return (word_degree(w), word_degree(primed_part(w)), [LETTER_ORDER[ch] for ch in w])


def format_word(w: str) -> str:
    if not w:
        return "1"
    out = []
    for ch, run in itertools.groupby(w):
        k = len(list(run))
        s = _DISPLAY.get(ch, ch)
        out.append(s if k == 1 else f"{s}^{k}")
    return "".join(out)


def _format_coeff(q) -> str:
    return str(q)


def format_poly(p: NCPoly) -> str:
    if not p.terms:
        return "0"
    parts = []
    for i, w in enumerate(sorted(p.terms, key=sort_key)):
        q = p.terms[w]
        neg = q < 0
        mag = -q if neg else q
        if w == "":
            body = _format_coeff(mag)
        elif mag == 1:
            body = format_word(w)
        else:
            body = f"{_format_coeff(mag)}*{format_word(w)}"
        if i == 0:
            parts.append(("-" if neg else "") + body)
        else:
            parts.append((" - " if neg else " + ") + body)
    return "".join(parts)


_TERM_RE = re.compile(r"\s*([+-])?\s*([^+-]+)")
_COEFF_RE = re.compile(r"^(\d+(?:/\d+)?)\s*\*?\s*")
_LETTER_RE = re.compile(r"([abcde])('?)(?:\^(\d+))?")


def parse_word(s: str) -> str:
    s = s.replace(" ", "")
    if s in ("", "1"):
        return ""
    out = []
    pos = 0
    while pos < len(s):
        m = _LETTER_RE.match(s, pos)
        if not m:
            raise ValueError(f"bad word {s!r} at offset {pos}")
        ch = m.group(1)
        if m.group(2):
            if ch == "e":
                raise ValueError("e has no primed version")
            ch = ch.upper()
        out.append(ch * int(m.group(3) or 1))
        pos = m.end()
    return "".join(out)


def parse(text: str) -> NCPoly:
    """Parse canonical text (and a few relaxations: explicit repeats, spaces)."""
    text = text.strip()
    if text in ("", "0"):
        return NCPoly()
    out: Dict[str, object] = {}
    pos = 0
    first = True
    while pos < len(text):
        m = _TERM_RE.match(text, pos)
        if not m or (not first and not m.group(1)):
            raise ValueError(f"cannot parse polynomial {text!r} at offset {pos}")
        first = False
        sign = -1 if m.group(1) == "-" else 1
        body = m.group(2).strip()
        cm = _COEFF_RE.match(body)
        coeff = 1
        if cm:
            coeff = Fraction(cm.group(1))
            body = body[cm.end():]
        w = parse_word(body)
        out[w] = out.get(w, 0) + sign * coeff
        pos = m.end()
    return NCPoly(out)


# ---------------------------------------------------------------------------
# ab <-> cd


_CD_AB = {
    "c": {"a": 1, "b": 1},
    "d": {"ab": 1, "ba": 1},
    "C": {"A": 1, "B": 1},
    "D": {"AB": 1, "BA": 1},
}


def cd_to_ab(p: NCPoly) -> NCPoly:
    """Substitute c = a + b, d = ab + ba (and primed versions); e is fixed."""
    cache: Dict[str, NCPoly] = {}

    def expand(w: str) -> NCPoly:
        if w not in cache:
            out = NCPoly.one()
            for ch in w:
                out = out * NCPoly(_CD_AB.get(ch, {ch: 1}))
            cache[w] = out
        return cache[w]

    return p.map_words(expand)


def _to_cz(terms: Mapping[str, object]) -> Dict[str, object]:
    """Rewrite an ab-polynomial in the letters c = a+b and z = a-b.

    Works position by position so the intermediate size stays at most 2^n.
    """
    cur = {w: Fraction(q) for w, q in terms.items()}
    n = max((len(w) for w in cur), default=0)
    half = Fraction(1, 2)
    for i in range(n):
        nxt: Dict[str, Fraction] = {}
        for w, q in cur.items():
            if i >= len(w):
                nxt[w] = nxt.get(w, 0) + q
                continue
            ch = w[i]
            head, tail = w[:i], w[i + 1:]
            wc, wz = head + "c" + tail, head + "z" + tail
            nxt[wc] = nxt.get(wc, 0) + half * q
            nxt[wz] = nxt.get(wz, 0) + (half * q if ch == "a" else -half * q)
        cur = {w: q for w, q in nxt.items() if q != 0}
    return cur


_ZZ = {"cc": 1, "d": -2}  # z^2 = c^2 - 2d


def _cz_to_cd(w: str) -> NCPoly:
    out = NCPoly.one()
    i = 0
    while i < len(w):
        if w[i] == "c":
            out = out * NCPoly.word("c")
            i += 1
        else:
            out = out * NCPoly(_ZZ)
            i += 2
    return out


def _z_runs(w: str):
    return [len(list(g)) for ch, g in itertools.groupby(w) if ch == "z"]


def ab_to_cd(p: NCPoly) -> Tuple[NCPoly, NCPoly, object]:
    """Write p = f(c, d) + g(c, d) * a + e_coeff * e with f, g unique.

    Raises NotCDExpressible if no such decomposition exists.
    """
    e_coeff = p.coeff("e")
    rest = {w: q for w, q in p.terms.items() if w != "e"}
    bad = {ch for w in rest for ch in w} - {"a", "b"}
    if bad:
        raise ValueError(f"ab_to_cd expects a, b, e only; got {sorted(bad)}")
    cz = _to_cz(rest)
    f_cz: Dict[str, object] = {}
    g_cz: Dict[str, object] = {}
    residual: Dict[str, object] = {}
    for w, q in cz.items():
        runs = _z_runs(w)
        if all(r % 2 == 0 for r in runs):
            f_cz[w] = q
        elif w.endswith("z") and all(r % 2 == 0 for r in runs[:-1]):
            # g*a = g*c/2 + g*z/2, so this term is half of g * z
            g_cz[w[:-1]] = 2 * q
        else:
            residual[w] = q
    if residual:
        back = {"c": NCPoly({"a": 1, "b": 1}), "z": NCPoly({"a": 1, "b": -1})}
        res = NCPoly()
        for w, q in residual.items():
            term = NCPoly.one()
            for ch in w:
                term = term * back[ch]
            res = res + term * _norm(Fraction(q))
        raise NotCDExpressible(res)
    # remove g*c/2 from the f side
    for w, q in g_cz.items():
        wc = w + "c"
        f_cz[wc] = f_cz.get(wc, 0) - Fraction(q) / 2
    f_cz = {w: q for w, q in f_cz.items() if q != 0}
    f = NCPoly()
    for w, q in f_cz.items():
        f = f + _cz_to_cd(w) * _norm(Fraction(q))
    g = NCPoly()
    for w, q in g_cz.items():
        g = g + _cz_to_cd(w) * _norm(Fraction(q))
    return f, g, e_coeff


def to_cd(p: NCPoly) -> NCPoly:
    """cd-form of a polynomial that must have no g-part."""
    f, g, e_coeff = ab_to_cd(p)
    if g:
        raise NotCDExpressible(g * NCPoly.word("a"))
    return f + NCPoly({"e": e_coeff})


def swap_ab(p: NCPoly) -> NCPoly:
    tr = str.maketrans("ab", "ba")
    return NCPoly({w.translate(tr): q for w, q in p.terms.items()})


# ---------------------------------------------------------------------------
# tensors, coproduct, counit, comodule map


class TensorPoly:
    """Linear combination of pairs of words (left, right)."""

    __slots__ = ("terms",)

    def __init__(self, terms: Optional[Mapping[Tuple[str, ...], object]] = None):
        clean: Dict[Tuple[str, ...], object] = {}
        for k, q in (terms or {}).items():
            q = _norm(q)
            if q != 0:
                clean[k] = clean.get(k, 0) + q
        self.terms = {k: _norm(q) for k, q in clean.items() if q != 0}

    def __eq__(self, other) -> bool:
        if not isinstance(other, TensorPoly):
            return NotImplemented
        return self.terms == other.terms

    def __add__(self, other: "TensorPoly") -> "TensorPoly":
        out = dict(self.terms)
        for k, q in other.terms.items():
            out[k] = out.get(k, 0) + q
        return TensorPoly(out)

    def __sub__(self, other: "TensorPoly") -> "TensorPoly":
        return self + other.scale(-1)

    def scale(self, q) -> "TensorPoly":
        return TensorPoly({k: v * q for k, v in self.terms.items()})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __iter__(self):
        return iter(self.terms.items())

    def __repr__(self) -> str:
        return f"TensorPoly({format_tensor(self)!r})"

    def __str__(self) -> str:
        return format_tensor(self)

    @classmethod
    def pure(cls, left: NCPoly, right: NCPoly) -> "TensorPoly":
        out: Dict[Tuple[str, str], object] = {}
        for u, p in left.terms.items():
            for v, q in right.terms.items():
                out[(u, v)] = out.get((u, v), 0) + p * q
        return cls(out)

    def map_factor(self, i: int, f: Callable[[str], object]) -> "TensorPoly":
        """Apply a linear map word -> TensorPoly/NCPoly/scalar to factor i."""
        out = TensorPoly()
        acc: Dict[Tuple[str, ...], object] = {}
        for key, q in self.terms.items():
            img = f(key[i])
            if isinstance(img, TensorPoly):
                for sub, r in img.terms.items():
                    k = key[:i] + sub + key[i + 1:]
                    acc[k] = acc.get(k, 0) + q * r
            elif isinstance(img, NCPoly):
                for w, r in img.terms.items():
                    k = key[:i] + (w,) + key[i + 1:]
                    acc[k] = acc.get(k, 0) + q * r
            else:
                if img:
                    k = key[:i] + key[i + 1:]
                    acc[k] = acc.get(k, 0) + q * img
        out = TensorPoly(acc)
        return out

    def as_poly(self) -> NCPoly:
        """View a tensor with a single factor as a polynomial."""
        out: Dict[str, object] = {}
        for key, q in self.terms.items():
            if len(key) != 1:
                raise ValueError("tensor has more than one factor")
            out[key[0]] = out.get(key[0], 0) + q
        return NCPoly(out)


def format_tensor(t: TensorPoly) -> str:
    if not t.terms:
        return "0"

    def key(k):
        return tuple(sort_key(w) for w in k)

    parts = []
    for i, k in enumerate(sorted(t.terms, key=key)):
        q = t.terms[k]
        neg = q < 0
        mag = -q if neg else q
        body = "(" + " | ".join(format_word(w) for w in k) + ")"
        if mag != 1:
            body = f"{mag}*{body}"
        if i == 0:
            parts.append(("-" if neg else "") + body)
        else:
            parts.append((" - " if neg else " + ") + body)
    return "".join(parts)


def _reduced_coproduct_ab(w: str) -> Dict[Tuple[str, str], int]:
    out: Dict[Tuple[str, str], int] = {}
    for i in range(len(w)):
        k = (w[:i], w[i + 1:])
        out[k] = out.get(k, 0) + 1
    return out


_DELTA0_CD = {
    "c": {("", ""): 2},
    "d": {("c", ""): 1, ("", "c"): 1},
}


def _reduced_coproduct_cd(w: str) -> Dict[Tuple[str, str], int]:
    out: Dict[Tuple[str, str], int] = {}
    for i, ch in enumerate(w):
        head, tail = w[:i], w[i + 1:]
        for (l, r), q in _DELTA0_CD[ch].items():
            k = (head + l, r + tail)
            out[k] = out.get(k, 0) + q
    return out


def coproduct_word(w: str) -> TensorPoly:
    if w == "e":
        return TensorPoly({("e", "e"): 1})
    letters = set(w)
    if letters <= {"a", "b"}:
        red = _reduced_coproduct_ab(w)
    elif letters <= {"c", "d"}:
        red = _reduced_coproduct_cd(w)
    else:
        raise ValueError(f"coproduct is defined on ab- or cd-words, got {w!r}")
    terms: Dict[Tuple[str, str], object] = dict(red)
    terms[("e", w)] = terms.get(("e", w), 0) + 1
    terms[(w, "e")] = terms.get((w, "e"), 0) + 1
    return TensorPoly(terms)


def coproduct(p: NCPoly) -> TensorPoly:
    acc = TensorPoly()
    out: Dict[Tuple[str, ...], object] = {}
    for w, q in p.terms.items():
        for k, r in coproduct_word(w).terms.items():
            out[k] = out.get(k, 0) + q * r
    acc = TensorPoly(out)
    return acc


def counit(p: NCPoly):
    return p.coeff("e")


def comodule_rho(m: NCPoly) -> TensorPoly:
    """rho(w'.w) = w'.Delta(w), landing in R_Omega (x) R^e_Phi."""
    out: Dict[Tuple[str, str], object] = {}
    for w, q in m.terms.items():
        wp, wu = primed_part(w), unprimed_part(w)
        for (l, r), c in coproduct_word(wu).terms.items():
            left = mul_words(wp, l) if wp else l
            if left is None:
                continue
            out[(left, r)] = out.get((left, r), 0) + q * c
    return TensorPoly(out)


# ---------------------------------------------------------------------------
# substitution


def specialize(p: NCPoly, subst: Mapping[str, object]) -> NCPoly:
    """Homomorphic substitution letter -> polynomial (letters as displayed, e.g. "c'")."""
    table: Dict[str, NCPoly] = {}
    for k, v in subst.items():
        table[parse_word(k)] = _coerce(v) if not isinstance(v, NCPoly) else v

    def image(w: str) -> NCPoly:
        out = NCPoly.one()
        for ch in w:
            out = out * table.get(ch, NCPoly.word(ch))
            if not out:
                break
        return out

    return p.map_words(image)


def prime(p: NCPoly) -> NCPoly:
    """c -> c', d -> d' (and a, b likewise)."""
    return NCPoly({w.upper().replace("E", "e"): q for w, q in p.terms.items()})


def unprime(p: NCPoly) -> NCPoly:
    return NCPoly({w.lower(): q for w, q in p.terms.items()})


# ---------------------------------------------------------------------------
# word enumeration


def words_of_degree(alphabet: str, n: int) -> Iterator[str]:
    """All words over the alphabet (degrees from DEGREE) of exact degree n >= 0."""
    if n == 0:
        yield ""
        return
    for ch in alphabet:
        k = DEGREE[ch]
        if 0 < k <= n:
            for rest in words_of_degree(alphabet, n - k):
                yield ch + rest


def cd_words(n: int) -> Iterable[str]:
    return list(words_of_degree("cd", n))


def ab_words(n: int) -> Iterable[str]:
    return ["".join(t) for t in itertools.product("ab", repeat=n)]


def mixed_words(total: int) -> list:
    """Mixed monomials w'.w of the given total degree, w a cd-word or e."""
    out = []
    for dp in range(0, total + 2):
        for wp in words_of_degree("CD", dp):
            rest = total - dp
            if rest >= 0:
                out.extend(wp + w for w in words_of_degree("cd", rest))
            if rest == -1:
                out.append(wp + "e")
    return out
