"""Theorem checkers. Each computes both sides through separate code paths
and compares them exactly."""

from __future__ import annotations

from dataclasses import asdict, dataclass

from . import hpoly as hp
from .indices import (
    ab_index,
    NotInScope,
    cd_index,
    cd_index_from_ab,
    cut_cd_delta,
    interval_cd,
    local_cd_index,
    mixed_cd_index,
)
from .ncpoly import NCPoly, TensorPoly, ab_to_cd, comodule_rho, format_poly, format_tensor, parse, specialize
from .poset import Poset, PosetError, boundary_ids, interval, is_eulerian, is_near_eulerian
from .posetmap import CutSpec, PosetMap, cut, require_sfs, restrict_below


class ShapeMismatch(PosetError):
    pass


@dataclass
class VerifyReport:
    theorem: str
    instance: str
    lhs: str
    rhs: str
    passed: bool
    detail: str = ""

    def to_dict(self) -> dict:
        return asdict(self)

    def __bool__(self) -> bool:
        return self.passed

    def line(self) -> str:
        mark = "PASS" if self.passed else "FAIL"
        return f"{mark} {self.theorem} [{self.instance}]: {self.lhs} == {self.rhs}"


def _report(theorem, instance, lhs, rhs, fmt=format_poly, detail="") -> VerifyReport:
    ok = lhs == rhs
    if not ok and not detail:
        detail = f"difference: {fmt(lhs - rhs)}"
    return VerifyReport(theorem, instance, fmt(lhs), fmt(rhs), ok, detail)


def _name(phi: PosetMap, instance: str) -> str:
    if instance:
        return instance
    return f"{phi.source.name or 'source'} -> {phi.target.name or 'target'}"


def _target_eulerian(phi: PosetMap) -> None:
    B = phi.target
    if B.top is None or not is_eulerian(B):
        raise NotInScope("target must be Eulerian")


def verify_decomposition(phi: PosetMap, instance: str = "") -> VerifyReport:
    """Phi_Gamma = sum_x l(Gamma_x) Phi[x, 1] with Phi[1, 1] = 1."""
    require_sfs(phi)
    _target_eulerian(phi)
    B = phi.target
    lhs = cd_index_from_ab(phi.source)
    rhs = NCPoly.zero()
    for x in B.ordered():
        Gx = phi.source.subposet(phi.preimage_below(x))
        tail = NCPoly.one() if x == B.top else cd_index(interval(B, x, B.top))
        rhs = rhs + local_cd_index(Gx) * tail
    rep = _report("decomposition", _name(phi, instance), lhs, rhs)
    G = phi.source
    if rep.passed and G.top is not None and is_eulerian(G):
        if local_cd_index(G) or not lhs.is_homogeneous():
            rep.passed = False
            rep.detail = "Eulerian source with nonzero local index or inhomogeneous cd-index"
    return rep


def _upper_index(G: Poset, y: str, near: bool) -> NCPoly:
    up = interval(G, y)
    return local_cd_index(up) if near else cd_index(up)


def verify_local_decomposition(sigma: PosetMap, instance: str = "") -> VerifyReport:
    """l(Pi) = sum over boundary y of l(Pi_y) l[y, oo) + sum over interior y of l(Pi_y) Phi[y, oo)."""
    require_sfs(sigma)
    Pi, G = sigma.source, sigma.target
    for X in (Pi, G):
        if not is_near_eulerian(X):
            raise NotInScope("both posets must be near-Eulerian")
    # the cd-expressible part of Psi_Pi is the local index
    lhs, _, _ = ab_to_cd(ab_index(Pi))
    bd = set(boundary_ids(G))
    rhs = NCPoly.zero()
    for y in G.ordered():
        loc = local_cd_index(Pi.subposet(sigma.preimage_below(y)))
        if loc:
            rhs = rhs + loc * _upper_index(G, y, y in bd)
    return _report("local-decomposition", _name(sigma, instance), lhs, rhs)


def verify_comodule(phi: PosetMap, instance: str = "") -> VerifyReport:
    """rho(Omega_phi) = sum_x Omega_{phi_x} (x) Phi[x, 1]."""
    require_sfs(phi)
    _target_eulerian(phi)
    B = phi.target
    lhs = comodule_rho(mixed_cd_index(phi, check=False))
    rhs = TensorPoly()
    for x in B.ordered():
        om = mixed_cd_index(restrict_below(phi, x), check=False)
        rhs = rhs + TensorPoly.pure(om, interval_cd(B, x))
    return _report("comodule", _name(phi, instance), lhs, rhs, fmt=format_tensor)


def verify_specializations(phi: PosetMap, instance: str = "") -> VerifyReport:
    """Omega at (c', d', e) -> (c, d, 1) is Phi_Gamma; at (0, 0, 1) it is Phi_B."""
    require_sfs(phi)
    _target_eulerian(phi)
    om = mixed_cd_index(phi, check=False)
    to_source = specialize(om, {"c'": parse("c"), "d'": parse("d"), "e": 1})
    to_target = specialize(om, {"c'": 0, "d'": 0, "e": 1})
    lhs = f"{format_poly(to_source)} ; {format_poly(to_target)}"
    want_s = cd_index_from_ab(phi.source)
    want_t = cd_index_from_ab(phi.target)
    rhs = f"{format_poly(want_s)} ; {format_poly(want_t)}"
    ok = to_source == want_s and to_target == want_t
    return VerifyReport("specialization", _name(phi, instance), lhs, rhs, ok)


def verify_mixed_maps(phi: PosetMap, instance: str = "") -> VerifyReport:
    """H(Omega) = h(Gamma), L(Omega) = local h, H'(Omega) = mixed h."""
    require_sfs(phi)
    _target_eulerian(phi)
    om = mixed_cd_index(phi, check=False)
    pairs = [
        ("H", hp.H_Omega(om), hp.h_poly(phi.source)),
        ("L", hp.L_Omega(om), hp.local_h_poly(phi, check=False)),
        ("H'", hp.Hprime_Omega(om), hp.mixed_h_poly(phi, check=False)),
    ]
    lhs = " ; ".join(hp.format_comm(a) for _, a, _ in pairs)
    rhs = " ; ".join(hp.format_comm(b) for _, _, b in pairs)
    bad = [k for k, a, b in pairs if a != b]
    return VerifyReport("mixed-maps", _name(phi, instance), lhs, rhs, not bad, f"failed: {bad}" if bad else "")


def verify_cut_lemma(P: Poset, spec: CutSpec, instance: str = "") -> VerifyReport:
    """Phi_Pi - Phi_P = Phi_I d Phi[x0, oo)."""
    if not is_near_eulerian(P):
        raise NotInScope("the cut lemma needs a near-Eulerian poset")
    Pi, _ = cut(P, spec)
    lhs = cd_index_from_ab(Pi) - cd_index_from_ab(P)
    rhs = cut_cd_delta(P, spec.I, spec.x0)
    return _report("cut-lemma", instance or f"{P.name or 'P'} at {spec.x0}", lhs, rhs)


# ----------------------------------------------------------------------
# closed-form examples


def subdivision_counts(phi: PosetMap) -> dict:
    """beta, gamma, epsilon: new vertices on edges, vertices and edges in 2-faces."""
    G, B = phi.source, phi.target

    def count(rg, rb):
        return sum(1 for y in G.elements if G.rank(y) == rg and B.rank(phi(y)) == rb)

    return {"beta": count(1, 2), "gamma": count(1, 3), "epsilon": count(2, 3)}


def polygon_formulas(n: int, beta: int, gamma: int, eps: int):
    om = parse(f"c^2 + {n - 2}*d + {beta}*d' + {gamma}*d'c'e + {eps - gamma}*c'd'e")
    T, U = hp.T, hp.U
    Tp, Up = hp.CommPoly.mono(tp=1), hp.CommPoly.mono(up=1)
    h = (U * Up) ** 3 + (n - 3 + beta) * T * Tp * U ** 2 * Up ** 2 + gamma * T * Tp * U * Up * (Tp * U + T * Up)
    return om, h


def boundary3_formulas(f0: int, f2: int, beta: int, gamma: int, eps: int):
    om = parse(f"c^3 + {f0 - 2}*dc + {f2 - 2}*cd + {beta}*d'c + {gamma}*d'c' + {eps - gamma}*c'd'")
    T, U = hp.T, hp.U
    Tp, Up = hp.CommPoly.mono(tp=1), hp.CommPoly.mono(up=1)
    h = (U * Up) ** 4 + (f0 - 4 + beta) * T * Tp * (U * Up) ** 3 + gamma * (
        T * Tp ** 2 * U ** 3 * Up ** 2 + T ** 2 * Tp * U ** 2 * Up ** 3 - T ** 2 * Tp ** 2 * U ** 2 * Up ** 2
    )
    return om, h


def triangulation_formulas(f0: int, f1: int, f2: int, f3: int):
    om = parse(
        f"c^3 + {f0 - 2}*dc + {f2 - 2}*cd + {2 * f1 - 3 * f2}*c'd' + {f3 - 1}*c'^2d'e + {f3 - 1}*d'^2e"
    )
    T, U = hp.T, hp.U
    Tp, Up = hp.CommPoly.mono(tp=1), hp.CommPoly.mono(up=1)
    h = (U * Up) ** 4 + (f0 - 4) * T * Tp * (U * Up) ** 3
    return om, h


def verify_example_formulas(kind: str, phi: PosetMap, instance: str = "") -> VerifyReport:
    require_sfs(phi)
    _target_eulerian(phi)
    G, B = phi.source, phi.target
    fv = B.f_vector()
    counts = subdivision_counts(phi)
    if kind == "polygon":
        if B.n != 3:
            raise ShapeMismatch("target is not a polygon")
        om_f, h_f = polygon_formulas(fv[1], counts["beta"], counts["gamma"], counts["epsilon"])
    elif kind == "boundary3":
        if B.n != 4 or G.top is None or not is_eulerian(G):
            raise ShapeMismatch("need a 3-polytope target and an Eulerian source")
        om_f, h_f = boundary3_formulas(fv[1], fv[3], counts["beta"], counts["gamma"], counts["epsilon"])
    elif kind == "triangulation":
        if B.n != 4:
            raise ShapeMismatch("target is not a 3-polytope")
        for y in G.of_rank(1):
            if B.rank(phi(y)) != 1:
                raise ShapeMismatch(f"vertex {y} is new; the formula needs no new vertices")
        for x in B.elements:
            ranks = {G.rank(y) for y in phi.fiber(x)}
            if B.rank(x) == 3 and not ranks <= {2, 3}:
                raise ShapeMismatch(f"fiber over {x} has ranks {sorted(ranks)}")
            if x == B.top and not ranks <= {3, 4}:
                raise ShapeMismatch(f"fiber over the top has ranks {sorted(ranks)}")
        f3 = len(G.of_rank(4))
        om_f, h_f = triangulation_formulas(fv[1], fv[2], fv[3], f3)
    else:
        raise ValueError(f"unknown example kind {kind!r}")
    om = mixed_cd_index(phi, check=False)
    h = hp.Hprime_Omega(om)
    h_direct = hp.mixed_h_poly(phi, check=False)
    lhs = f"{format_poly(om)} ; {hp.format_comm(h)}"
    rhs = f"{format_poly(om_f)} ; {hp.format_comm(h_f)}"
    ok = om == om_f and h == h_f and h_direct == h_f
    detail = f"counts={counts}" + ("" if h_direct == h_f else " ; direct mixed h differs")
    return VerifyReport(f"example-{kind}", _name(phi, instance), lhs, rhs, ok, detail)
