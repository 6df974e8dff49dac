"""Acceptance criteria 1-10, exact equality throughout.

Values marked "displayed" are the published ones; everything else is
compared between two independent code paths.
"""

from pathlib import Path

import pytest

from cdindex import corpus
from cdindex import hpoly as hp
from cdindex import verify as vf
from cdindex.constructions import boolean, cube_lattice, polygon
from cdindex.indices import (
    C,
    ab_index,
    _cd_of_closed,
    bary_local_cd,
    boolean_cd,
    cd_index,
    local_cd_index,
    mixed_cd_index,
)
from cdindex.ncpoly import (
    NCPoly,
    cd_to_ab,
    cd_words,
    comodule_rho,
    coproduct,
    coproduct_word,
    mixed_words,
    parse,
    unprimed_part,
)
from cdindex.poset import boundary, is_eulerian, semisuspension
from cdindex.posetmap import is_sfs

from oracles import dense_ab_to_cd

RESULTS = {}
ARTIFACT = Path(__file__).resolve().parent.parent / "artifacts" / "explicit_L_report.tsv"


def record(n, ok, summary):
    RESULTS[n] = (ok, summary)
    print(f"criterion {n}: {'PASS' if ok else 'FAIL'} - {summary}")
    assert ok, summary


def failures(pairs):
    return [k for k, a, b in pairs if a != b]


# displayed F/G table
FG_TABLE = [
    ("e", "0", "1"),
    ("1", "1", "u"),
    ("c", "u + t", "u^2"),
    ("c^2", "u^2 + t^2", "u^3 - t*u^2"),
    ("d", "t*u", "t*u^2"),
    ("c^3", "u^3 - t*u^2 - t^2*u + t^3", "u^4 - 2*t*u^3"),
    ("cd", "0", "0"),
    ("dc", "t*u^2 + t^2*u", "t*u^3"),
    ("c^4", "u^4 - 2*t*u^3 - 2*t^3*u + t^4", "u^5 - 3*t*u^4 + 2*t^2*u^3"),
    ("c^2d", "-t^2*u^2", "-t^2*u^3"),
    ("cdc", "0", "0"),
    ("dc^2", "t*u^3 + t^3*u", "t*u^4 - t^2*u^3"),
    ("d^2", "t^2*u^2", "t^2*u^3"),
]


def test_criterion_1_FG_table():
    bad = []
    for w, f, g in FG_TABLE:
        word = "" if w == "1" else next(iter(parse(w).terms))
        F, G = hp.parse_comm(f), hp.parse_comm(g)
        if hp.F_map(parse(w)) != F or hp.F_closed(word) != F:
            bad.append(f"F({w})")
        if hp.G_map(parse(w)) != G or hp.G_closed(word) != G:
            bad.append(f"G({w})")
    record(1, not bad and len(FG_TABLE) == 13, f"13 rows, recursive and closed forms; mismatches {bad}")


def test_criterion_2_cd_fixtures():
    pairs = [
        ("B2", cd_index(boolean(2)), parse("c")),
        ("B3", cd_index(boolean(3)), parse("c^2 + d")),
        ("hexagon", cd_index(polygon(6)), parse("c^2 + 4*d")),
        ("cube", cd_index(cube_lattice()), parse("c^3 + 6*dc + 4*cd")),
    ]
    for n in range(0, 7):
        B = boolean(n)
        # direct: flag enumeration of the boundary, solved in the cd basis
        direct = dense_ab_to_cd(ab_index(boundary(B)), n - 1) if n > 1 else NCPoly.one()
        pairs.append((f"pyramid B{n}", boolean_cd(n), direct))
    bad = failures(pairs)
    record(2, not bad, f"fixtures and pyramid recursion for n<=6; mismatches {bad}")


def raw_local(P):
    """Local cd-index straight from its definition, with no Eulerian shortcut."""
    return _cd_of_closed(semisuspension(P)) - _cd_of_closed(boundary(P)) * C


def eulerian_corpus_posets():
    seen = {}
    for name, phi in corpus.sfs_corpus():
        for role, P in (("source", phi.source), ("target", phi.target)):
            if P.top is not None and P.n > 0 and is_eulerian(P):
                seen[(name, role)] = P
    return seen


def test_criterion_3_local_cd():
    pairs = [
        ("S2", local_cd_index(corpus.sigma(2).source), parse("d")),
        ("S3", local_cd_index(corpus.sigma(3).source), parse("5*cd + dc")),
    ]
    for n in range(1, 6):
        pairs.append((f"bary {n}", bary_local_cd(n), local_cd_index(corpus.sigma(n).source)))
    eul = eulerian_corpus_posets()
    for key, P in eul.items():
        pairs.append((f"zero {key}", raw_local(P), NCPoly.zero()))
    bad = failures(pairs)
    record(3, not bad, f"S2, S3, recursion n<=5, {len(eul)} Eulerian corpus posets; mismatches {bad}")


MIXED_CD = [
    ("sigma2", lambda: corpus.sigma(2), "c + d'e"),
    ("sigma3", lambda: corpus.sigma(3), "c^2 + d + 3*d' + 5*c'd'e + d'c'e"),
    ("bipyramid", corpus.bipyramid, "c^3 + 2*dc + 2*cd + d'c' + 2*c'd'"),
    # 4((c')^2 + d')d'e expanded
    ("cube triangulation", corpus.cube_triangulation, "c^3 + 6*dc + 4*cd + 6*c'd' + 4*c'^2d'e + 4*d'^2e"),
]


def criterion_4_pairs():
    return [(name, mixed_cd_index(make()), parse(want)) for name, make, want in MIXED_CD]


def test_criterion_4_mixed_cd():
    bad = failures(criterion_4_pairs())
    record(4, not bad, f"{len(MIXED_CD)} displayed mixed cd-indices; mismatches {bad}")


T, U = hp.T, hp.U
Tp, Up = hp.CommPoly.mono(tp=1), hp.CommPoly.mono(up=1)

LOCAL_H = [
    ("S2", lambda: corpus.sigma(2), T * U),
    ("S3", lambda: corpus.sigma(3), T * U ** 2 + T ** 2 * U),
    ("bipyramid", corpus.bipyramid, -(T ** 2) * U ** 2),
]
MIXED_H = [
    ("S2", lambda: corpus.sigma(2), (U * Up) ** 2 + T * Tp * U * Up),
    ("S3", lambda: corpus.sigma(3), (U * Up) ** 3 + 3 * Tp * T * U ** 2 * Up ** 2 + T * Tp * U * Up * (Tp * U + T * Up)),
    ("cube triangulation", corpus.cube_triangulation, (U * Up) ** 4 + 4 * T * Tp * (U * Up) ** 3),
    (
        "bipyramid",
        corpus.bipyramid,
        (U * Up) ** 4 + T * U ** 3 * Tp ** 2 * Up ** 2 + T ** 2 * U ** 2 * Tp * Up ** 3 - T ** 2 * U ** 2 * Tp ** 2 * Up ** 2,
    ),
]


def criterion_5_pairs():
    pairs = [(f"g(B{n})", hp.g_poly(boolean(n)), U ** n) for n in range(0, 7)]
    for name, make, want in LOCAL_H:
        phi = make()
        pairs.append((f"local h {name} direct", hp.local_h_poly(phi), want))
        pairs.append((f"local h {name} from Omega", hp.L_Omega(mixed_cd_index(phi)), want))
    for name, make, want in MIXED_H:
        phi = make()
        pairs.append((f"mixed h {name} direct", hp.mixed_h_poly(phi), want))
        pairs.append((f"mixed h {name} from Omega", hp.Hprime_Omega(mixed_cd_index(phi)), want))
    return pairs


def test_criterion_5_h_side():
    bad = failures(criterion_5_pairs())
    record(5, not bad, f"g(B_n) n<=6, 3 local h and 4 mixed h fixtures both ways; mismatches {bad}")


def criterion_6_reports():
    reps = []
    for name, phi in corpus.sfs_corpus():
        reps += [
            vf.verify_decomposition(phi, name),
            vf.verify_comodule(phi, name),
            vf.verify_mixed_maps(phi, name),
            vf.verify_specializations(phi, name),
        ]
    for name, sigma in corpus.near_eulerian_maps():
        reps.append(vf.verify_local_decomposition(sigma, name))
    for name, P, spec in corpus.cut_lemma_instances():
        reps.append(vf.verify_cut_lemma(P, spec, name))
    return reps


def test_criterion_6_theorem_suites():
    names = [n for n, _ in corpus.sfs_corpus()]
    coverage = {
        "sigma_n": all(f"sigma{n}" in names for n in range(1, 5)),
        "stellar": "stellar edge" in names,
        "single cuts": len(corpus.single_polygon_cuts()) == sum(n + n * (n - 1) // 2 for n in range(3, 7)),
        "sequences": len(corpus.polygon_sequences()) >= 5,
        "identities": sum(n.startswith("identity") for n in names) >= 2,
        "restrictions": any("below" in n or "above" in n for n in names),
        "extensions": any("extended" in n for n in names),
    }
    reps = criterion_6_reports()
    bad = [r.line() for r in reps if not r.passed]
    missing = [k for k, v in coverage.items() if not v]
    ok = not bad and not missing and len(names) >= 25
    record(6, ok, f"{len(names)} SFS instances, {len(reps)} checks; failures {bad[:3]}; missing {missing}")


def test_criterion_7_coalgebra():
    bad = []
    checked = 0
    for n in range(0, 7):
        for w in cd_words(n):
            D = coproduct_word(w)
            if D.map_factor(0, coproduct_word) != D.map_factor(1, coproduct_word):
                bad.append(f"coassoc {w}")
            eps = lambda u: 1 if u == "e" else 0
            if D.map_factor(0, eps).as_poly() != NCPoly.word(w) or D.map_factor(1, eps).as_poly() != NCPoly.word(w):
                bad.append(f"counit {w}")
            lhs = D.map_factor(0, lambda u: cd_to_ab(NCPoly.word(u))).map_factor(1, lambda u: cd_to_ab(NCPoly.word(u)))
            if lhs != coproduct(cd_to_ab(NCPoly.word(w))):
                bad.append(f"ab-level {w}")
            checked += 1
    for t in range(0, 7):
        for w in mixed_words(t):
            R = comodule_rho(NCPoly.word(w))
            if R.map_factor(0, lambda u: comodule_rho(NCPoly.word(u))) != R.map_factor(1, coproduct_word):
                bad.append(f"comodule {w}")
            if R.map_factor(1, lambda u: 1 if u == "e" else 0).as_poly() != NCPoly.word(w):
                bad.append(f"comodule counit {w}")
            checked += 1
    record(7, not bad, f"{checked} words; failures {bad[:5]}")


def test_criterion_8_sfs_equivalence():
    methods = ("definition", "characterization", "near_criterion")
    maps = list(corpus.sfs_corpus()) + list(corpus.near_eulerian_maps())
    disagree, wrong = [], []
    for name, phi in maps:
        oks = {is_sfs(phi, m).ok for m in methods}
        if oks != {True}:
            (disagree if len(oks) > 1 else wrong).append(name)
    negs = corpus.negative_maps()
    for name, phi in negs:
        oks = {is_sfs(phi, m).ok for m in methods}
        if oks != {False}:
            (disagree if len(oks) > 1 else wrong).append(name)
    ok = not disagree and not wrong and len(negs) >= 3
    record(8, ok, f"{len(maps)} corpus maps and {len(negs)} negatives; disagreements {disagree}, wrong {wrong}")


def test_criterion_9_explicit_L():
    words = [w for t in range(7) for w in mixed_words(t)]
    rep = hp.explicit_L_report(words)
    mismatches = [r for r in rep if r.status == "mismatch"]
    undocumented = [r.word for r in mismatches if "d" in unprimed_part(r.word)]
    artifact_current = ARTIFACT.exists() and ARTIFACT.read_text() == hp.format_explicit_report(rep)
    compositional_ok = not failures(criterion_4_pairs()) and not failures(criterion_5_pairs())
    compositional_ok = compositional_ok and all(r.passed for r in criterion_6_reports())
    n_match = sum(r.status == "match" for r in rep)
    ok = not undocumented and artifact_current and compositional_ok
    record(
        9,
        ok,
        f"{len(words)} words: {n_match} match, {len(mismatches)} documented divergences "
        f"(no d in the unprimed part, see {ARTIFACT.name}); undocumented {undocumented}; "
        f"compositional side passes 4-6: {compositional_ok}",
    )


def test_criterion_10_closed_form_examples():
    reps = [vf.verify_example_formulas("polygon", corpus.composite(s), s.name) for s in corpus.polygon_sequences()]
    reps.append(vf.verify_example_formulas("triangulation", corpus.cube_triangulation(), "cube triangulation"))
    reps.append(vf.verify_example_formulas("boundary3", corpus.bipyramid(), "bipyramid"))
    n_poly = len(corpus.polygon_sequences())
    bad = [r.line() for r in reps if not r.passed]
    record(10, not bad and n_poly >= 5, f"{n_poly} polygon subdivisions, cube triangulation, bipyramid; failures {bad}")


@pytest.mark.xfail(strict=True, reason="closed form read with r = 0 differs from the compositional map; see artifacts/explicit_L_report.tsv")
def test_explicit_L_on_words_without_d():
    words = [w for t in range(7) for w in mixed_words(t) if "d" not in unprimed_part(w) and unprimed_part(w) != "e"]
    rep = hp.explicit_L_report(words)
    assert all(r.status == "match" for r in rep)
