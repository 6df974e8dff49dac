"""Command-line front end.

Poset files are JSON documents with `name`, `elements` and `covers`. Map
files hold `source`, `target` (inline posets or paths, relative to the map
file) and `assignment` as [source, target] pairs. Cut files hold `x0`,
`sigma1`, `sigma2` and optionally `names`.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import List, Optional

from . import constructions as cons
from . import corpus
from . import hpoly as hp
from . import indices as ix
from . import verify as vf
from .ncpoly import NCPoly, format_poly, parse
from .poset import Poset, PosetError, classify
from .posetmap import CutSpec, PosetMap, build_map, cut, intermediate_factorization, is_sfs


class ParseError(ValueError):
    pass


class UsageError(ValueError):
    pass


EXIT_USAGE = 2
EXIT_DOMAIN = 1


# ----------------------------------------------------------------------
# files


def _read_doc(path: str) -> dict:
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except FileNotFoundError:
        raise ParseError(f"{path}: no such file")
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: line {exc.lineno}: {exc.msg}")
    if not isinstance(doc, dict):
        raise ParseError(f"{path}: top level must be an object")
    return doc


def poset_from_doc(doc: dict, where: str = "poset") -> Poset:
    for key in ("elements", "covers"):
        if key not in doc:
            raise ParseError(f"{where}: missing field {key!r}")
    elements = [str(e) for e in doc["elements"]]
    seen = set()
    for e in elements:
        if e in seen:
            raise ParseError(f"{where}: duplicate id {e!r}")
        seen.add(e)
    covers = []
    for k, pair in enumerate(doc["covers"]):
        if not isinstance(pair, (list, tuple)) or len(pair) != 2:
            raise ParseError(f"{where}: covers[{k}] is not a pair")
        lo, hi = str(pair[0]), str(pair[1])
        for z in (lo, hi):
            if z not in seen:
                raise ParseError(f"{where}: covers[{k}] references unknown id {z!r}")
        covers.append((lo, hi))
    try:
        return Poset(elements, covers, name=str(doc.get("name", "")))
    except PosetError as exc:
        raise ParseError(f"{where}: {exc}")


def _poset_field(val, base: str, where: str) -> Poset:
    if isinstance(val, str):
        path = val if os.path.isabs(val) else os.path.join(base, val)
        return poset_from_doc(_read_doc(path), path)
    if isinstance(val, dict):
        return poset_from_doc(val, where)
    raise ParseError(f"{where}: expected a path or an inline poset")


def map_from_doc(doc: dict, base: str = ".", where: str = "map") -> PosetMap:
    for key in ("source", "target", "assignment"):
        if key not in doc:
            raise ParseError(f"{where}: missing field {key!r}")
    src = _poset_field(doc["source"], base, f"{where}.source")
    tgt = _poset_field(doc["target"], base, f"{where}.target")
    assignment = {}
    for k, pair in enumerate(doc["assignment"]):
        y, x = str(pair[0]), str(pair[1])
        if y not in src:
            raise ParseError(f"{where}: assignment[{k}] references unknown source id {y!r}")
        if x not in tgt:
            raise ParseError(f"{where}: assignment[{k}] references unknown target id {x!r}")
        assignment[y] = x
    try:
        return build_map(src, tgt, assignment)
    except PosetError as exc:
        raise ParseError(f"{where}: {exc}")


def load(path: str):
    """A Poset or PosetMap, depending on the document's fields."""
    doc = _read_doc(path)
    if "assignment" in doc:
        return map_from_doc(doc, os.path.dirname(path) or ".", path)
    return poset_from_doc(doc, path)


def load_poset(path: str) -> Poset:
    obj = load(path)
    if not isinstance(obj, Poset):
        raise UsageError(f"{path} holds a map; a poset is needed")
    return obj


def load_map(path: str) -> PosetMap:
    obj = load(path)
    if not isinstance(obj, PosetMap):
        raise UsageError(f"{path} holds a poset; a map is needed")
    return obj


def load_cut(path: str, P: Poset) -> CutSpec:
    doc = _read_doc(path)
    for key in ("x0", "sigma1", "sigma2"):
        if key not in doc:
            raise ParseError(f"{path}: missing field {key!r}")
    names = tuple(doc["names"]) if doc.get("names") else None
    return CutSpec.make(str(doc["x0"]), [str(z) for z in doc["sigma1"]], [str(z) for z in doc["sigma2"]], names)


def _write(path: str, doc: dict) -> None:
    with open(path, "w") as fh:
        json.dump(doc, fh, indent=1)
        fh.write("\n")


# ----------------------------------------------------------------------
# output


class Out:
    def __init__(self, fmt: str):
        self.fmt = fmt

    def emit(self, text: str, data) -> None:
        if self.fmt == "structured":
            print(json.dumps(data, sort_keys=True))
        else:
            print(text)


def _terms(p: NCPoly) -> dict:
    return {"text": format_poly(p), "terms": {w: str(c) for w, c in sorted(p.terms.items())}}


def _comm(p: hp.CommPoly) -> dict:
    return {"text": hp.format_comm(p), "terms": [[list(k), str(c)] for k, c in sorted(p.terms.items())]}


# ----------------------------------------------------------------------
# subcommands


FIXTURES = {
    "stellar": corpus.stellar_edge,
    "stellar-solid": corpus.stellar_edge_solid,
    "bipyramid": corpus.bipyramid,
    "cube-triangulation": corpus.cube_triangulation,
}


def _simple_poset(kind: str, args) -> Poset:
    a = args.args
    if kind == "boolean":
        return cons.boolean(int(a[0]))
    if kind == "polygon":
        return cons.polygon(int(a[0]))
    if kind == "cube":
        return cons.cube_lattice()
    if kind == "simplicial":
        return cons.simplicial_face_poset([f.split(",") for f in a[0].split(";")])
    if kind == "face-lattice":
        return cons.face_lattice([f.split(",") for f in a[0].split(";")])
    if kind == "pyramid":
        return cons.pyramid(load_poset(a[0]))
    if kind == "product":
        return cons.polytope_product(load_poset(a[0]), load_poset(a[1]))
    if kind == "cartesian":
        return cons.cartesian_product(load_poset(a[0]), load_poset(a[1]))
    if kind == "join":
        return cons.join(load_poset(a[0]), load_poset(a[1]))
    raise UsageError(f"unknown construction {kind!r}")


def _write_map(path: str, phi: PosetMap, source_path: Optional[str], target_path: Optional[str]) -> None:
    doc = phi.to_dict()
    if source_path:
        doc["source"] = os.path.relpath(source_path, os.path.dirname(path) or ".")
    if target_path:
        doc["target"] = os.path.relpath(target_path, os.path.dirname(path) or ".")
    _write(path, doc)


def cmd_construct(args, out: Out) -> int:
    kind = args.kind
    if kind in ("bary", "cut", "fixture", "factor"):
        if kind == "bary":
            B = load_poset(args.args[0])
            G, phi = cons.barycentric(B)
            target_path = args.args[0]
        elif kind == "cut":
            if not args.cut:
                raise UsageError("construct cut needs --cut")
            B = load_poset(args.args[0])
            G, phi = cut(B, load_cut(args.cut, B))
            target_path = args.args[0]
        elif kind == "fixture":
            if args.args[0] not in FIXTURES:
                raise UsageError(f"unknown fixture; choose from {sorted(FIXTURES)}")
            phi = FIXTURES[args.args[0]]()
            G, target_path = phi.source, None
        else:
            phi = load_map(args.args[0])
            factors = intermediate_factorization(phi)
            if args.drop_identities:
                factors = [f for f in factors if not f.is_identity()]
            for i, f in enumerate(factors, 1):
                _write(f"{args.output}.{i}", f.to_dict())
            out.emit(f"{len(factors)} factors", {"factors": len(factors)})
            return 0
        _write(args.output, G.to_dict())
        if args.map:
            _write_map(args.map, phi, args.output, target_path)
        out.emit(f"wrote {args.output}", {"poset": args.output, "map": args.map})
        return 0
    P = _simple_poset(kind, args)
    _write(args.output, P.to_dict())
    out.emit(f"wrote {args.output}", {"poset": args.output})
    return 0


def cmd_check(args, out: Out) -> int:
    obj = load(args.file)
    if isinstance(obj, Poset):
        c = classify(obj)
        data = {k: sorted(v) if isinstance(v, (frozenset, set)) else v for k, v in vars(c).items()}
        text = "\n".join(f"{k}: {v}" for k, v in data.items())
        out.emit(text, data)
        return 0
    res = is_sfs(obj, args.method)
    data = {"sfs": res.ok, "method": res.method, "witness": repr(res.witness), "detail": res.detail}
    text = f"sfs: {res.ok}" + (f" ({res.detail}; witness {res.witness})" if not res.ok else "")
    out.emit(text, data)
    return 0


def cmd_index(args, out: Out) -> int:
    obj = load(args.file)
    kind = args.kind
    if kind == "mixed-cd":
        if not isinstance(obj, PosetMap):
            raise UsageError("mixed-cd needs a map file")
        p = ix.mixed_cd_index(obj)
    else:
        if isinstance(obj, PosetMap):
            raise UsageError(f"{kind} needs a poset file")
        if kind == "flag":
            p = ix.flag_enumerator(obj)
        elif kind == "ab":
            p = ix.ab_index(obj)
        elif kind == "cd":
            p = ix.cd_index(obj, args.mode)
        else:
            p = ix.local_cd_index(obj)
    out.emit(format_poly(p), _terms(p))
    return 0


def cmd_mixed_cd(args, out: Out) -> int:
    p = ix.mixed_cd_index(load_map(args.file))
    out.emit(format_poly(p), _terms(p))
    return 0


def cmd_hpoly(args, out: Out) -> int:
    obj = load(args.file)
    kind = args.kind
    if kind in ("local-h", "mixed-h"):
        if not isinstance(obj, PosetMap):
            raise UsageError(f"{kind} needs a map file")
        p = hp.local_h_poly(obj) if kind == "local-h" else hp.mixed_h_poly(obj)
    else:
        if isinstance(obj, PosetMap):
            raise UsageError(f"{kind} needs a poset file")
        p = hp.h_poly(obj) if kind == "h" else hp.g_poly(obj)
    if args.u_one:
        acc = hp.CommPoly()
        for (t, u, tp, up), c in p.terms.items():
            acc = acc + hp.CommPoly.mono(t=t, tp=tp, coeff=c)
        p = acc
    out.emit(hp.format_comm(p), _comm(p))
    return 0


MAPS = {
    "F": hp.F_map,
    "G": hp.G_map,
    "Gstar": hp.Gstar_map,
    "H": hp.H_Omega,
    "L": hp.L_Omega,
    "Hprime": hp.Hprime_Omega,
    "Lprime": hp.Lprime,
}


def cmd_map(args, out: Out) -> int:
    try:
        p = parse(args.poly)
    except ValueError as exc:
        raise ParseError(str(exc))
    q = MAPS[args.op](p)
    out.emit(hp.format_comm(q), _comm(q))
    return 0


def cmd_verify(args, out: Out) -> int:
    th = args.theorem
    if th == "cut-lemma":
        if not args.cut:
            raise UsageError("cut-lemma needs --cut")
        P = load_poset(args.file)
        rep = vf.verify_cut_lemma(P, load_cut(args.cut, P), args.file)
    else:
        phi = load_map(args.file)
        if th == "decomposition":
            rep = vf.verify_decomposition(phi, args.file)
        elif th == "local-decomposition":
            rep = vf.verify_local_decomposition(phi, args.file)
        elif th == "comodule":
            rep = vf.verify_comodule(phi, args.file)
        elif th == "specialization":
            rep = vf.verify_specializations(phi, args.file)
        elif th == "mixed-maps":
            rep = vf.verify_mixed_maps(phi, args.file)
        else:
            rep = vf.verify_example_formulas(args.example_kind, phi, args.file)
    out.emit(rep.line() + (f"\n{rep.detail}" if rep.detail and not rep.passed else ""), rep.to_dict())
    return 0 if rep.passed else 1


# ----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="cdindex", description="flag invariants of graded posets and subdivisions")
    ap.add_argument("--format", choices=["text", "structured"], default="text")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build a poset (and map) file")
    p.add_argument("kind", choices=[
        "boolean", "polygon", "cube", "simplicial", "face-lattice", "pyramid", "product",
        "cartesian", "join", "bary", "cut", "fixture", "factor",
    ])
    p.add_argument("args", nargs="*")
    p.add_argument("-o", "--output", required=True)
    p.add_argument("--map", help="also write the subdivision map here")
    p.add_argument("--cut", help="cut specification file")
    p.add_argument("--drop-identities", action="store_true", help="omit identity factors")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("check", help="classify a poset or test a map for SFS")
    p.add_argument("file")
    p.add_argument("--method", default="all", choices=["definition", "characterization", "near_criterion", "all"])
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("index", help="flag, ab, cd, local cd or mixed cd index")
    p.add_argument("file")
    p.add_argument("--kind", default="cd", choices=["flag", "ab", "cd", "local-cd", "mixed-cd"])
    p.add_argument("--mode", default="classic", choices=["classic", "refined"])
    p.set_defaults(func=cmd_index)

    p = sub.add_parser("mixed-cd", help="mixed cd-index of a map")
    p.add_argument("file")
    p.set_defaults(func=cmd_mixed_cd)

    p = sub.add_parser("hpoly", help="h, g, local h or mixed h polynomial")
    p.add_argument("file")
    p.add_argument("--kind", default="h", choices=["h", "g", "local-h", "mixed-h"])
    p.add_argument("--u-one", action="store_true", help="set u = u' = 1")
    p.set_defaults(func=cmd_hpoly)

    p = sub.add_parser("map", help="apply a linear map to a polynomial in canonical text")
    p.add_argument("op", choices=sorted(MAPS))
    p.add_argument("poly")
    p.set_defaults(func=cmd_map)

    p = sub.add_parser("verify", help="check a theorem on an instance")
    p.add_argument("file")
    p.add_argument("--theorem", required=True, choices=[
        "decomposition", "local-decomposition", "comodule", "specialization", "mixed-maps", "cut-lemma", "examples",
    ])
    p.add_argument("--cut", help="cut specification file (cut-lemma)")
    p.add_argument("--example-kind", default="polygon", choices=["polygon", "boundary3", "triangulation"])
    p.set_defaults(func=cmd_verify)
    return ap


def run(argv: Optional[List[str]] = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    out = Out(args.format)
    try:
        return args.func(args, out)
    except (UsageError, IndexError) as exc:
        print(f"error[usage]: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ParseError as exc:
        print(f"error[parse]: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except (PosetError, ArithmeticError, ValueError) as exc:
        print(f"error[{type(exc).__name__}]: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


def main() -> None:
    sys.exit(run())
