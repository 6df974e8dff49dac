"""Print the mixed cd-index, local h and mixed h of the fixture subdivisions."""

import argparse
from dataclasses import dataclass

from cdindex import corpus
from cdindex import hpoly as hp
from cdindex.indices import mixed_cd_index
from cdindex.ncpoly import format_poly
from cdindex.verify import subdivision_counts


@dataclass
class Config:
    polygons: bool = True
    max_sigma: int = 4


def fixtures(cfg: Config):
    out = [(f"sigma{n}", corpus.sigma(n)) for n in range(2, cfg.max_sigma + 1)]
    out += [
        ("stellar edge", corpus.stellar_edge()),
        ("bipyramid", corpus.bipyramid()),
        ("cube triangulation", corpus.cube_triangulation()),
    ]
    if cfg.polygons:
        out += [(s.name, corpus.composite(s)) for s in corpus.polygon_sequences()]
    return out


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--no-polygons", action="store_true")
    ap.add_argument("--max-sigma", type=int, default=4)
    args = ap.parse_args()
    cfg = Config(polygons=not args.no_polygons, max_sigma=args.max_sigma)
    for name, phi in fixtures(cfg):
        om = mixed_cd_index(phi)
        print(name)
        print(f"  counts   {subdivision_counts(phi)}")
        print(f"  Omega    {format_poly(om)}")
        print(f"  local h  {hp.format_comm(hp.L_Omega(om))}")
        print(f"  mixed h  {hp.format_comm(hp.Hprime_Omega(om))}")


if __name__ == "__main__":
    main()
