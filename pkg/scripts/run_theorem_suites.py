"""Run every verifier over the fixture corpus; exit 1 on any failure."""

import argparse
import sys
import time
from collections import Counter
from dataclasses import dataclass

from cdindex import corpus
from cdindex import verify as vf


@dataclass
class Config:
    verbose: bool = False
    stop_on_fail: bool = False


def reports():
    for name, phi in corpus.sfs_corpus():
        yield vf.verify_decomposition(phi, name)
        yield vf.verify_comodule(phi, name)
        yield vf.verify_specializations(phi, name)
        yield vf.verify_mixed_maps(phi, name)
    for name, sigma in corpus.near_eulerian_maps():
        yield vf.verify_local_decomposition(sigma, name)
    for name, P, spec in corpus.cut_lemma_instances():
        yield vf.verify_cut_lemma(P, spec, name)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("-v", "--verbose", action="store_true")
    ap.add_argument("-x", "--stop-on-fail", action="store_true")
    args = ap.parse_args()
    cfg = Config(args.verbose, args.stop_on_fail)
    t0 = time.time()
    tally, failed = Counter(), 0
    for rep in reports():
        tally[rep.theorem, rep.passed] += 1
        if cfg.verbose or not rep.passed:
            print(rep.line())
        if not rep.passed:
            failed += 1
            if cfg.stop_on_fail:
                break
    for th in sorted({k for k, _ in tally}):
        print(f"{th:22s} pass {tally[th, True]:4d}  fail {tally[th, False]:3d}")
    print(f"{time.time() - t0:.1f}s")
    sys.exit(1 if failed else 0)


if __name__ == "__main__":
    main()
