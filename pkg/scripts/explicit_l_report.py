"""Compare the compositional L map with the closed-form evaluator on every
mixed word of total degree <= 6 and write the table to artifacts/."""

import argparse
from collections import Counter
from pathlib import Path

from cdindex.hpoly import explicit_L_report, format_explicit_report
from cdindex.ncpoly import mixed_words


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-degree", type=int, default=6)
    ap.add_argument("-o", "--output", default=str(Path(__file__).resolve().parent.parent / "artifacts" / "explicit_L_report.tsv"))
    args = ap.parse_args()
    words = [w for t in range(args.max_degree + 1) for w in mixed_words(t)]
    rep = explicit_L_report(words)
    Path(args.output).write_text(format_explicit_report(rep))
    counts = Counter(r.status for r in rep)
    print(f"{len(rep)} words: " + ", ".join(f"{k}={v}" for k, v in sorted(counts.items())))
    print(f"wrote {args.output}")


if __name__ == "__main__":
    main()
