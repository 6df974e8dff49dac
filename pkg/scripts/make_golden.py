"""Regenerate the CLI golden files under tests/golden/."""

import contextlib
import io
import os
import tempfile
from pathlib import Path

from cdindex.cli import run

GOLDEN = Path(__file__).resolve().parent.parent / "tests" / "golden"

# name -> setup commands, then the command whose output is recorded
CASES = {
    "b3_cd": ([["construct", "boolean", "3", "-o", "b3"]], ["index", "--kind", "cd", "b3"]),
    "hexagon_cd": ([["construct", "polygon", "6", "-o", "h"]], ["index", "h"]),
    "cube_cd": ([["construct", "cube", "-o", "c"]], ["index", "c"]),
    "sigma2_mixed_cd": (
        [["construct", "boolean", "2", "-o", "b2"], ["construct", "bary", "b2", "-o", "s2", "--map", "m"]],
        ["mixed-cd", "m"],
    ),
    "sigma3_mixed_cd": (
        [["construct", "boolean", "3", "-o", "b3"], ["construct", "bary", "b3", "-o", "s3", "--map", "m"]],
        ["mixed-cd", "m"],
    ),
    "sigma3_mixed_h": (
        [["construct", "boolean", "3", "-o", "b3"], ["construct", "bary", "b3", "-o", "s3", "--map", "m"]],
        ["hpoly", "--kind", "mixed-h", "m"],
    ),
    "sigma3_local_h": (
        [["construct", "boolean", "3", "-o", "b3"], ["construct", "bary", "b3", "-o", "s3", "--map", "m"]],
        ["hpoly", "--kind", "local-h", "m"],
    ),
    "bipyramid_mixed_cd": ([["construct", "fixture", "bipyramid", "-o", "g", "--map", "m"]], ["mixed-cd", "m"]),
    "bipyramid_mixed_h": ([["construct", "fixture", "bipyramid", "-o", "g", "--map", "m"]], ["hpoly", "--kind", "mixed-h", "m"]),
    "bipyramid_local_h": ([["construct", "fixture", "bipyramid", "-o", "g", "--map", "m"]], ["hpoly", "--kind", "local-h", "m"]),
    "cube_tri_mixed_cd": ([["construct", "fixture", "cube-triangulation", "-o", "g", "--map", "m"]], ["mixed-cd", "m"]),
    "cube_tri_mixed_h": (
        [["construct", "fixture", "cube-triangulation", "-o", "g", "--map", "m"]],
        ["hpoly", "--kind", "mixed-h", "m"],
    ),
    "sigma3_structured": (
        [["construct", "boolean", "3", "-o", "b3"], ["construct", "bary", "b3", "-o", "s3", "--map", "m"]],
        ["--format", "structured", "mixed-cd", "m"],
    ),
}


def produce(setup, cmd) -> str:
    cwd = os.getcwd()
    with tempfile.TemporaryDirectory() as tmp:
        os.chdir(tmp)
        try:
            with contextlib.redirect_stdout(io.StringIO()):
                for s in setup:
                    assert run(s) == 0, s
            buf = io.StringIO()
            with contextlib.redirect_stdout(buf):
                assert run(cmd) == 0, cmd
        finally:
            os.chdir(cwd)
    return buf.getvalue()


def main():
    GOLDEN.mkdir(parents=True, exist_ok=True)
    for name, (setup, cmd) in CASES.items():
        (GOLDEN / f"{name}.txt").write_text(produce(setup, cmd))
        print(f"{name}: {(GOLDEN / f'{name}.txt').read_text().strip()}")


if __name__ == "__main__":
    main()
