"""A tour of the gorlab command line via .alg presentation files.

Equivalent shell usage:

    gorlab check a_2.alg
    gorlab socle a_2.alg
    gorlab robber --at t=0
    gorlab witt sum.alg
    gorlab points-degenerate --q 2 --seed 0
"""

import tempfile
from pathlib import Path

from gorlab.cli import run_command

A2 = """\
field Q
vars y1 y2
rel y1*y2
rel y1^2 - y2^2
rel y1^3
orient y1^2 : 1
aug y1 = 0, y2 = 0
"""

SUM4 = """\
field Q
vars x y
rel x^2 - 1
rel y^2 - 1
orient 1 : 4
"""

with tempfile.TemporaryDirectory() as tmp:
    a2 = Path(tmp) / "a_2.alg"
    a2.write_text(A2)
    sum4 = Path(tmp) / "sum.alg"
    sum4.write_text(SUM4)

    for argv in (
        ["check", str(a2), "--pretty"],
        ["socle", str(a2)],
        ["witt", str(sum4)],
        ["robber", "--at", "t=0"],
        ["cw", "--q", "1"],
        ["points-degenerate", "--q", "1", "--seed", "0"],
    ):
        print(f"\n$ gorlab {' '.join(argv)}")
        code = run_command(argv)
        assert code == 0
