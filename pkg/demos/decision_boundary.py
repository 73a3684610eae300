"""
Decision boundaries, fuzzy and crisp
====================================

Label a 2-D grid with both classifiers and write the CSVs a plotting tool can
read.  The two files are byte-identical.
"""

import sys
import tempfile
from pathlib import Path

from fuzzy2crisp import export_decision_boundary, mine_sufficient
from fuzzy2crisp.datasets import worked_example

base = worked_example()
fuzzy = export_decision_boundary(base, resolution=200)
crisp = export_decision_boundary(mine_sufficient(base), resolution=200)

out = Path(sys.argv[1] if len(sys.argv) > 1 else tempfile.mkdtemp())
(out / "fuzzy.csv").write_text(fuzzy.to_csv())
(out / "crisp.csv").write_text(crisp.to_csv())
print("wrote", out / "fuzzy.csv", "and", out / "crisp.csv")
print("identical:", (out / "fuzzy.csv").read_bytes() == (out / "crisp.csv").read_bytes())

###############################################################################
# A coarse text rendering, top row first: 0 lower left, 1 along the top,
# 2 lower right, '.' for abstain.

coarse = export_decision_boundary(base, resolution=40)
glyph = {-1: ".", 0: "0", 1: "1", 2: "2"}
for row in coarse.labels[::-1]:
    print("".join(glyph[int(v)] for v in row))
