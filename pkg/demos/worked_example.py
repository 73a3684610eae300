"""
From fuzzy rules to crisp rules
===============================

Three one-feature fuzzy rules over two inputs.  We mine the crisp rule base,
look at where each rule set is active, and check the two classifiers agree.
"""

import numpy as np

from fuzzy2crisp import classify_crisp, classify_sufficient, compatible_subsets, mine_sufficient, verify_grid
from fuzzy2crisp.datasets import worked_example

base = worked_example()
for var in base.variables:
    print(var.name, [(fs.label, fs.params) for fs in var.labels])

###############################################################################
# Each non-empty compatible region is the set of points where exactly those
# rules fire.  Note the vertical ray X1 = 4.96: there Low and High of X1 both
# vanish, so only the X2 rule is active.

names = ["r1", "r2", "r3"]
for comp in compatible_subsets(base):
    print("{" + ", ".join(names[r] for r in comp.rules) + "}:", comp.region)

###############################################################################
# Crisp rules.  Where two rules with different classes overlap, a membership
# comparison decides, exactly as the fuzzy argmax would.

crb = mine_sufficient(base)
labels = ["Low(X1)", "High(X2)", "High(X1)"]
for rule in crb.rules:
    print(rule.describe(labels))

###############################################################################
# A few points, including the uncovered segment X1 = 4.96, X2 <= 1.19.

for x in [(1.0, 0.0), (0.0, 5.0), (4.96, 0.0), (4.96, 5.0), (9.0, 0.0), (5.0, 5.0)]:
    print(x, "fuzzy", classify_sufficient(base, x), "crisp", classify_crisp(crb, x))

report = verify_grid(base, crb, resolution=100)
print(report.summary())
assert report.ok and np.isclose(report.agreement_rate, 1.0)
