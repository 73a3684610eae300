"""
How many crisp rules can a fuzzy rule base need?
================================================

If every subset of N rules overlaps, each subset contributes one crisp rule
per member, giving N * 2**(N-1).  The degree of complexity is the mined count
divided by that bound.
"""

from fuzzy2crisp import complexity_report, degree_of_complexity, upper_bound_sufficient
from fuzzy2crisp.complexity import round_half_up
from fuzzy2crisp.datasets import random_rule_base, worked_example

for n in range(2, 11):
    print(f"{n:3d} rules -> at most {upper_bound_sufficient(n):5d} crisp rules")

###############################################################################
# A few (fuzzy, crisp) rule counts from published benchmark runs.

for name, n, crisp in [("appendicitis", 6, 69), ("iris", 5, 16), ("magic", 6, 143), ("vehicle", 8, 686)]:
    ratio = degree_of_complexity(crisp, n)
    print(f"{name:12s} {crisp:4d}/{upper_bound_sufficient(n):4d} = {ratio:.4f} -> {round_half_up(ratio)}")

###############################################################################
# Real mined counts: the worked example, then random bases of growing size.

print(complexity_report(worked_example()).summary())
for n in (2, 4, 6, 8):
    rep = complexity_report(random_rule_base(n, n_features=2, n_rules=n, n_classes=3))
    print(rep.summary(), f"(boxes: {rep.hyperrect_rule_count})")
