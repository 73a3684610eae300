import itertools

import numpy as np
import pytest

from fuzzy2crisp.fuzzy import (
    ABSTAIN,
    ADDITIVE,
    SUFFICIENT,
    FuzzyRule,
    FuzzyRuleBase,
    LinguisticVariable,
    TrapezoidalFuzzySet,
    predict_fuzzy,
)
from fuzzy2crisp.miner import (
    BOXES,
    REGIONS,
    ComparisonCondition,
    CrispRule,
    ScoreSumCondition,
    classify_crisp,
    combine_regions,
    compatible_region,
    compatible_subsets,
    coverage,
    mine,
    mine_additive,
    mine_hyperrectangles,
    mine_sufficient,
    predict_crisp,
    support_union,
)
from fuzzy2crisp.oracle import grid_points
from fuzzy2crisp.regions import INF, Hyperrectangle, Interval, Region, box_intersect

from conftest import active_pattern, random_bases

LEFT = Interval.open(-INF, 4.96)
RIGHT = Interval.open(4.96, INF)
BELOW = Interval(-INF, 1.19, False, True)
ABOVE = Interval.open(1.19, INF)
LINE = Interval.point(4.96)


def region(*dims):
    return Region.from_box(Hyperrectangle(tuple(dims)))


def test_combine_regions_examples():
    assert combine_regions([(1,), (2,), (3,)]) == [(1, 2), (1, 3), (2, 3)]
    assert combine_regions([(1, 2), (2, 3)]) == []
    assert combine_regions([(1, 2), (1, 3), (2, 3)]) == [(1, 2, 3)]
    assert combine_regions([]) == []


def test_compatible_region_examples(frb):
    assert compatible_region((0,), frb) == region(LEFT, BELOW)
    assert compatible_region((1, 2), frb) == region(RIGHT, ABOVE)
    assert compatible_region((0, 2), frb).is_empty
    assert compatible_region((0, 1), frb) == region(LEFT, ABOVE)
    assert compatible_region((2,), frb) == region(RIGHT, BELOW)
    with pytest.raises(ValueError):
        compatible_region((), frb)


def test_worked_example_compatible_subsets(frb):
    # The four regions listed for this example, plus the vertical ray X1 = 4.96
    # above 1.19 where only the second rule is active.
    found = {c.rules: c.region for c in compatible_subsets(frb)}
    assert found == {
        (0,): region(LEFT, BELOW),
        (0, 1): region(LEFT, ABOVE),
        (1,): region(LINE, ABOVE),
        (1, 2): region(RIGHT, ABOVE),
        (2,): region(RIGHT, BELOW),
    }


def test_worked_example_crisp_rules(frb):
    crb = mine_sufficient(frb)
    got = [(r.region, r.condition, r.consequent) for r in crb.rules]
    assert got == [
        (region(LEFT, BELOW), None, 0),
        (region(LEFT, ABOVE), ComparisonCondition((0,), (1,)), 0),
        (region(LEFT, ABOVE), ComparisonCondition((1,), (0,)), 1),
        (region(LINE, ABOVE), None, 1),
        (region(RIGHT, ABOVE), ComparisonCondition((1,), (2,)), 1),
        (region(RIGHT, ABOVE), ComparisonCondition((2,), (1,)), 2),
        (region(RIGHT, BELOW), None, 2),
    ]
    assert crb.rules[0].describe() == "IF X in (-inf, 4.96) x (-inf, 1.19] THEN Y IS 0"
    assert crb.rules[1].describe(["Low1", "High2", "High1"]) == (
        "IF X in (-inf, 4.96) x (1.19, +inf) AND mu[Low1] >= mu[High2] THEN Y IS 0"
    )


def test_worked_example_classification(frb):
    crb = mine_sufficient(frb)
    assert classify_crisp(crb, (1.0, 0.0)) == 0
    assert classify_crisp(crb, (0.0, 5.0)) == 0
    assert classify_crisp(crb, (4.96, 0.0)) == ABSTAIN
    assert classify_crisp(crb, (4.96, 5.0)) == 1
    assert classify_crisp(crb, (9.0, 0.0)) == 2
    assert classify_crisp(crb, (5.0, 5.0)) == 1
    with pytest.raises(ValueError):
        classify_crisp(crb, (1.0,))


def test_single_rule_base():
    t = TrapezoidalFuzzySet("T", 0, 1, 2, 3)
    base = FuzzyRuleBase((LinguisticVariable("X", (t,)),), (FuzzyRule.for_class({0: "T"}, 1, 2),), 2)
    for crb in (mine_sufficient(base), mine_additive(base), mine_hyperrectangles(base)):
        (rule,) = crb.rules
        assert rule == CrispRule(region(Interval.open(0, 3)), 1, None, (0,))


def test_same_class_overlap_gives_three_plain_rules():
    a = TrapezoidalFuzzySet("A", 0, 1, 2, 3)
    b = TrapezoidalFuzzySet("B", 2, 3, 4, 5)
    var = LinguisticVariable("X", (a, b))
    rules = (FuzzyRule.for_class({0: "A"}, 0, 2), FuzzyRule.for_class({0: "B"}, 0, 2))
    base = FuzzyRuleBase((var,), rules, 2)
    crb = mine_sufficient(base)
    assert [(r.subset, r.region, r.condition) for r in crb.rules] == [
        ((0,), region(Interval(0, 2, False, True)), None),
        ((0, 1), region(Interval.open(2, 3)), None),
        ((1,), region(Interval(3, 5, True, False)), None),
    ]
    # brute force over the endpoint grid agrees
    xs = np.array([[v] for v in np.arange(-0.5, 5.75, 0.25)])
    assert np.array_equal(predict_crisp(crb, xs), predict_fuzzy(base, xs))


def test_additive_worked_example(frb):
    crb = mine_additive(frb)
    assert crb.mode == ADDITIVE
    conds = [r.condition for r in crb.rules]
    assert conds[1] == ScoreSumCondition(0, (1,))
    assert all(c is None or isinstance(c, ScoreSumCondition) for c in conds)
    pts = grid_points(frb, 50)
    assert np.array_equal(predict_crisp(crb, pts), predict_fuzzy(frb, pts, ADDITIVE))


def test_additive_region_with_one_class_needs_no_condition():
    t = TrapezoidalFuzzySet("T", 0, 1, 2, 3)
    var = LinguisticVariable("X", (t,))
    rules = (FuzzyRule.for_class({0: "T"}, 1, 2), FuzzyRule.for_class({0: "T"}, 1, 2))
    (rule,) = mine_additive(FuzzyRuleBase((var,), rules, 2)).rules
    assert rule.condition is None and rule.consequent == 1 and rule.subset == (0, 1)


def test_hyperrectangles_worked_example(frb):
    crb = mine_hyperrectangles(frb)
    assert crb.geometry == BOXES
    assert len(crb.subsets) == 5
    assert len({r.region for r in crb.rules}) == 5
    assert len(crb) == 7
    assert [r.region for r in crb.rules] == [r.region for r in mine_sufficient(frb).rules]


def test_mine_dispatch(frb):
    assert mine(frb).geometry == REGIONS
    assert mine(frb, ADDITIVE, BOXES).mode == ADDITIVE
    with pytest.raises(ValueError):
        mine(frb, geometry="polygons")
    with pytest.raises(ValueError):
        mine(frb, mode="max")


def test_coverage_two_ways(frb):
    pts = np.vstack([grid_points(frb, 30), [[4.96, 1.19], [4.96, -2.0], [4.96, 1.2]]])
    cov, sup = coverage(frb), support_union(frb)
    assert np.array_equal(cov.contains_points(pts), sup.contains_points(pts))
    assert not cov.contains((4.96, 1.19)) and not cov.contains((4.96, -100.0))
    assert cov.contains((4.96, 1.2))
    full = TrapezoidalFuzzySet("All", -INF, -INF, INF, INF)
    base = FuzzyRuleBase((LinguisticVariable("X", (full,)),), (FuzzyRule.for_class({0: "All"}, 0, 2),), 2)
    assert coverage(base) == Region.from_box(Hyperrectangle.full(1))


def test_regions_match_active_rule_pattern():
    for base in random_bases(60, seed=11):
        comps = compatible_subsets(base)
        pts = grid_points(base, 6)
        pattern = active_pattern(base, pts)
        owner = [None] * len(pts)
        for comp in comps:
            for i in np.flatnonzero(comp.region.contains_points(pts)):
                assert owner[i] is None, "compatible regions overlap"
                owner[i] = comp.rules
        for i, active in enumerate(pattern):
            assert owner[i] == (active if active else None)
        for p, q in itertools.combinations(comps, 2):
            for a in p.region.boxes:
                for b in q.region.boxes:
                    assert box_intersect(a, b).is_empty


def test_mining_is_deterministic():
    for base in random_bases(20, seed=5):
        for mode, geometry in itertools.product((SUFFICIENT, ADDITIVE), (REGIONS, BOXES)):
            assert mine(base, mode, geometry) == mine(base, mode, geometry)


def test_crisp_rule_region_must_be_non_empty():
    with pytest.raises(ValueError):
        CrispRule(Region.empty(2), 0, None, (0,))
