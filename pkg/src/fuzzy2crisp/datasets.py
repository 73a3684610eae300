"""Bundled rule bases."""

from __future__ import annotations

import numpy as np

from .fuzzy import FuzzyRule, FuzzyRuleBase, LinguisticVariable, RuleBaseError, TrapezoidalFuzzySet
from .regions import INF


def worked_example() -> FuzzyRuleBase:
    """Two features, three labels each, one rule per class.

    ``r1: X1 IS Low -> 0``, ``r2: X2 IS High -> 1``, ``r3: X1 IS High -> 2``.
    """
    x1 = LinguisticVariable(
        "X1",
        (
            TrapezoidalFuzzySet("Low", -INF, -INF, 1.12, 4.96),
            TrapezoidalFuzzySet("Medium", 1.12, 3.04, 7.09, 9.23),
            TrapezoidalFuzzySet("High", 4.96, 9.23, INF, INF),
        ),
    )
    x2 = LinguisticVariable(
        "X2",
        (
            TrapezoidalFuzzySet("Low", -INF, -5.15, -0.52, 1.19),
            TrapezoidalFuzzySet("Medium", -0.52, 0.34, 2.54, 3.88),
            TrapezoidalFuzzySet("High", 1.19, 3.88, INF, INF),
        ),
    )
    rules = (
        FuzzyRule.for_class({0: "Low"}, 0, 3),
        FuzzyRule.for_class({1: "High"}, 1, 3),
        FuzzyRule.for_class({0: "High"}, 2, 3),
    )
    return FuzzyRuleBase((x1, x2), rules, n_classes=3, max_antecedent=1)


_GRID = np.arange(0.0, 10.5, 0.5)


def _random_trapezoid(rng: np.random.Generator, label: str) -> TrapezoidalFuzzySet:
    while True:
        a, b, c, d = np.sort(rng.choice(_GRID, 4))
        shape = rng.integers(4)
        if shape == 1:
            a = b = -INF
        elif shape == 2:
            c = d = INF
        elif shape == 3:
            a = -INF
        try:
            return TrapezoidalFuzzySet(label, a, b, c, d)
        except RuleBaseError:
            continue


def _ruspini(rng: np.random.Generator, n_labels: int) -> list[TrapezoidalFuzzySet]:
    if n_labels == 1:
        return [TrapezoidalFuzzySet("L0", -INF, -INF, INF, INF)]
    knots = np.sort(rng.choice(_GRID, 2 * n_labels - 2, replace=False))
    sets = [TrapezoidalFuzzySet("L0", -INF, -INF, knots[0], knots[1])]
    for i in range(1, n_labels - 1):
        sets.append(TrapezoidalFuzzySet(f"L{i}", *knots[2 * i - 2:2 * i + 2]))
    sets.append(TrapezoidalFuzzySet(f"L{n_labels - 1}", knots[-2], knots[-1], INF, INF))
    return sets


def random_rule_base(
    rng: np.random.Generator | int,
    n_features: int = 2,
    n_rules: int = 3,
    n_labels: int | tuple[int, int] = (2, 5),
    n_classes: int = 2,
    mode: str = "sufficient",
    max_antecedent: int | None = None,
    multi_hot: float = 0.2,
) -> FuzzyRuleBase:
    """Random rule base for property tests.

    Trapezoid parameters live on a coarse half-unit grid so that supports of
    different rules often share endpoints; partitions are either Ruspini-style
    (neighbouring labels overlap exactly at the edges) or independent random
    trapezoids and shoulders.  ``n_labels`` is a count or an inclusive range.
    """
    rng = np.random.default_rng(rng)
    max_antecedent = n_features if max_antecedent is None else max_antecedent
    variables = []
    for j in range(n_features):
        k = n_labels if isinstance(n_labels, int) else int(rng.integers(n_labels[0], n_labels[1] + 1))
        if rng.random() < 0.5:
            labels = _ruspini(rng, k)
        else:
            labels = [_random_trapezoid(rng, f"L{i}") for i in range(k)]
        variables.append(LinguisticVariable(f"X{j + 1}", tuple(labels)))
    rules = []
    for _ in range(n_rules):
        size = int(rng.integers(1, min(n_features, max_antecedent) + 1))
        features = sorted(rng.choice(n_features, size, replace=False).tolist())
        ante = {j: variables[j].labels[int(rng.integers(len(variables[j].labels)))].label for j in features}
        if n_classes > 1 and rng.random() < multi_hot:
            scores = rng.integers(0, 2, n_classes)
            scores[rng.integers(n_classes)] = 1
            rules.append(FuzzyRule(ante, tuple(int(s) for s in scores)))
        else:
            rules.append(FuzzyRule.for_class(ante, int(rng.integers(n_classes)), n_classes))
    return FuzzyRuleBase(tuple(variables), tuple(rules), n_classes, max_antecedent, mode)
