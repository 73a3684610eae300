"""Trapezoidal fuzzy partitions, fuzzy rule bases and their two inference modes."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Mapping, Sequence

import numpy as np

from .regions import INF, Hyperrectangle, Interval

ABSTAIN = -1
SUFFICIENT = "sufficient"
ADDITIVE = "additive"
MODES = (SUFFICIENT, ADDITIVE)


class RuleBaseError(ValueError):
    """A fuzzy set, variable or rule base violates its structural invariants."""


@dataclass(frozen=True)
class TrapezoidalFuzzySet:
    """Trapezoid ``<a, b, c, d>`` with core ``[b, c]`` and support ``(a, d)``.

    ``a = -inf`` makes a left shoulder (membership 1 up to ``c``, whatever ``b``
    is) and ``d = +inf`` a right shoulder (membership 1 from ``b`` on).  Finite
    edges must have positive width: ``a < b`` when ``a`` is finite and ``c < d``
    when ``d`` is finite.
    """

    label: str
    a: float
    b: float
    c: float
    d: float

    def __post_init__(self):
        params = []
        for name in "abcd":
            value = getattr(self, name)
            try:
                value = float(value)
            except (TypeError, ValueError):
                raise RuleBaseError(f"fuzzy set {self.label!r}: parameter {name}={value!r} is not a number")
            if math.isnan(value):
                raise RuleBaseError(f"fuzzy set {self.label!r}: parameter {name} is NaN")
            object.__setattr__(self, name, value)
            params.append(value)
        a, b, c, d = params
        where = f"fuzzy set {self.label!r} <{a}, {b}, {c}, {d}>"
        if not (a <= b <= c <= d):
            raise RuleBaseError(f"{where}: parameters must satisfy a <= b <= c <= d")
        if not a < d:
            raise RuleBaseError(f"{where}: support is empty (a >= d)")
        if a == INF or d == -INF:
            raise RuleBaseError(f"{where}: a cannot be +inf and d cannot be -inf")
        if math.isfinite(a) and not a < b:
            raise RuleBaseError(f"{where}: rising edge needs a < b")
        if math.isfinite(d) and not c < d:
            raise RuleBaseError(f"{where}: falling edge needs c < d")

    @property
    def params(self) -> tuple[float, float, float, float]:
        return (self.a, self.b, self.c, self.d)

    @property
    def support(self) -> Interval:
        return Interval.open(self.a, self.d)

    @property
    def core(self) -> Interval:
        lo = -INF if self.a == -INF else self.b
        hi = INF if self.d == INF else self.c
        return Interval.closed(lo, hi)

    def __call__(self, x):
        return membership(self, x)


def membership(fs: TrapezoidalFuzzySet, x):
    """Degree of membership of ``x`` (scalar or array) in ``fs``."""
    arr = np.asarray(x, dtype=float)
    a, b, c, d = fs.params
    rising = 1.0 if a == -INF else (arr - a) / (b - a)
    falling = 1.0 if d == INF else (d - arr) / (d - c)
    with np.errstate(invalid="ignore"):
        mu = np.select(
            [arr <= a, arr <= b, arr <= c, arr < d],
            [0.0, rising, 1.0, falling],
            default=0.0,
        )
    if np.ndim(x) == 0:
        return float(mu)
    return mu


@dataclass(frozen=True)
class LinguisticVariable:
    name: str
    labels: tuple[TrapezoidalFuzzySet, ...]
    domain: Interval = field(default_factory=Interval.full)

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(self.labels))
        if not self.labels:
            raise RuleBaseError(f"variable {self.name!r} has no labels")
        seen = set()
        for fs in self.labels:
            if fs.label in seen:
                raise RuleBaseError(f"variable {self.name!r}: duplicate label {fs.label!r}")
            seen.add(fs.label)
            if fs.support.intersect(self.domain).is_empty:
                raise RuleBaseError(f"variable {self.name!r}: support of {fs.label!r} misses the domain {self.domain}")

    def __getitem__(self, label: str) -> TrapezoidalFuzzySet:
        for fs in self.labels:
            if fs.label == label:
                return fs
        raise KeyError(label)

    @property
    def label_names(self) -> tuple[str, ...]:
        return tuple(fs.label for fs in self.labels)


@dataclass(frozen=True)
class FuzzyRule:
    """``IF X_j IS L_j AND ... THEN scores``.

    ``antecedent`` is stored as ``((feature_index, label), ...)`` sorted by
    feature; a mapping is accepted on construction.
    """

    antecedent: tuple[tuple[int, str], ...]
    scores: tuple[int, ...]

    def __post_init__(self):
        ante = self.antecedent
        pairs = list(ante.items()) if isinstance(ante, Mapping) else [tuple(p) for p in ante]
        features = [int(j) for j, _ in pairs]
        if not pairs:
            raise RuleBaseError("rule antecedent is empty")
        if len(set(features)) != len(features):
            raise RuleBaseError(f"rule uses a feature twice: {features}")
        object.__setattr__(self, "antecedent", tuple(sorted((int(j), str(lab)) for j, lab in pairs)))
        scores = tuple(int(s) for s in self.scores)
        if any(s not in (0, 1) for s in scores):
            raise RuleBaseError(f"rule scores must be 0/1, got {scores}")
        if not any(scores):
            raise RuleBaseError("rule scores need at least one 1")
        object.__setattr__(self, "scores", scores)

    @classmethod
    def for_class(cls, antecedent, consequent: int, n_classes: int) -> FuzzyRule:
        if not 0 <= consequent < n_classes:
            raise RuleBaseError(f"class {consequent} outside 0..{n_classes - 1}")
        return cls(antecedent, tuple(int(i == consequent) for i in range(n_classes)))

    @property
    def consequent(self) -> int:
        """Class with the highest score, lowest index on ties."""
        return self.scores.index(1)

    @property
    def size(self) -> int:
        return len(self.antecedent)


@dataclass(frozen=True)
class FuzzyRuleBase:
    variables: tuple[LinguisticVariable, ...]
    rules: tuple[FuzzyRule, ...]
    n_classes: int
    max_antecedent: int | None = None
    mode: str = SUFFICIENT

    def __post_init__(self):
        object.__setattr__(self, "variables", tuple(self.variables))
        object.__setattr__(self, "rules", tuple(self.rules))
        m = len(self.variables)
        if m == 0:
            raise RuleBaseError("rule base has no variables")
        if not self.rules:
            raise RuleBaseError("rule base has no rules")
        if self.n_classes < 1:
            raise RuleBaseError("n_classes must be >= 1")
        if self.max_antecedent is None:
            object.__setattr__(self, "max_antecedent", m)
        if self.mode not in MODES:
            raise RuleBaseError(f"unknown inference mode {self.mode!r}")
        names = [v.name for v in self.variables]
        if len(set(names)) != len(names):
            raise RuleBaseError(f"duplicate variable names: {names}")
        for i, rule in enumerate(self.rules):
            if len(rule.scores) != self.n_classes:
                raise RuleBaseError(f"rule {i}: {len(rule.scores)} scores for {self.n_classes} classes")
            if rule.size > self.max_antecedent:
                raise RuleBaseError(f"rule {i}: {rule.size} conditions exceed max_antecedent={self.max_antecedent}")
            for j, label in rule.antecedent:
                if not 0 <= j < m:
                    raise RuleBaseError(f"rule {i}: feature index {j} outside 0..{m - 1}")
                if label not in self.variables[j].label_names:
                    raise RuleBaseError(f"rule {i}: variable {self.variables[j].name!r} has no label {label!r}")

    @property
    def n_rules(self) -> int:
        return len(self.rules)

    @property
    def n_features(self) -> int:
        return len(self.variables)

    @property
    def score_matrix(self) -> np.ndarray:
        return np.array([r.scores for r in self.rules], dtype=float)

    def fuzzy_set(self, feature: int, label: str) -> TrapezoidalFuzzySet:
        return self.variables[feature][label]

    def with_mode(self, mode: str) -> FuzzyRuleBase:
        return FuzzyRuleBase(self.variables, self.rules, self.n_classes, self.max_antecedent, mode)


def _as_points(x, m: int) -> np.ndarray:
    pts = np.asarray(x, dtype=float)
    if pts.ndim == 1:
        pts = pts[None, :]
    if pts.ndim != 2 or pts.shape[1] != m:
        raise ValueError(f"expected points with {m} coordinates, got shape {np.shape(x)}")
    if np.isnan(pts).any() or np.isinf(pts).any():
        raise ValueError("points must have finite coordinates")
    return pts


def truth_degrees(base: FuzzyRuleBase, points) -> np.ndarray:
    """Product-T-norm truth degree of every rule at every point, shape ``(n, N_R)``."""
    pts = _as_points(points, base.n_features)
    mu = np.ones((pts.shape[0], base.n_rules))
    for k, rule in enumerate(base.rules):
        for j, label in rule.antecedent:
            mu[:, k] *= membership(base.fuzzy_set(j, label), pts[:, j])
    return mu


def truth_degree(rule: FuzzyRule, base: FuzzyRuleBase, x: Sequence[float]) -> float:
    pts = _as_points(x, base.n_features)
    out = 1.0
    for j, label in rule.antecedent:
        try:
            fs = base.fuzzy_set(j, label)
        except (IndexError, KeyError):
            raise RuleBaseError(f"rule refers to unknown feature/label ({j}, {label!r})")
        out *= membership(fs, pts[0, j])
    return out


def class_sums(mu: np.ndarray, scores: np.ndarray, rules: Sequence[int]) -> np.ndarray:
    """Per-class score-weighted sums of ``mu[:, r]`` accumulated in ``rules`` order.

    The accumulation order is fixed so that restricting ``rules`` to the rules
    with non-zero truth degree gives bit-identical sums.
    """
    sums = np.zeros((mu.shape[0], scores.shape[1]))
    for r in rules:
        sums += mu[:, r, None] * scores[r]
    return sums


def predict_sufficient(base: FuzzyRuleBase, points) -> np.ndarray:
    mu = truth_degrees(base, points)
    winner = mu.argmax(axis=1)
    top = mu[np.arange(mu.shape[0]), winner]
    consequents = np.array([r.consequent for r in base.rules])
    return np.where(top > 0, consequents[winner], ABSTAIN)


def predict_additive(base: FuzzyRuleBase, points) -> np.ndarray:
    mu = truth_degrees(base, points)
    sums = class_sums(mu, base.score_matrix, range(base.n_rules))
    return np.where(sums.max(axis=1) > 0, sums.argmax(axis=1), ABSTAIN)


def predict_fuzzy(base: FuzzyRuleBase, points, mode: str | None = None) -> np.ndarray:
    mode = base.mode if mode is None else mode
    if mode == SUFFICIENT:
        return predict_sufficient(base, points)
    if mode == ADDITIVE:
        return predict_additive(base, points)
    raise ValueError(f"unknown inference mode {mode!r}")


def classify_sufficient(base: FuzzyRuleBase, x: Sequence[float]) -> int:
    """Class of the rule with the highest truth degree, or ``ABSTAIN``.

    Ties between rules go to the lowest rule index, ties between classes to
    the lowest class index.
    """
    return int(predict_sufficient(base, x)[0])


def classify_additive(base: FuzzyRuleBase, x: Sequence[float]) -> int:
    return int(predict_additive(base, x)[0])


def support_of_rule(rule: FuzzyRule, base: FuzzyRuleBase) -> Hyperrectangle:
    """Open box where the rule's truth degree is positive."""
    dims = [Interval.full()] * base.n_features
    for j, label in rule.antecedent:
        dims[j] = base.fuzzy_set(j, label).support
    return Hyperrectangle(tuple(dims))
