"""Independent checks: pointwise equivalence sampling and exhaustive enumeration."""

from __future__ import annotations

import io
import math
from dataclasses import dataclass, field
from functools import reduce
from itertools import combinations

import numpy as np

from .fuzzy import FuzzyRuleBase, LinguisticVariable, predict_fuzzy, support_of_rule
from .miner import CompatibleSubset, CrispRuleBase, predict_crisp
from .regions import Hyperrectangle, Region, box_intersect, region_difference, same_point_set, union_of_boxes

MAX_EXHAUSTIVE_RULES = 20


@dataclass(frozen=True)
class VerificationReport:
    samples_tested: int
    mismatches: tuple[tuple[tuple[float, ...], int, int], ...]
    sampling: dict = field(default_factory=dict)

    @property
    def agreement_rate(self) -> float:
        return 1.0 - len(self.mismatches) / self.samples_tested

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def summary(self) -> str:
        how = ", ".join(f"{k}={v}" for k, v in self.sampling.items())
        lines = [
            f"samples: {self.samples_tested} ({how})",
            f"mismatches: {len(self.mismatches)}",
            f"agreement: {self.agreement_rate:.6f}",
        ]
        if self.mismatches:
            point, fz, cr = self.mismatches[0]
            lines.append(f"first mismatch at {list(point)}: fuzzy={fz} crisp={cr}")
        return "\n".join(lines)


def predict(classifier, points, mode: str | None = None) -> np.ndarray:
    if isinstance(classifier, CrispRuleBase):
        return predict_crisp(classifier, points)
    if isinstance(classifier, FuzzyRuleBase):
        return predict_fuzzy(classifier, points, mode)
    raise TypeError(f"not a classifier: {type(classifier).__name__}")


def axis_endpoints(var: LinguisticVariable) -> list[float]:
    """Sorted finite trapezoid parameters and domain bounds of one variable."""
    values = {v for fs in var.labels for v in fs.params}
    values |= {var.domain.lo, var.domain.hi}
    return sorted(v for v in values if math.isfinite(v))


def sampling_bounds(base: FuzzyRuleBase) -> list[tuple[float, float]]:
    """Finite sampling box: the domain, with infinite sides clipped.

    An infinite side is replaced by the outermost finite endpoint moved out by
    one mean inter-endpoint step; every membership is constant beyond it.
    """
    bounds = []
    for var in base.variables:
        ends = axis_endpoints(var)
        if not ends:
            ends = [0.0]
        step = (ends[-1] - ends[0]) / (len(ends) - 1) if len(ends) > 1 else 1.0
        lo = var.domain.lo if math.isfinite(var.domain.lo) else ends[0] - step
        hi = var.domain.hi if math.isfinite(var.domain.hi) else ends[-1] + step
        bounds.append((lo, hi))
    return bounds


def sample_axis(var: LinguisticVariable, lo: float, hi: float, resolution: int) -> np.ndarray:
    """Regular grid plus every endpoint and every midpoint between consecutive endpoints."""
    ends = [v for v in axis_endpoints(var) if lo <= v <= hi]
    knots = sorted(set(ends) | {lo, hi})
    mids = [(p + q) / 2 for p, q in zip(knots, knots[1:])]
    return np.unique(np.concatenate([np.linspace(lo, hi, resolution), knots, mids]))


def grid_points(base: FuzzyRuleBase, resolution: int) -> np.ndarray:
    axes = [sample_axis(var, lo, hi, resolution) for var, (lo, hi) in zip(base.variables, sampling_bounds(base))]
    mesh = np.meshgrid(*axes, indexing="ij")
    return np.stack([m.ravel() for m in mesh], axis=1)


def _compare(base: FuzzyRuleBase, crb: CrispRuleBase, points: np.ndarray, sampling: dict) -> VerificationReport:
    if crb.source.n_features != base.n_features:
        raise ValueError(f"crisp base has {crb.source.n_features} features, fuzzy base {base.n_features}")
    if crb.source.n_classes != base.n_classes:
        raise ValueError(f"crisp base has {crb.source.n_classes} classes, fuzzy base {base.n_classes}")
    fuzzy = predict_fuzzy(base, points, crb.mode)
    crisp = predict_crisp(crb, points)
    bad = np.flatnonzero(fuzzy != crisp)
    mismatches = tuple((tuple(points[i].tolist()), int(fuzzy[i]), int(crisp[i])) for i in bad)
    return VerificationReport(len(points), mismatches, sampling)


def verify_grid(base: FuzzyRuleBase, crb: CrispRuleBase, resolution: int = 50) -> VerificationReport:
    """Compare fuzzy and crisp decisions on the endpoint-refined grid.

    Both classifiers use the crisp base's inference mode.  ``ABSTAIN`` is
    compared like any class.
    """
    if resolution < 2:
        raise ValueError("resolution must be >= 2")
    points = grid_points(base, resolution)
    return _compare(base, crb, points, {"grid": resolution})


def verify_random(base: FuzzyRuleBase, crb: CrispRuleBase, n: int, seed: int = 0) -> VerificationReport:
    if n < 1:
        raise ValueError("need at least one sample")
    rng = np.random.default_rng(seed)
    lo, hi = np.array(sampling_bounds(base)).T
    points = rng.uniform(lo, hi, size=(n, base.n_features))
    return _compare(base, crb, points, {"random": n, "seed": seed})


def joint_activations(base: FuzzyRuleBase, max_rules: int = MAX_EXHAUSTIVE_RULES) -> dict[tuple[int, ...], Hyperrectangle]:
    """Intersection of supports for every non-empty subset of rules."""
    if base.n_rules > max_rules:
        raise ValueError(f"exhaustive enumeration refused for {base.n_rules} rules (limit {max_rules})")
    supports = [support_of_rule(r, base) for r in base.rules]
    out = {}
    for k in range(1, base.n_rules + 1):
        for subset in combinations(range(base.n_rules), k):
            out[subset] = reduce(box_intersect, (supports[r] for r in subset))
    return out


def brute_force_compatible_subsets(base: FuzzyRuleBase, max_rules: int = MAX_EXHAUSTIVE_RULES) -> list[CompatibleSubset]:
    """Every subset with a non-empty compatible region, without any pruning."""
    supports = [support_of_rule(r, base) for r in base.rules]
    found = []
    for subset, jact in joint_activations(base, max_rules).items():
        rest = union_of_boxes((s for k, s in enumerate(supports) if k not in subset), base.n_features)
        region = region_difference(Region.from_box(jact), rest)
        if not region.is_empty:
            found.append(CompatibleSubset(subset, jact, region))
    found.sort(key=lambda c: c.rules)
    return found


def subsets_agree(found: list[CompatibleSubset], expected: list[CompatibleSubset]) -> bool:
    """Same rule sets in the same order, equal joint activations and equal regions as point sets."""
    if [c.rules for c in found] != [c.rules for c in expected]:
        return False
    return all(
        f.joint_activation == e.joint_activation and same_point_set(f.region, e.region)
        for f, e in zip(found, expected)
    )


@dataclass(frozen=True)
class BoundaryGrid:
    """Class labels on a regular 2-D grid; ``labels[i, j]`` is at ``(x_j, y_i)``."""

    x_min: float
    x_max: float
    y_min: float
    y_max: float
    resolution: int
    labels: np.ndarray

    @property
    def xs(self) -> np.ndarray:
        return np.linspace(self.x_min, self.x_max, self.resolution)

    @property
    def ys(self) -> np.ndarray:
        return np.linspace(self.y_min, self.y_max, self.resolution)

    def label_at(self, x: float, y: float) -> int:
        j = int(np.abs(self.xs - x).argmin())
        i = int(np.abs(self.ys - y).argmin())
        return int(self.labels[i, j])

    def to_csv(self) -> str:
        buf = io.StringIO()
        head = [repr(float(v)) for v in (self.x_min, self.x_max, self.y_min, self.y_max)]
        buf.write(",".join(head + [str(self.resolution)]) + "\n")
        for row in self.labels:
            buf.write(",".join(str(int(v)) for v in row) + "\n")
        return buf.getvalue()


def export_decision_boundary(classifier, bounds=None, resolution: int = 200) -> BoundaryGrid:
    """Label grid of a 2-feature fuzzy or crisp classifier (``ABSTAIN`` is -1).

    ``bounds`` is ``((x_min, x_max), (y_min, y_max))``; by default the fuzzy
    base's sampling box.
    """
    if isinstance(classifier, CrispRuleBase):
        base = classifier.source
    elif isinstance(classifier, FuzzyRuleBase):
        base = classifier
    else:
        raise TypeError(f"not a classifier: {type(classifier).__name__}")
    if base.n_features != 2:
        raise ValueError(f"decision boundary export needs 2 features, got {base.n_features}")
    if resolution < 2:
        raise ValueError("resolution must be >= 2")
    (x0, x1), (y0, y1) = bounds if bounds is not None else sampling_bounds(base)
    xs = np.linspace(x0, x1, resolution)
    ys = np.linspace(y0, y1, resolution)
    gx, gy = np.meshgrid(xs, ys)
    labels = predict(classifier, np.stack([gx.ravel(), gy.ravel()], axis=1)).reshape(resolution, resolution)
    return BoundaryGrid(float(x0), float(x1), float(y0), float(y1), resolution, labels)
