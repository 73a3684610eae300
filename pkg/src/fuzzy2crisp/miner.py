"""Crisp rule bases equivalent to fuzzy rule bases.

The input space is split into compatible regions: for a set of rules ``R``,
the points where exactly the rules of ``R`` have positive truth degree.
Candidate sets are enumerated level by level with an Apriori join/prune, since
an empty joint activation can never become non-empty for a superset.  Inside a
region only the rules of ``R`` matter, so each region gets a handful of crisp
rules comparing truth degrees (sufficient mode) or per-class score sums
(additive mode).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Sequence

import numpy as np

from .fuzzy import (
    ABSTAIN,
    ADDITIVE,
    MODES,
    SUFFICIENT,
    FuzzyRuleBase,
    class_sums,
    support_of_rule,
    truth_degrees,
)
from .regions import (
    Hyperrectangle,
    Region,
    box_intersect,
    decompose_by_cover,
    region_difference,
    union_of_boxes,
)

REGIONS = "regions"
BOXES = "boxes"
GEOMETRIES = (REGIONS, BOXES)


@dataclass(frozen=True)
class ComparisonCondition:
    """``max(mu_s for s in subjects) >= max(mu_r for r in rivals)``.

    Subjects share one score vector; rivals are the other rules of the
    compatible set, all with a different score vector.
    """

    subjects: tuple[int, ...]
    rivals: tuple[int, ...]

    def describe(self, names: Sequence[str]) -> str:
        lhs = " | ".join(names[s] for s in self.subjects)
        rhs = " | ".join(names[r] for r in self.rivals)
        return f"mu[{lhs}] >= mu[{rhs}]"


@dataclass(frozen=True)
class ScoreSumCondition:
    """Score sum of ``subject_class`` is at least that of every rival class."""

    subject_class: int
    rivals: tuple[int, ...]

    def describe(self, names: Sequence[str]) -> str:
        rhs = ", ".join(str(c) for c in self.rivals)
        return f"sum[{self.subject_class}] >= max sum[{rhs}]"


@dataclass(frozen=True)
class CrispRule:
    region: Region
    consequent: int
    condition: ComparisonCondition | ScoreSumCondition | None
    subset: tuple[int, ...]

    def __post_init__(self):
        if self.region.is_empty:
            raise ValueError("crisp rule region cannot be empty")

    def describe(self, names: Sequence[str] | None = None) -> str:
        names = names or [f"r{i + 1}" for i in range(max(self.subset) + 1)]
        text = f"IF X in {self.region}"
        if self.condition is not None:
            text += f" AND {self.condition.describe(names)}"
        return text + f" THEN Y IS {self.consequent}"


@dataclass(frozen=True)
class CompatibleSubset:
    rules: tuple[int, ...]
    joint_activation: Hyperrectangle
    region: Region


@dataclass(frozen=True)
class CrispRuleBase:
    rules: tuple[CrispRule, ...]
    mode: str
    geometry: str
    source: FuzzyRuleBase

    def __post_init__(self):
        object.__setattr__(self, "rules", tuple(self.rules))
        if self.mode not in MODES:
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.geometry not in GEOMETRIES:
            raise ValueError(f"unknown geometry {self.geometry!r}")

    def __len__(self):
        return len(self.rules)

    @property
    def subsets(self) -> list[tuple[int, ...]]:
        """Distinct compatible rule sets, in rule order."""
        return list(dict.fromkeys(r.subset for r in self.rules))

    def cells(self) -> list[tuple[Region, tuple[int, ...], list[CrispRule]]]:
        """Consecutive rules sharing one region, as ``(region, subset, rules)``."""
        out = []
        for rule in self.rules:
            if out and out[-1][0] == rule.region and out[-1][1] == rule.subset:
                out[-1][2].append(rule)
            else:
                out.append((rule.region, rule.subset, [rule]))
        return out

    def predict(self, points) -> np.ndarray:
        return predict_crisp(self, points)

    def classify(self, x) -> int:
        return classify_crisp(self, x)


def rule_supports(base: FuzzyRuleBase) -> list[Hyperrectangle]:
    return [support_of_rule(rule, base) for rule in base.rules]


def combine_regions(previous: Iterable[Sequence[int]]) -> list[tuple[int, ...]]:
    """Apriori join and prune over sorted index tuples of equal size ``k - 1``.

    Two sets are joined when they share their first ``k - 2`` items; a
    candidate survives only if every one of its ``(k - 1)``-subsets is in
    ``previous``.
    """
    prev = sorted({tuple(sorted(s)) for s in previous})
    known = set(prev)
    out = set()
    for i, left in enumerate(prev):
        for right in prev[i + 1:]:
            if left[:-1] != right[:-1]:
                # prev is sorted, so no later entry shares this prefix either
                break
            cand = left + right[-1:]
            if all(cand[:j] + cand[j + 1:] in known for j in range(len(cand))):
                out.add(cand)
    return sorted(out)


def joint_activation(subset: Sequence[int], supports: Sequence[Hyperrectangle]) -> Hyperrectangle:
    return reduce(box_intersect, (supports[r] for r in subset))


def _carve(jact: Hyperrectangle, subset: Sequence[int], supports: Sequence[Hyperrectangle]) -> Region:
    members = set(subset)
    others = [s for k, s in enumerate(supports) if k not in members]
    region = Region.from_box(jact)
    for s in others:
        if region.is_empty:
            break
        region = region_difference(region, s)
    return region


def compatible_region(subset: Sequence[int], base: FuzzyRuleBase, supports=None) -> Region:
    """Points where exactly the rules in ``subset`` have positive truth degree."""
    if not subset:
        raise ValueError("compatible region needs a non-empty rule set")
    supports = rule_supports(base) if supports is None else supports
    jact = joint_activation(subset, supports)
    if jact.is_empty:
        return Region.empty(base.n_features)
    return _carve(jact, subset, supports)


def compatible_subsets(base: FuzzyRuleBase) -> list[CompatibleSubset]:
    """All rule sets with a non-empty compatible region, via Apriori search."""
    supports = rule_supports(base)
    found = []
    frontier = {}
    for r, s in enumerate(supports):
        if not s.is_empty:
            frontier[(r,)] = s
    while frontier:
        for subset, jact in frontier.items():
            region = _carve(jact, subset, supports)
            if not region.is_empty:
                found.append(CompatibleSubset(subset, jact, region))
        nxt = {}
        for cand in combine_regions(frontier):
            jact = box_intersect(frontier[cand[:-1]], supports[cand[-1]])
            if not jact.is_empty:
                nxt[cand] = jact
        frontier = nxt
    found.sort(key=lambda c: c.rules)
    return found


def _sufficient_rules(base: FuzzyRuleBase, subset: tuple[int, ...], region: Region) -> list[CrispRule]:
    groups: dict[tuple[int, ...], list[int]] = {}
    for r in subset:
        groups.setdefault(base.rules[r].scores, []).append(r)
    if len(groups) == 1:
        (members,) = groups.values()
        return [CrispRule(region, base.rules[members[0]].consequent, None, subset)]
    out = []
    for members in groups.values():
        rivals = tuple(r for r in subset if r not in members)
        cond = ComparisonCondition(tuple(members), rivals)
        out.append(CrispRule(region, base.rules[members[0]].consequent, cond, subset))
    return out


def _additive_rules(base: FuzzyRuleBase, subset: tuple[int, ...], region: Region) -> list[CrispRule]:
    present = sorted({c for r in subset for c, s in enumerate(base.rules[r].scores) if s})
    if len(present) == 1:
        return [CrispRule(region, present[0], None, subset)]
    return [
        CrispRule(region, c, ScoreSumCondition(c, tuple(o for o in present if o != c)), subset)
        for c in present
    ]


def _emit(base: FuzzyRuleBase, mode: str, subset, region) -> list[CrispRule]:
    if mode == SUFFICIENT:
        return _sufficient_rules(base, subset, region)
    if mode == ADDITIVE:
        return _additive_rules(base, subset, region)
    raise ValueError(f"unknown mode {mode!r}")


def mine_regions(base: FuzzyRuleBase, mode: str | None = None) -> CrispRuleBase:
    mode = base.mode if mode is None else mode
    rules = []
    for comp in compatible_subsets(base):
        rules.extend(_emit(base, mode, comp.rules, comp.region))
    return CrispRuleBase(tuple(rules), mode, REGIONS, base)


def mine_sufficient(base: FuzzyRuleBase) -> CrispRuleBase:
    """Crisp rules on compatible regions, equivalent under sufficient inference.

    One rule per distinct score vector inside each region; the comparison is
    dropped when a region holds a single score vector.
    """
    return mine_regions(base, SUFFICIENT)


def mine_additive(base: FuzzyRuleBase) -> CrispRuleBase:
    return mine_regions(base, ADDITIVE)


def mine_hyperrectangles(base: FuzzyRuleBase, mode: str | None = None) -> CrispRuleBase:
    """Crisp rules on disjoint boxes instead of compatible regions.

    The rule supports are cut along every support endpoint, so each cell is
    either inside or outside each support; cells with the same active rule set
    are merged into larger boxes where they touch exactly.
    """
    mode = base.mode if mode is None else mode
    rules = []
    for cover, boxes in decompose_by_cover(rule_supports(base)):
        subset = tuple(sorted(cover))
        for box in boxes:
            rules.extend(_emit(base, mode, subset, Region.from_box(box)))
    return CrispRuleBase(tuple(rules), mode, BOXES, base)


def mine(base: FuzzyRuleBase, mode: str | None = None, geometry: str = REGIONS) -> CrispRuleBase:
    if geometry == REGIONS:
        return mine_regions(base, mode)
    if geometry == BOXES:
        return mine_hyperrectangles(base, mode)
    raise ValueError(f"unknown geometry {geometry!r}")


def coverage(base: FuzzyRuleBase) -> Region:
    """Union of all non-empty compatible regions."""
    boxes = tuple(b for comp in compatible_subsets(base) for b in comp.region.boxes)
    return Region(base.n_features, boxes).canonical()


def support_union(base: FuzzyRuleBase) -> Region:
    return union_of_boxes(rule_supports(base), base.n_features)


def _decide_sufficient(mu: np.ndarray, rules: list[CrispRule]) -> np.ndarray:
    n = mu.shape[0]
    none = np.iinfo(np.int64).max
    best_witness = np.full(n, none)
    decision = np.full(n, ABSTAIN)
    for rule in rules:
        if rule.condition is None:
            witness = np.full(n, min(rule.subset))
        else:
            subj = list(rule.condition.subjects)
            top = mu[:, subj].max(axis=1)
            holds = top >= mu[:, list(rule.condition.rivals)].max(axis=1)
            # lowest subject index attaining the subject maximum
            first = np.argmax(mu[:, subj] == top[:, None], axis=1)
            witness = np.where(holds, np.asarray(subj)[first], none)
        better = witness < best_witness
        best_witness = np.where(better, witness, best_witness)
        decision = np.where(better, rule.consequent, decision)
    return decision


def _decide_additive(mu: np.ndarray, scores: np.ndarray, subset, rules: list[CrispRule]) -> np.ndarray:
    n = mu.shape[0]
    decision = np.full(n, ABSTAIN)
    sums = class_sums(mu, scores, subset) if any(r.condition is not None for r in rules) else None
    for rule in sorted(rules, key=lambda r: r.consequent):
        if rule.condition is None:
            holds = np.ones(n, dtype=bool)
        else:
            cond = rule.condition
            holds = sums[:, cond.subject_class] >= sums[:, list(cond.rivals)].max(axis=1)
        decision = np.where((decision == ABSTAIN) & holds, rule.consequent, decision)
    return decision


def predict_crisp(crb: CrispRuleBase, points) -> np.ndarray:
    """Decisions of the crisp rule base at each point; ``ABSTAIN`` off coverage.

    Regions are disjoint, so each point is settled by the rules of at most one
    region.  Truth degrees feed the comparison conditions; ties resolve to the
    lowest rule index (sufficient) or the lowest class index (additive).
    """
    mu = truth_degrees(crb.source, points)
    out = np.full(mu.shape[0], ABSTAIN)
    pts = np.asarray(points, dtype=float).reshape(mu.shape[0], -1)
    scores = crb.source.score_matrix
    for region, subset, rules in crb.cells():
        idx = np.flatnonzero(region.contains_points(pts))
        if idx.size == 0:
            continue
        sub_mu = mu[idx]
        if crb.mode == SUFFICIENT:
            out[idx] = _decide_sufficient(sub_mu, rules)
        else:
            out[idx] = _decide_additive(sub_mu, scores, subset, rules)
    return out


def classify_crisp(crb: CrispRuleBase, x) -> int:
    return int(predict_crisp(crb, x)[0])
