"""Worst-case crisp rule counts and the degree-of-complexity ratio."""

from __future__ import annotations

from dataclasses import asdict, dataclass
from decimal import ROUND_HALF_UP, Decimal

from .fuzzy import SUFFICIENT, FuzzyRuleBase
from .miner import mine_hyperrectangles, mine_regions

MAX_RULES = 63


def _check_n(n: int) -> None:
    if n < 1:
        raise ValueError(f"rule count must be >= 1, got {n}")
    if n > MAX_RULES:
        raise OverflowError(f"rule count {n} exceeds the supported maximum of {MAX_RULES}")


def upper_bound_sufficient(n: int) -> int:
    """Crisp rules when every subset of ``n`` rules is compatible: ``n * 2**(n-1)``."""
    _check_n(n)
    return n * 2 ** (n - 1)


def upper_bound_additive(n: int, n_classes: int) -> int:
    _check_n(n)
    if n_classes < 1:
        raise ValueError(f"class count must be >= 1, got {n_classes}")
    return (2**n - 1) * n_classes


def degree_of_complexity(crisp_count: int, n: int) -> float:
    if crisp_count < 0:
        raise ValueError("crisp rule count cannot be negative")
    return crisp_count / upper_bound_sufficient(n)


def round_half_up(value: float, places: int = 2) -> float:
    quantum = Decimal(1).scaleb(-places)
    return float(Decimal(repr(value)).quantize(quantum, rounding=ROUND_HALF_UP))


@dataclass(frozen=True)
class ComplexityReport:
    fuzzy_rule_count: int
    crisp_rule_count: int
    hyperrect_rule_count: int
    sufficient_upper_bound: int
    additive_upper_bound: int
    degree_of_complexity: float

    @property
    def rounded_complexity(self) -> float:
        return round_half_up(self.degree_of_complexity)

    def as_dict(self) -> dict:
        out = asdict(self)
        out["degree_of_complexity_rounded"] = self.rounded_complexity
        return out

    def summary(self) -> str:
        return (
            f"{self.fuzzy_rule_count} fuzzy → {self.crisp_rule_count} crisp, "
            f"complexity {self.rounded_complexity:g}"
        )


def complexity_report(base: FuzzyRuleBase) -> ComplexityReport:
    """Report for ``base``; crisp counts are always taken under sufficient inference.

    The ratio normalises by the sufficient-mode bound, so the counts it
    divides are mined in that mode regardless of ``base.mode``.
    """
    n = base.n_rules
    crisp = len(mine_regions(base, SUFFICIENT))
    boxes = len(mine_hyperrectangles(base, SUFFICIENT))
    return ComplexityReport(
        fuzzy_rule_count=n,
        crisp_rule_count=crisp,
        hyperrect_rule_count=boxes,
        sufficient_upper_bound=upper_bound_sufficient(n),
        additive_upper_bound=upper_bound_additive(n, base.n_classes),
        degree_of_complexity=degree_of_complexity(crisp, n),
    )
