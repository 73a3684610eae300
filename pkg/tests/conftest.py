import itertools

import numpy as np
import pytest

from fuzzy2crisp.datasets import random_rule_base, worked_example

_ACCEPTANCE_LINES = []


@pytest.fixture
def frb():
    return worked_example()


@pytest.fixture
def criterion():
    """Record one pass/fail line per acceptance criterion for the terminal summary."""

    def record(number, ok, detail):
        _ACCEPTANCE_LINES.append(f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {detail}")
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def random_bases(count, seed=0, features=(1, 2, 3), rules=range(1, 7), classes=(2, 3)):
    """Deterministic sweep over (M, N_R, C) combinations, cycling until ``count`` bases."""
    combos = itertools.cycle(itertools.product(features, rules, classes))
    rng = np.random.default_rng(seed)
    out = []
    for m, n, c in itertools.islice(combos, count):
        out.append(random_rule_base(rng, n_features=m, n_rules=n, n_labels=(2, 5), n_classes=c))
    return out


def active_pattern(base, points):
    """Set of rules with positive truth degree at each point, straight from memberships."""
    from fuzzy2crisp.fuzzy import truth_degrees

    mu = truth_degrees(base, points)
    return [tuple(np.flatnonzero(row > 0).tolist()) for row in mu]
