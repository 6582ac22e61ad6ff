import random
from fractions import Fraction as F

import pytest

from isorealize.metric import FiniteMetricSpace, discrete_space

_RESULTS: dict = {}


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    crit = getattr(report, "criterion", None)
    if crit is None:
        return
    entry = _RESULTS.setdefault(crit, {"passed": True, "tests": 0})
    entry["tests"] += 1
    entry["passed"] &= report.passed


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    marker = item.get_closest_marker("criterion")
    if marker is not None:
        outcome.get_result().criterion = marker.args[0]


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for crit in sorted(_RESULTS):
        entry = _RESULTS[crit]
        status = "PASS" if entry["passed"] else "FAIL"
        terminalreporter.write_line(f"criterion {crit:>2}: {status}  ({entry['tests']} checks)")


# -- shared spaces -------------------------------------------------------------


@pytest.fixture
def c3():
    return discrete_space(3)


@pytest.fixture
def rigid3():
    """Three distinct distances; only the identity preserves them."""
    return FiniteMetricSpace("abc", [[0, 1, F(1, 2)], [1, 0, F(3, 4)], [F(1, 2), F(3, 4), 0]])


@pytest.fixture
def listed_rigid_matrix():
    # [[0,1,1/2],[1,0,1/4],[1/2,1/4,0]] breaks the triangle inequality (1 > 3/4);
    # isometry checks do not need the axioms, so it is kept unvalidated
    return FiniteMetricSpace("abc", [[0, 1, F(1, 2)], [1, 0, F(1, 4)], [F(1, 2), F(1, 4), 0]], check=False)


def random_space(rng: random.Random, n: int, kind: str) -> FiniteMetricSpace:
    """Random rational metric of one of three flavors."""
    labels = [str(i) for i in range(n)]
    if kind == "discrete":
        return discrete_space(n)
    if kind == "perturbed":
        # all distances in [1, 2) so the triangle inequality holds automatically
        choices = [F(1), F(3, 2), F(5, 4)] if rng.random() < 0.5 else [F(1) + F(rng.randrange(8), 8) for _ in range(4)]
        d = [[F(0)] * n for _ in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                d[i][j] = d[j][i] = rng.choice(choices)
        return FiniteMetricSpace(labels, d)
    if kind == "path":
        pos = sorted(rng.sample(range(0, 4 * n), n))
        if rng.random() < 0.5:
            # symmetric placements give nontrivial groups
            pos = sorted({p for p in pos} | {pos[-1] + pos[0] - p for p in pos})[:n]
            while len(pos) < n:
                pos.append(pos[-1] + 1)
        return FiniteMetricSpace(labels, [[F(abs(a - b), 3) for b in pos] for a in pos])
    raise ValueError(kind)


def random_unit_space(rng: random.Random, n: int) -> FiniteMetricSpace:
    from isorealize.metric import rescale_to_unit_diameter

    return rescale_to_unit_diameter(random_space(rng, n, rng.choice(["discrete", "perturbed", "path"])))


@pytest.fixture
def rng():
    return random.Random(20261017)
