"""One test per acceptance criterion; each prints a PASS/FAIL line."""

import pytest

from lagrangian import battery


def _evaluate(fn):
    try:
        return fn(0) if "seed" in fn.__code__.co_varnames else fn()
    except Exception as exc:  # report the crash as a named failure
        num = battery.CRITERIA.index(fn) + 1
        crit = battery.Criterion(num, fn.__name__, f"criterion-{num}")
        crit.add(f"raised {type(exc).__name__}: {exc}", False)
        return crit


@pytest.mark.parametrize("fn", battery.CRITERIA, ids=[f"criterion_{i}" for i in range(1, 13)])
def test_criterion(fn, capsys):
    crit = _evaluate(fn)
    verdict = "PASS" if crit.passed else "FAIL"
    with capsys.disabled():
        print(f"\n{verdict} criterion {crit.number}: {crit.title} ({len(crit.checks)} checks)")
    assert crit.passed, crit.failures


def test_exactly_twelve_criteria():
    assert len(battery.CRITERIA) == 12


if __name__ == "__main__":
    for c in battery.run_all():
        print(f"{'PASS' if c.passed else 'FAIL'} criterion {c.number}: {c.title}")
