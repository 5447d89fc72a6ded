"""Acceptance gate: runs every self-verification suite exactly once and
reports one pass/fail line per criterion.

These are the heavyweight statistical checks (ring axioms on thousands of
random triples, regularity on ten thousand elements per configuration, and
so on). They share their implementation with ``loewy selftest`` via the
:mod:`loewy.acceptance` module. Expect several minutes of runtime.
"""

import pytest

from loewy import acceptance

_NAMES = [suite.__name__.replace("suite_", "").replace("_", "-")
          for suite in acceptance.SUITES]
_CACHE = {}


def _results():
    # Cache failures too: a crash in one suite must not re-run the rest
    # for every parametrized case.
    if "results" not in _CACHE:
        try:
            _CACHE["results"] = {r.name: r for r in acceptance.run_all()}
        except BaseException as exc:  # pragma: no cover
            _CACHE["results"] = exc
    got = _CACHE["results"]
    if isinstance(got, BaseException):
        raise got
    return got


@pytest.mark.parametrize("name", _NAMES)
def test_criterion(name, capsys):
    result = _results()[name]
    line = "%s: %s -- %s" % (name, "pass" if result.passed else "FAIL", result.detail)
    with capsys.disabled():
        print(line)
    assert result.passed, line
