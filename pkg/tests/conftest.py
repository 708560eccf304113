import random
from pathlib import Path

import pytest

from projplane.fields import RATIONAL, make_prime_field
from projplane.vec3 import Vec3

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"

FIELDS = [RATIONAL, make_prime_field(2), make_prime_field(3), make_prime_field(7), make_prime_field(101)]
FIELD_IDS = [F.name for F in FIELDS]


@pytest.fixture(params=FIELDS, ids=FIELD_IDS)
def field(request):
    return request.param


@pytest.fixture
def rng():
    return random.Random(20240611)


def rand_vec(F, rng, nonzero=False):
    while True:
        v = Vec3(F.random(rng), F.random(rng), F.random(rng))
        if not nonzero or not v.is_zero():
            return v


def rand_nonzero_scalar(F, rng):
    while True:
        r = F.random(rng)
        if r != 0:
            return r


# ---------------------------------------------------------------------------
# acceptance criteria summary: one PASS/FAIL line per criterion

_criteria: dict[int, dict] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if rep.when == "call" or (rep.when == "setup" and not rep.passed):
        number, text = marker.args
        entry = _criteria.setdefault(number, {"text": text, "ok": True, "failed": []})
        if not rep.passed:
            entry["ok"] = False
            entry["failed"].append(item.name)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for number in sorted(_criteria):
        entry = _criteria[number]
        status = "PASS" if entry["ok"] else "FAIL"
        line = f"[{status}] criterion {number}: {entry['text']}"
        if entry["failed"]:
            line += f"  (failed: {', '.join(entry['failed'])})"
        terminalreporter.write_line(line)
