"""
Tests for the verification suites and their registry
"""
from typing import Iterator

import pytest

from balseg.checks import BaseCheck, VerifyConfig, check_registry
from balseg.checks.base_check import MAX_REPORTED_FAILURES, Case
from balseg.counting import CountingEvaluator
from balseg.errors import InternalInconsistencyError, InvalidArgumentError

SMALL = {"max_L": 8, "brute_max": 8, "h_max": 4}

SUITES = [
    "golden_tables", "oracle", "symmetry", "row_sums",
    "identities", "bijections", "generating_functions", "profiles",
]


def test_registry_order():
    assert list(check_registry.checks) == SUITES
    assert check_registry.get_check_count() == len(SUITES)
    assert check_registry.has_check("oracle")
    with pytest.raises(KeyError):
        check_registry.get("nothing")


@pytest.mark.parametrize("name", SUITES)
def test_suite_passes_on_small_config(name):
    report = check_registry.get(name).execute(SMALL)
    assert report["name"] == name
    assert report["status"] == "pass", report["failures"]
    assert int(report["cases"]) > 0


@pytest.mark.parametrize("name", ["oracle", "bijections"])
def test_brute_force_suites_skip(name):
    report = check_registry.get(name).execute({"brute_max": 0})
    assert report["status"] == "skipped"
    assert report["cases"] == "0"


def test_golden_tables_with_full_rows():
    report = check_registry.get("golden_tables").execute({"max_L": 10, "h_max": 6})
    assert report["status"] == "pass"


def test_invalid_config():
    with pytest.raises(InvalidArgumentError):
        check_registry.get("symmetry").execute({"max_L": -1})


def test_list_checks_describes_config():
    listed = check_registry.list_checks()
    assert [c["name"] for c in listed] == SUITES
    assert "max_L" in listed[0]["input_schema"]["properties"]


class AlwaysFailing(BaseCheck):
    name = "always_failing"
    description = "fails every case"

    def cases(self, config: VerifyConfig, evaluator: CountingEvaluator) -> Iterator[Case]:
        for i in range(25):
            yield False, f"case {i}"


def test_failures_are_reported_and_truncated():
    report = AlwaysFailing().execute({})
    assert report["status"] == "fail"
    assert report["cases"] == "25"
    assert report["failures"] == [f"case {i}" for i in range(MAX_REPORTED_FAILURES)]


def test_bijections_on_longer_words():
    report = check_registry.get("bijections").execute({"max_L": 8, "brute_max": 14, "h_max": 4})
    assert report["status"] == "pass", report["failures"]


def test_profile_inconsistency_fails_the_suite(monkeypatch):
    def inconsistent(family, h, evaluator=None):
        raise InternalInconsistencyError(f"{family}(.,{h}) is not periodic")

    monkeypatch.setattr("balseg.checks.generating.asymptotic_profile", inconsistent)
    report = check_registry.get("profiles").execute(SMALL)
    assert report["status"] == "fail"
    assert report["failures"][0] == "s(.,2) is not periodic"
