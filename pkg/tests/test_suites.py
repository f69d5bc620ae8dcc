import pytest

from tabkit.config import TabkitConfig
from tabkit.suites import SUITES, expect, run_cases, run_suite


@pytest.mark.parametrize(
    "name", ["example-2-5", "sigma", "example-3-6", "example-4-2", "rho-ab", "hw"]
)
def test_worked_examples(name):
    report = run_suite(name, TabkitConfig())
    assert report.passed, report.mismatches


def test_expect_records_failures():
    assert expect("fine", True, x=1).mismatches == []
    failed = expect("broken", False, x=1)
    assert not failed.passed
    assert failed.mismatches == ["broken"]
    assert failed.details == {"x": 1}


@pytest.mark.parametrize("threads", [1, 3])
def test_run_cases_merges_in_key_order(threads):
    cases = {
        "b": lambda: expect("b", False),
        "a": lambda: expect("a", True),
        "c": lambda: expect("c", False),
    }
    report = run_cases("demo", cases, threads)
    assert not report.passed
    assert report.details == {"cases": 3, "failed": ["b", "c"]}
    assert report.mismatches == ["b: b", "c: c"]


def test_threads_do_not_change_reports():
    one = run_suite("hw", TabkitConfig(threads=1))
    many = run_suite("hw", TabkitConfig(threads=4))
    assert one == many


def test_every_suite_is_registered():
    assert {"cauchy", "jt", "hexp", "stroomer", "symmetry", "roundtrip", "determinism"} <= set(
        SUITES
    )


def test_roundtrip_suite_covers_mixed_parities():
    report = run_suite("roundtrip", TabkitConfig(window=(1, 1), threads=2))
    assert report.passed, report.mismatches
    # seven bijections per two-letter pattern, three for the three-letter one
    assert report.details["cases"] == 3 * 7 + 3
